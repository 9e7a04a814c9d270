#ifndef CONESPEC_EMIT_HPP
#define CONESPEC_EMIT_HPP

#include <cstdint>
#include <sstream>
#include <string>

#include "conespec/curve.hpp"
#include "conespec/error.hpp"

namespace conespec {

enum class TableFormat { Rows, Csv };

inline TableFormat parse_table_format(const std::string& s) {
  if (s == "rows") return TableFormat::Rows;
  if (s == "csv") return TableFormat::Csv;
  throw InputError("E_FORMAT", "unknown table format '" + s + "' (expected rows or csv)");
}

/// "rows": the e=0 and e=1 rows over i in [1,d], the e=2 row over [1,d-1],
/// the chi(U) line, then a note carrying the suppressed alpha=3 cell.
/// "csv": every cell, ordered by exponent.
inline std::string emit_table(const ConeSpectrumTable& t, TableFormat mode) {
  std::ostringstream out;
  if (mode == TableFormat::Rows) {
    for (int e = 0; e < 3; ++e) {
      const std::int64_t last = e == 2 ? t.d - 1 : t.d;
      out << "e=" << e << ":";
      for (std::int64_t i = 1; i <= last; ++i) out << (i == 1 ? " " : ",") << t.at(e, i);
      out << "\n";
    }
    out << "chi(U)=" << t.chi_u << "\n";
    out << "note: alpha=3 cell (e=2, i=d) has formula value " << t.at(2, t.d)
        << " and is not shown; integer-exponent cells are raw formula values, so the column i=d sums to chi(U) "
           "only when n_f(3) is counted as 1\n";
    return out.str();
  }
  out << "i,alpha,e,value\n";
  for (int e = 0; e < 3; ++e)
    for (std::int64_t i = 1; i <= t.d; ++i)
      out << i << "," << t.exponent(e, i).str() << "," << e << "," << t.at(e, i) << "\n";
  return out.str();
}

}  // namespace conespec

#endif  // CONESPEC_EMIT_HPP
