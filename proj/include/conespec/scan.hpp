#ifndef CONESPEC_SCAN_HPP
#define CONESPEC_SCAN_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "conespec/cone.hpp"
#include "conespec/error.hpp"
#include "conespec/native_format.hpp"
#include "conespec/singular_format.hpp"

namespace conespec {

enum class Predicate { N3dZero, ChiNonzero };

inline Predicate parse_predicate(const std::string& s) {
  if (s == "n3d_zero") return Predicate::N3dZero;
  if (s == "chi_nonzero") return Predicate::ChiNonzero;
  throw InputError("E_PREDICATE", "unknown predicate '" + s + "' (expected n3d_zero or chi_nonzero)");
}

inline const char* predicate_name(Predicate p) { return p == Predicate::N3dZero ? "n3d_zero" : "chi_nonzero"; }

struct ParamRange {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  std::int64_t size() const { return hi < lo ? 0 : hi - lo + 1; }
};

/// "name=lo..hi"
inline ParamRange parse_range(const std::string& text) {
  const auto eq = text.find('=');
  const auto dots = text.find("..");
  if (eq == std::string::npos || dots == std::string::npos || dots < eq)
    throw InputError("E_RANGE", "range '" + text + "' must look like name=lo..hi");
  ParamRange r;
  r.name = text.substr(0, eq);
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(eq + 1, dots - eq - 1);
    const std::string hi = text.substr(dots + 2);
    r.lo = std::stoll(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    r.hi = std::stoll(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
  } catch (const std::logic_error&) {
    throw InputError("E_RANGE", "range '" + text + "' has a non-integer bound");
  }
  if (r.name.empty()) throw InputError("E_RANGE", "range '" + text + "' has no parameter name");
  return r;
}

/// "name=value"
inline std::pair<std::string, std::int64_t> parse_param(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw InputError("E_PARAM", "parameter '" + text + "' must look like name=value");
  try {
    std::size_t used = 0;
    const std::string v = text.substr(eq + 1);
    const std::int64_t x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return {text.substr(0, eq), x};
  } catch (const std::logic_error&) {
    throw InputError("E_PARAM", "parameter '" + text + "' has a non-integer value");
  }
}

struct ScanSpec {
  std::string template_text;
  std::vector<ParamRange> ranges;
  Binding fixed;
  std::vector<Predicate> predicates;
  std::int64_t cap = 1'000'000;
  unsigned jobs = 1;
};

struct ScanRow {
  std::vector<std::int64_t> params;
  bool valid = false;
  std::string error_code;
  std::int64_t d = 0;
  std::int64_t dprime = 0;
  std::optional<std::int64_t> n3;
  std::int64_t chi = 0;

  bool satisfies(Predicate p) const {
    if (!valid) return false;
    if (p == Predicate::N3dZero) return n3.has_value() && *n3 == 0;
    return chi != 0;
  }
};

struct ScanResult {
  std::vector<std::string> names;
  std::vector<ScanRow> rows;
};

inline ScanRow scan_point(const std::variant<SingularVectors, std::string>& tmpl, const Binding& binding,
                          std::vector<std::int64_t> params) {
  ScanRow row;
  row.params = std::move(params);
  try {
    CurveConfig cfg;
    if (const auto* sv = std::get_if<SingularVectors>(&tmpl)) {
      cfg = parse_singular(*sv, binding);
    } else {
      NativeConfig nc = parse_native(std::get<std::string>(tmpl), binding);
      if (!std::holds_alternative<CurveConfig>(nc))
        throw InputError("E_SCAN_MODE", "scan templates must describe a curve configuration");
      cfg = std::get<CurveConfig>(std::move(nc));
    }
    const ConeSpectrumTable t = theorem2_table(cfg);
    row.valid = true;
    row.d = t.d;
    row.dprime = t.dprime;
    row.chi = t.chi_u;
    if (t.d >= 3) row.n3 = t.at(0, 3);
  } catch (const InputError& e) {
    row.error_code = e.code();
  }
  return row;
}

/// Evaluates every grid point. Results are ordered lexicographically by the
/// parameter tuple (first range most significant) whatever the worker count.
inline ScanResult run_scan(const ScanSpec& spec) {
  ScanResult out;
  for (const auto& r : spec.ranges) {
    if (std::find(out.names.begin(), out.names.end(), r.name) != out.names.end())
      throw InputError("E_RANGE", "parameter '" + r.name + "' has more than one range");
    out.names.push_back(r.name);
  }

  std::int64_t total = 1;
  for (const auto& r : spec.ranges) {
    const std::int64_t s = r.size();
    if (s == 0) {
      total = 0;
      break;
    }
    if (total > spec.cap / s) {
      total = spec.cap + 1;
    } else {
      total *= s;
    }
  }
  if (total > spec.cap)
    throw InputError("E_CAP", "grid has more than " + std::to_string(spec.cap) + " points; raise --cap or narrow the ranges");

  std::variant<SingularVectors, std::string> tmpl;
  if (looks_like_singular(spec.template_text)) {
    tmpl = parse_singular_text(spec.template_text);
  } else {
    tmpl = spec.template_text;
  }

  std::vector<ScanRow> all(static_cast<std::size_t>(total));
  auto point_params = [&](std::int64_t index) {
    std::vector<std::int64_t> p(spec.ranges.size());
    for (std::size_t k = spec.ranges.size(); k-- > 0;) {
      const std::int64_t s = spec.ranges[k].size();
      p[k] = spec.ranges[k].lo + index % s;
      index /= s;
    }
    return p;
  };
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (std::int64_t idx = next++; idx < total; idx = next++) {
      auto params = point_params(idx);
      Binding b = spec.fixed;
      for (std::size_t k = 0; k < params.size(); ++k) b[spec.ranges[k].name] = params[k];
      all[static_cast<std::size_t>(idx)] = scan_point(tmpl, b, std::move(params));
    }
  };
  const unsigned jobs = std::max(1U, spec.jobs);
  if (jobs == 1 || total < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (auto& row : all) {
    bool keep = true;
    for (auto p : spec.predicates) keep = keep && row.satisfies(p);
    if (keep) out.rows.push_back(std::move(row));
  }
  return out;
}

inline std::string scan_csv(const ScanResult& res) {
  std::ostringstream out;
  for (const auto& n : res.names) out << n << ",";
  out << "d,dprime,n_3_over_d,chi_u,flags\n";
  for (const auto& row : res.rows) {
    for (auto v : row.params) out << v << ",";
    if (!row.valid) {
      out << "invalid,invalid,invalid,invalid,error:" << row.error_code << "\n";
      continue;
    }
    out << row.d << "," << row.dprime << ",";
    if (row.n3) {
      out << *row.n3;
    } else {
      out << "n/a";
    }
    out << "," << row.chi << ",";
    std::string flags;
    for (auto p : {Predicate::N3dZero, Predicate::ChiNonzero}) {
      if (!row.satisfies(p)) continue;
      if (!flags.empty()) flags += ";";
      flags += predicate_name(p);
    }
    out << flags << "\n";
  }
  return out.str();
}

}  // namespace conespec

#endif  // CONESPEC_SCAN_HPP
