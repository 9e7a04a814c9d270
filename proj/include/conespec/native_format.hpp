#ifndef CONESPEC_NATIVE_FORMAT_HPP
#define CONESPEC_NATIVE_FORMAT_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "conespec/curve.hpp"
#include "conespec/error.hpp"
#include "conespec/expr.hpp"
#include "conespec/local.hpp"
#include "conespec/singular_format.hpp"
#include "conespec/spectrum.hpp"

namespace conespec {

using NativeConfig = std::variant<CurveConfig, ReducedConeConfig>;

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

class NativeParser {
public:
  NativeParser(std::string_view text, const Binding& binding) : text_(text), binding_(binding) {}

  NativeConfig parse() {
    std::istringstream in{std::string(text_)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const auto tokens = split_ws(raw);
      if (tokens.empty()) continue;
      dispatch(tokens);
    }
    line_ = 0;
    if (mode_ == Mode::Reduced) {
      if (!reduced_header_) fail("E_MISSING_HEADER", "reduced mode needs a 'reduced' header");
      reduced_.validate();
      return reduced_;
    }
    if (ambient_ != 2) fail("E_AMBIENT", "curve configurations live in the projective plane (ambient 2)");
    if (!incidence_pairs_.entries.empty() || saw_incidence_) curve_.incidence = incidence_pairs_;
    if (matrix_) curve_.incidence = *matrix_;
    curve_.validate();
    return curve_;
  }

private:
  enum class Mode { Unknown, Curve, Reduced };

  [[noreturn]] void fail(const std::string& code, const std::string& msg) const { throw InputError(code, msg, line_); }

  void enter(Mode m) {
    if (mode_ != Mode::Unknown && mode_ != m)
      fail("E_MIXED_MODE", "curve lines and reduced-mode lines cannot be mixed");
    mode_ = m;
  }

  std::int64_t integer(std::string_view text) {
    try {
      return eval_int(parse_expr(text), binding_);
    } catch (const InputError& e) {
      fail(e.code(), e.message());
    }
  }

  // key=value fields after the keyword; each key at most once.
  std::map<std::string, std::string> fields(const std::vector<std::string>& tokens, std::size_t from,
                                            const std::vector<std::string>& allowed) {
    std::map<std::string, std::string> out;
    for (std::size_t k = from; k < tokens.size(); ++k) {
      const auto eq = tokens[k].find('=');
      if (eq == std::string::npos || eq == 0) fail("E_SYNTAX", "expected key=value, got '" + tokens[k] + "'");
      const std::string key = tokens[k].substr(0, eq);
      bool ok = false;
      for (const auto& a : allowed) ok = ok || a == key;
      if (!ok) fail("E_UNKNOWN_FIELD", "unknown field '" + key + "'");
      if (!out.emplace(key, tokens[k].substr(eq + 1)).second) fail("E_DUPLICATE", "field '" + key + "' given twice");
    }
    return out;
  }

  std::string require(const std::map<std::string, std::string>& f, const std::string& key) {
    auto it = f.find(key);
    if (it == f.end() || it->second.empty()) fail("E_MISSING_FIELD", "missing field '" + key + "'");
    return it->second;
  }

  std::int64_t count_field(const std::map<std::string, std::string>& f) {
    auto it = f.find("count");
    const std::int64_t c = it == f.end() ? 1 : integer(it->second);
    if (c < 0) fail("E_COUNT", "count must be nonnegative");
    return c;
  }

  std::vector<std::int64_t> int_list(const std::string& text, char sep) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= text.size(); ++k) {
      if (k == text.size() || text[k] == sep) {
        if (k == start) fail("E_SYNTAX", "empty list entry in '" + text + "'");
        out.push_back(integer(std::string_view(text).substr(start, k - start)));
        start = k + 1;
      }
    }
    return out;
  }

  std::int64_t single_int(const std::vector<std::string>& tokens) {
    if (tokens.size() < 2) fail("E_SYNTAX", "'" + tokens[0] + "' takes one integer expression");
    std::string expr = tokens[1];
    for (std::size_t k = 2; k < tokens.size(); ++k) expr += " " + tokens[k];
    return integer(expr);
  }

  void dispatch(const std::vector<std::string>& t) {
    const std::string& kw = t[0];
    if (kw == "ambient") {
      if (saw_ambient_) fail("E_DUPLICATE", "ambient given twice");
      saw_ambient_ = true;
      ambient_ = single_int(t);
      if (ambient_ < 1) fail("E_AMBIENT", "ambient dimension must be positive");
    } else if (kw == "component") {
      enter(Mode::Curve);
      const auto f = fields(t, 1, {"degree", "mult", "count"});
      const GlobalComponent c{integer(require(f, "degree")), integer(require(f, "mult"))};
      if (c.degree < 1 || c.multiplicity < 1) fail("E_COMPONENT", "component degree and mult must be positive");
      for (std::int64_t k = count_field(f); k > 0; --k) curve_.components.push_back(c);
    } else if (kw == "point") {
      enter(Mode::Curve);
      point(t);
    } else if (kw == "nodes") {
      enter(Mode::Curve);
      if (saw_nodes_) fail("E_DUPLICATE", "nodes given twice");
      saw_nodes_ = true;
      curve_.nodes = single_int(t);
      if (curve_.nodes < 0) fail("E_NODES", "node count must be nonnegative");
    } else if (kw == "incidence") {
      enter(Mode::Curve);
      if (matrix_) fail("E_MIXED_INCIDENCE", "incidence multiset and matrix cannot both be given");
      saw_incidence_ = true;
      for (std::size_t k = 1; k < t.size(); ++k) {
        const auto x = t[k].find('x');
        if (x == std::string::npos || x == 0 || x + 1 == t[k].size())
          fail("E_SYNTAX", "expected <count>x<value>, got '" + t[k] + "'");
        const std::int64_t count = integer(std::string_view(t[k]).substr(0, x));
        const std::int64_t value = integer(std::string_view(t[k]).substr(x + 1));
        if (count < 0 || value < 1) fail("E_INCIDENCE_VALUE", "incidence needs count >= 0 and value >= 1");
        incidence_pairs_.entries.emplace_back(count, value);
      }
    } else if (kw == "incidence-matrix") {
      enter(Mode::Curve);
      if (saw_incidence_ || matrix_) fail("E_MIXED_INCIDENCE", "incidence given twice");
      std::string body;
      for (std::size_t k = 1; k < t.size(); ++k) body += t[k] + " ";
      for (std::size_t pos = 0; (pos = body.find(';', pos)) != std::string::npos; pos += 3) body.replace(pos, 1, " ; ");
      auto cells = split_ws(body);
      cells.insert(cells.begin(), t[0]);
      IncidenceMatrix m;
      std::vector<std::int64_t> row;
      for (std::size_t k = 1; k <= cells.size(); ++k) {
        if (k == cells.size() || cells[k] == ";") {
          if (row.empty()) {
            if (k == cells.size() && m.rows.empty()) break;
            fail("E_SYNTAX", "empty incidence-matrix row");
          }
          m.rows.push_back(std::move(row));
          row.clear();
        } else {
          const std::int64_t v = integer(cells[k]);
          if (v < 0) fail("E_INCIDENCE_VALUE", "incidence-matrix entries must be nonnegative");
          row.push_back(v);
        }
      }
      matrix_ = std::move(m);
    } else if (kw == "reduced") {
      enter(Mode::Reduced);
      if (reduced_header_) fail("E_DUPLICATE", "reduced header given twice");
      reduced_header_ = true;
      const auto f = fields(t, 1, {"n", "degree", "power"});
      reduced_.ambient_dim = static_cast<int>(integer(require(f, "n")));
      reduced_.degree = integer(require(f, "degree"));
      reduced_.power = f.count("power") ? integer(f.at("power")) : 1;
      if (reduced_.ambient_dim < 1 || reduced_.degree < 1 || reduced_.power < 1)
        fail("E_REDUCED_HEADER", "n, degree and power must be positive");
    } else if (kw == "localspectrum") {
      enter(Mode::Reduced);
      if (!reduced_header_) fail("E_MISSING_HEADER", "localspectrum before the 'reduced' header");
      std::string joined;
      for (std::size_t k = 1; k < t.size(); ++k) joined += t[k] + " ";
      try {
        reduced_.local_spectra.push_back(SpectrumVector::parse(joined, reduced_.ambient_dim));
      } catch (const InputError& e) {
        fail(e.code(), e.message());
      }
      check_local(reduced_.local_spectra.back());
    } else if (kw == "localwh") {
      enter(Mode::Reduced);
      if (!reduced_header_) fail("E_MISSING_HEADER", "localwh before the 'reduced' header");
      const auto f = fields(t, 1, {"weights", "degree"});
      WeightSystem ws{int_list(require(f, "weights"), ','), integer(require(f, "degree"))};
      if (ws.nvars() != reduced_.ambient_dim)
        fail("E_AMBIENT_MISMATCH", "localwh needs " + std::to_string(reduced_.ambient_dim) + " weights");
      try {
        reduced_.local_spectra.push_back(wh_spectrum(ws));
      } catch (const InputError& e) {
        fail(e.code(), e.message());
      }
    } else {
      fail("E_UNKNOWN_KEYWORD", "unknown keyword '" + kw + "'");
    }
  }

  void check_local(const SpectrumVector& s) {
    if (s.has_negative()) fail("E_NEGATIVE_MULTIPLICITY", "local spectrum has a negative multiplicity");
    if (!sv_support_check(s)) fail("E_SPECTRUM_SUPPORT", "local spectrum leaves (0, n)");
    if (!sv_symmetry_check(s)) fail("E_SPECTRUM_SYMMETRY", "local spectrum is not symmetric");
  }

  void point(const std::vector<std::string>& t) {
    const auto f = fields(t, 1, {"weights", "branches", "count"});
    SingularPoint p;
    if (f.count("weights")) {
      const auto ws = int_list(f.at("weights"), ',');
      if (ws.size() != 2) fail("E_WEIGHTS", "a point needs exactly two weights");
      p.w = ws[0];
      p.wp = ws[1];
      if (p.w < 1 || p.wp < 1) fail("E_WEIGHTS", "weights must be positive");
      if (std::gcd(p.w, p.wp) != 1) fail("E_WEIGHTS_NOT_COPRIME", "weights must be coprime");
    }
    const std::string br = require(f, "branches");
    std::size_t k = 0;
    while (k < br.size()) {
      if (br[k] != '(') fail("E_SYNTAX", "branches must look like (deg:mult)(deg:mult)...");
      const auto close = br.find(')', k);
      if (close == std::string::npos) fail("E_SYNTAX", "unterminated branch in '" + br + "'");
      const std::string inner = br.substr(k + 1, close - k - 1);
      const auto colon = inner.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == inner.size())
        fail("E_SYNTAX", "branch '(" + inner + ")' must be (deg:mult)");
      LocalBranch b{integer(std::string_view(inner).substr(0, colon)), integer(std::string_view(inner).substr(colon + 1))};
      if (b.weighted_degree < 1 || b.multiplicity < 1) fail("E_BRANCH", "branch degree and mult must be positive");
      p.branches.push_back(b);
      k = close + 1;
    }
    if (p.branches.empty()) fail("E_BRANCH", "a point needs at least one branch");
    if (!validate_branches(p)) fail("E_BRANCH_DEGREE", "branch weighted degrees must lie in {w, w', w*w'}");
    try {
      (void)p.milnor();
    } catch (const InputError& e) {
      fail(e.code(), e.message());
    }
    for (std::int64_t c = count_field(f); c > 0; --c) curve_.points.push_back(p);
  }

  std::string_view text_;
  const Binding& binding_;
  int line_ = 0;
  Mode mode_ = Mode::Unknown;
  std::int64_t ambient_ = 2;
  bool saw_ambient_ = false;
  bool saw_nodes_ = false;
  bool saw_incidence_ = false;
  bool reduced_header_ = false;
  CurveConfig curve_;
  IncidenceMultiset incidence_pairs_;
  std::optional<IncidenceMatrix> matrix_;
  ReducedConeConfig reduced_;
};

}  // namespace detail

/// Parses the line-oriented native format. Integer fields may be template
/// expressions (without spaces) over the names in `binding`.
inline NativeConfig parse_native(std::string_view text, const Binding& binding = {}) {
  return detail::NativeParser(text, binding).parse();
}

/// Either input format: the compatibility vectors when the text mentions GlCmp.
inline NativeConfig parse_config_text(std::string_view text, const Binding& binding = {}) {
  if (looks_like_singular(text)) return parse_singular(parse_singular_text(text), binding);
  return parse_native(text, binding);
}

inline std::string emit_native(const CurveConfig& cfg) {
  std::ostringstream out;
  out << "ambient 2\n";
  for (std::size_t k = 0; k < cfg.components.size();) {
    std::size_t run = k + 1;
    while (run < cfg.components.size() && cfg.components[run] == cfg.components[k]) ++run;
    out << "component degree=" << cfg.components[k].degree << " mult=" << cfg.components[k].multiplicity
        << " count=" << (run - k) << "\n";
    k = run;
  }
  for (std::size_t k = 0; k < cfg.points.size();) {
    std::size_t run = k + 1;
    while (run < cfg.points.size() && cfg.points[run] == cfg.points[k]) ++run;
    const auto& p = cfg.points[k];
    out << "point weights=" << p.w << "," << p.wp << " branches=";
    for (const auto& b : p.branches) out << "(" << b.weighted_degree << ":" << b.multiplicity << ")";
    out << " count=" << (run - k) << "\n";
    k = run;
  }
  out << "nodes " << cfg.nodes << "\n";
  if (const auto* ms = std::get_if<IncidenceMultiset>(&cfg.incidence)) {
    out << "incidence";
    for (const auto& [count, value] : ms->entries) out << " " << count << "x" << value;
    out << "\n";
  } else if (const auto* m = std::get_if<IncidenceMatrix>(&cfg.incidence)) {
    out << "incidence-matrix";
    for (std::size_t r = 0; r < m->rows.size(); ++r) {
      if (r > 0) out << " ;";
      for (auto v : m->rows[r]) out << " " << v;
    }
    out << "\n";
  }
  return out.str();
}

inline std::string emit_native(const ReducedConeConfig& cfg) {
  std::ostringstream out;
  out << "reduced n=" << cfg.ambient_dim << " degree=" << cfg.degree << " power=" << cfg.power << "\n";
  for (const auto& s : cfg.local_spectra) {
    out << "localspectrum";
    for (const auto& [alpha, n] : s.entries()) out << " " << alpha.str() << ":" << n;
    out << "\n";
  }
  return out.str();
}

}  // namespace conespec

#endif  // CONESPEC_NATIVE_FORMAT_HPP
