#ifndef CONESPEC_SINGULAR_FORMAT_HPP
#define CONESPEC_SINGULAR_FORMAT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conespec/curve.hpp"
#include "conespec/error.hpp"
#include "conespec/expr.hpp"

namespace conespec {

/// Compatibility input in the style of the integer-vector listings
///   GlCmp=-1,2,a,-c,2,1,-1,1,b,-1,1,1; Si=-2,c+2,a,b,-2,c+2,a; OD=1; LG=0;
/// A leading minus sign on a count is only a separator.
struct SingularVectors {
  std::vector<TemplateExpr> glcmp;
  std::vector<TemplateExpr> si;
  std::optional<TemplateExpr> od;
  std::vector<TemplateExpr> lg;
};

/// Evaluated integer vectors.
struct SingularInts {
  std::vector<std::int64_t> glcmp;
  std::vector<std::int64_t> si;
  std::int64_t od = 0;
  std::vector<std::int64_t> lg;
};

inline bool looks_like_singular(std::string_view text) { return text.find("GlCmp") != std::string_view::npos; }

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<TemplateExpr> parse_expr_list(std::string_view body) {
  std::vector<TemplateExpr> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t k = 0; k <= body.size(); ++k) {
    if (k < body.size() && body[k] == '(') ++depth;
    if (k < body.size() && body[k] == ')') --depth;
    if (k == body.size() || (body[k] == ',' && depth == 0)) {
      const auto item = trim(body.substr(start, k - start));
      if (item.empty()) throw InputError("E_MALFORMED", "empty entry in vector '" + std::string(body) + "'");
      out.push_back(parse_expr(item));
      start = k + 1;
    }
  }
  return out;
}

}  // namespace detail

/// Reads "Key=list;" assignments. '#' starts a comment; keys are case-sensitive.
inline SingularVectors parse_singular_text(std::string_view text) {
  std::string clean;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '#') {
      while (k < text.size() && text[k] != '\n') ++k;
      clean += '\n';
      continue;
    }
    clean += text[k];
  }
  SingularVectors v;
  bool seen_glcmp = false;
  std::size_t start = 0;
  const std::string_view all(clean);
  for (std::size_t k = 0; k <= all.size(); ++k) {
    if (k != all.size() && all[k] != ';') continue;
    const auto stmt = detail::trim(all.substr(start, k - start));
    start = k + 1;
    if (stmt.empty()) continue;
    const auto eq = stmt.find('=');
    if (eq == std::string_view::npos)
      throw InputError("E_MALFORMED", "expected Key=values, got '" + std::string(stmt) + "'");
    const auto key = detail::trim(stmt.substr(0, eq));
    const auto body = detail::trim(stmt.substr(eq + 1));
    if (key == "GlCmp") {
      v.glcmp = detail::parse_expr_list(body);
      seen_glcmp = true;
    } else if (key == "Si") {
      v.si = detail::parse_expr_list(body);
    } else if (key == "OD") {
      v.od = parse_expr(body);
    } else if (key == "LG") {
      v.lg = detail::parse_expr_list(body);
    } else {
      throw InputError("E_UNKNOWN_KEY", "unknown vector '" + std::string(key) + "'");
    }
  }
  if (!seen_glcmp) throw InputError("E_MALFORMED", "GlCmp is required");
  return v;
}

inline SingularInts evaluate(const SingularVectors& v, const Binding& binding) {
  SingularInts out;
  for (const auto& e : v.glcmp) out.glcmp.push_back(eval_int(e, binding));
  for (const auto& e : v.si) out.si.push_back(eval_int(e, binding));
  out.od = v.od ? eval_int(*v.od, binding) : 0;
  for (const auto& e : v.lg) out.lg.push_back(eval_int(e, binding));
  return out;
}

/// Expands the integer vectors into a curve configuration with ordinary points.
inline CurveConfig parse_singular(const SingularInts& v) {
  CurveConfig cfg;
  if (v.glcmp.size() % 3 != 0)
    throw InputError("E_MALFORMED", "GlCmp must consist of (-count, degree, multiplicity) triples");
  for (std::size_t k = 0; k < v.glcmp.size(); k += 3) {
    const auto count = v.glcmp[k];
    const auto degree = v.glcmp[k + 1];
    const auto mult = v.glcmp[k + 2];
    if (count > 0)
      throw InputError("E_SEPARATOR", "GlCmp entry " + std::to_string(k + 1) + " must be a nonpositive count separator");
    if (degree <= 0 || mult <= 0)
      throw InputError("E_NONPOSITIVE", "GlCmp degrees and multiplicities must be positive");
    for (std::int64_t c = 0; c < -count; ++c) cfg.components.push_back({degree, mult});
  }

  const bool si_empty = v.si.empty() || (v.si.size() == 1 && v.si[0] == 0);
  std::size_t p = 0;
  while (!si_empty && p < v.si.size()) {
    if (v.si[p] > 0)
      throw InputError("E_SEPARATOR", "Si entry " + std::to_string(p + 1) + " must be a nonpositive count separator");
    const auto count = -v.si[p];
    if (p + 1 >= v.si.size()) throw InputError("E_MALFORMED", "Si ends after a separator");
    const auto branches = v.si[p + 1];
    if (branches <= 0) throw InputError("E_NONPOSITIVE", "Si branch counts must be positive");
    p += 2;
    std::vector<std::int64_t> mults;
    for (; p < v.si.size() && v.si[p] > 0; ++p) mults.push_back(v.si[p]);
    if (static_cast<std::int64_t>(mults.size()) > branches)
      throw InputError("E_TOO_MANY_MULTS", "Si lists " + std::to_string(mults.size()) + " multiplicities for " +
                                               std::to_string(branches) + " branches");
    mults.resize(static_cast<std::size_t>(branches), 1);
    for (std::int64_t c = 0; c < count; ++c) cfg.points.push_back(SingularPoint::ordinary_point(mults));
  }

  if (v.od < 0) throw InputError("E_NONPOSITIVE", "OD must be nonnegative");
  cfg.nodes = v.od;

  IncidenceMultiset inc;
  const bool lg_empty = v.lg.empty() || (v.lg.size() == 1 && v.lg[0] == 0);
  if (!lg_empty) {
    if (v.lg.size() % 2 != 0) throw InputError("E_MALFORMED", "LG must consist of (-count, value) pairs");
    for (std::size_t k = 0; k < v.lg.size(); k += 2) {
      if (v.lg[k] > 0)
        throw InputError("E_SEPARATOR", "LG entry " + std::to_string(k + 1) + " must be a nonpositive count separator");
      if (v.lg[k + 1] < 1) throw InputError("E_NONPOSITIVE", "LG values must be positive");
      inc.entries.emplace_back(-v.lg[k], v.lg[k + 1]);
    }
  }
  cfg.incidence = inc;
  cfg.validate();
  return cfg;
}

inline CurveConfig parse_singular(const SingularVectors& v, const Binding& binding) {
  return parse_singular(evaluate(v, binding));
}

}  // namespace conespec

#endif  // CONESPEC_SINGULAR_FORMAT_HPP
