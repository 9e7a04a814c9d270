#ifndef CONESPEC_CURVE_HPP
#define CONESPEC_CURVE_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "conespec/error.hpp"
#include "conespec/local.hpp"
#include "conespec/spectrum.hpp"

namespace conespec {

/// Irreducible global component C_k of degree d'_k appearing with multiplicity a_k.
struct GlobalComponent {
  std::int64_t degree = 1;
  std::int64_t multiplicity = 1;

  friend bool operator==(const GlobalComponent&, const GlobalComponent&) = default;
};

/// Multiset of the values m_{j,k} >= 1, stored as (count, value) pairs.
struct IncidenceMultiset {
  std::vector<std::pair<std::int64_t, std::int64_t>> entries;

  friend bool operator==(const IncidenceMultiset&, const IncidenceMultiset&) = default;
};

/// Full matrix m_{j,k}: rows are the listed points followed by any tracked
/// nodes, columns are the expanded component list.
struct IncidenceMatrix {
  std::vector<std::vector<std::int64_t>> rows;

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

using Incidence = std::variant<std::monostate, IncidenceMultiset, IncidenceMatrix>;

/// Combinatorial data of a possibly non-reduced plane curve C.
///
/// Components and points are stored expanded (no repeat counts). Ordinary
/// double points may either be listed in `points` or aggregated in `nodes`.
struct CurveConfig {
  std::vector<GlobalComponent> components;
  std::vector<SingularPoint> points;
  std::int64_t nodes = 0;
  Incidence incidence;

  friend bool operator==(const CurveConfig&, const CurveConfig&) = default;

  // d = sum a_k d'_k
  std::int64_t degree() const {
    std::int64_t d = 0;
    for (const auto& c : components) d += c.multiplicity * c.degree;
    return d;
  }
  // d' = sum d'_k
  std::int64_t reduced_degree() const {
    std::int64_t d = 0;
    for (const auto& c : components) d += c.degree;
    return d;
  }

  bool all_ordinary() const {
    for (const auto& p : points)
      if (!p.ordinary()) return false;
    return true;
  }

  bool is_reduced() const {
    for (const auto& c : components)
      if (c.multiplicity != 1) return false;
    for (const auto& p : points)
      for (const auto& b : p.branches)
        if (b.multiplicity != 1) return false;
    return true;
  }

  bool has_incidence() const { return !std::holds_alternative<std::monostate>(incidence); }

  // Sum of Milnor numbers over all singular points, one per aggregated node.
  std::int64_t total_milnor() const {
    std::int64_t s = nodes;
    for (const auto& p : points) s += p.milnor();
    return s;
  }

  void validate() const {
    if (components.empty()) throw InputError("E_NO_COMPONENTS", "curve needs at least one component");
    for (const auto& c : components)
      if (c.degree < 1 || c.multiplicity < 1)
        throw InputError("E_COMPONENT", "component degree and multiplicity must be positive");
    if (nodes < 0) throw InputError("E_NODES", "node count must be nonnegative");
    for (const auto& p : points) {
      if (std::gcd(p.w, p.wp) != 1 || p.w < 1 || p.wp < 1)
        throw InputError("E_WEIGHTS_NOT_COPRIME", "point weights must be coprime positive integers");
      if (!validate_branches(p))
        throw InputError("E_BRANCH_DEGREE", "branch weighted degrees must lie in {w, w', w*w'}");
      (void)p.milnor();
    }
    if (const auto* m = std::get_if<IncidenceMatrix>(&incidence)) {
      for (const auto& row : m->rows)
        if (row.size() != components.size())
          throw InputError("E_INCIDENCE_SHAPE", "incidence matrix row has " + std::to_string(row.size()) +
                                                    " entries, expected " + std::to_string(components.size()));
    }
    if (const auto* ms = std::get_if<IncidenceMultiset>(&incidence)) {
      for (const auto& [count, value] : ms->entries)
        if (count < 0 || value < 1)
          throw InputError("E_INCIDENCE_VALUE", "incidence counts must be nonnegative and values positive");
    }
  }
};

/// Input for the reduced-hypersurface formulas: a reduced hypersurface of
/// degree d' in P^n with the local spectra of its isolated singular points,
/// raised to the power m.
struct ReducedConeConfig {
  int ambient_dim = 2;
  std::int64_t degree = 1;
  std::vector<SpectrumVector> local_spectra;
  std::int64_t power = 1;

  friend bool operator==(const ReducedConeConfig&, const ReducedConeConfig&) = default;

  void validate() const {
    if (ambient_dim < 1) throw InputError("E_AMBIENT", "ambient dimension must be positive");
    if (degree < 1) throw InputError("E_DEGREE", "degree must be positive");
    if (power < 1) throw InputError("E_POWER", "power must be positive");
    for (const auto& s : local_spectra) {
      if (s.ambient_dim() != ambient_dim)
        throw InputError("E_AMBIENT_MISMATCH", "local spectrum lives in " + std::to_string(s.ambient_dim()) +
                                                   " variables, expected " + std::to_string(ambient_dim));
      if (s.has_negative()) throw InputError("E_NEGATIVE_MULTIPLICITY", "local spectrum has a negative multiplicity");
      if (!sv_support_check(s)) throw InputError("E_SPECTRUM_SUPPORT", "local spectrum " + s.str() + " leaves (0, n)");
      if (!sv_symmetry_check(s)) throw InputError("E_SPECTRUM_SYMMETRY", "local spectrum " + s.str() + " is not symmetric");
    }
  }
};

/// The cells n_{f, i/d + e} for e in {0,1,2} and i in [1,d], plus chi(U).
struct ConeSpectrumTable {
  std::int64_t d = 0;
  std::int64_t dprime = 0;
  std::int64_t chi_u = 0;
  std::array<std::vector<std::int64_t>, 3> rows;  // rows[e][i-1]

  friend bool operator==(const ConeSpectrumTable&, const ConeSpectrumTable&) = default;

  std::int64_t at(int e, std::int64_t i) const { return rows.at(static_cast<std::size_t>(e)).at(static_cast<std::size_t>(i - 1)); }
  std::int64_t& at(int e, std::int64_t i) { return rows.at(static_cast<std::size_t>(e)).at(static_cast<std::size_t>(i - 1)); }

  static ConeSpectrumTable zeros(std::int64_t d, std::int64_t dprime) {
    ConeSpectrumTable t;
    t.d = d;
    t.dprime = dprime;
    for (auto& r : t.rows) r.assign(static_cast<std::size_t>(d), 0);
    return t;
  }

  Fraction exponent(int e, std::int64_t i) const { return Fraction(i, d) + Fraction(e); }
};

}  // namespace conespec

#endif  // CONESPEC_CURVE_HPP
