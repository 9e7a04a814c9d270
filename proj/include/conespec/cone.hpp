#ifndef CONESPEC_CONE_HPP
#define CONESPEC_CONE_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "conespec/curve.hpp"
#include "conespec/error.hpp"
#include "conespec/fraction.hpp"
#include "conespec/local.hpp"
#include "conespec/spectrum.hpp"

namespace conespec {

/// n(n-1)/2 for every integer n, so binom2(-1) == 1 and binom2(0) == binom2(1) == 0.
constexpr std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

inline std::int64_t kronecker(std::int64_t a, std::int64_t b) { return a == b ? 1 : 0; }

// beta = a*i/d - ceil(a*i/d) + 1, in (0, 1]
inline Fraction beta_of(std::int64_t a, std::int64_t i, std::int64_t d) {
  return Fraction(a * i, d) - Fraction(ceil_div(a * i, d)) + Fraction(1);
}

struct FracData {
  std::int64_t sigma = 0;
  std::int64_t iota = 0;
  std::vector<Fraction> betas;  // one per component
};

inline FracData frac_data(const CurveConfig& cfg, std::int64_t i) {
  const std::int64_t d = cfg.degree();
  if (i < 1 || i > d)
    throw InputError("E_INDEX", "index " + std::to_string(i) + " outside [1, " + std::to_string(d) + "]");
  FracData fd;
  for (const auto& c : cfg.components) {
    fd.sigma += c.degree * (ceil_div(c.multiplicity * i, d) - 1);
    fd.betas.push_back(beta_of(c.multiplicity, i, d));
  }
  fd.iota = i - fd.sigma;
  return fd;
}

/// gamma_{j,i} = sum_l beta_{j,l,i} d_{j,l}, in (0, d_j].
inline Fraction gamma_point(const SingularPoint& p, std::int64_t i, std::int64_t d) {
  if (i < 1 || i > d)
    throw InputError("E_INDEX", "index " + std::to_string(i) + " outside [1, " + std::to_string(d) + "]");
  Fraction g;
  for (const auto& b : p.branches) g += beta_of(b.multiplicity, i, d) * Fraction(b.weighted_degree);
  return g;
}

/// One evaluation of the lattice count made while filling a table.
struct LatticeQuery {
  std::int64_t w;
  std::int64_t wp;
  std::int64_t bound;
  std::int64_t value;
};

/// chi(U) = 3 - ((3 - d')d' + sum_j mu_j), every aggregated node counting mu = 1.
inline std::int64_t chi_u(const CurveConfig& cfg) {
  const std::int64_t dp = cfg.reduced_degree();
  return 3 - ((3 - dp) * dp + cfg.total_milnor());
}

/// Euler number of the complement of a generic nodal union of smooth curves.
inline std::int64_t chi_generic_union(const std::vector<std::int64_t>& degrees) {
  std::int64_t dp = 0;
  std::int64_t s = 0;
  for (auto dk : degrees) {
    if (dk < 1) throw InputError("E_DEGREE", "degrees must be positive");
    dp += dk;
    s += binom2(dk);
  }
  return binom2(dp - 2) + s;
}

/// Multiplicities n_{f, i/d + e} of the cone over a plane curve whose reduced
/// curve has only semi-weighted-homogeneous singularities.
///
/// Rows 0 and 2 come from the lattice counts N_j at ceil(gamma_{j,i}); row 1 is
/// fixed by the row sum chi(U). If `touched` is given, every lattice-count
/// evaluation is appended to it.
inline ConeSpectrumTable theorem2_table(const CurveConfig& cfg, std::vector<LatticeQuery>* touched = nullptr) {
  cfg.validate();
  const std::int64_t d = cfg.degree();
  const std::int64_t dp = cfg.reduced_degree();
  ConeSpectrumTable t = ConeSpectrumTable::zeros(d, dp);
  t.chi_u = chi_u(cfg);

  auto count = [&](const SingularPoint& p, std::int64_t bound) {
    const std::int64_t v = lattice_count(p.w, p.wp, bound);
    if (touched != nullptr) touched->push_back({p.w, p.wp, bound, v});
    return v;
  };

  for (std::int64_t i = 1; i <= d; ++i) {
    const FracData fd = frac_data(cfg, i);
    const std::int64_t delta = kronecker(i, d);
    std::int64_t r0 = binom2(fd.iota - 1);
    std::int64_t r2 = binom2(dp - fd.iota - 1) - delta;
    for (const auto& p : cfg.points) {
      const std::int64_t cg = to_int64(gamma_point(p, i, d).ceil());
      r0 -= count(p, cg - 1);
      r2 -= count(p, p.degree() - cg);
    }
    t.at(0, i) = r0;
    t.at(2, i) = r2;
    t.at(1, i) = t.chi_u - r0 - r2 - delta;
  }
  return t;
}

/// sum over the incidence data of binom2(m_{j,k}).
inline std::int64_t incidence_binom_sum(const CurveConfig& cfg) {
  std::int64_t s = 0;
  if (const auto* ms = std::get_if<IncidenceMultiset>(&cfg.incidence)) {
    for (const auto& [count, value] : ms->entries) s += count * binom2(value);
  } else if (const auto* m = std::get_if<IncidenceMatrix>(&cfg.incidence)) {
    for (const auto& row : m->rows)
      for (auto v : row) s += binom2(v);
  } else {
    throw InputError("E_NO_INCIDENCE", "this formula needs incidence data");
  }
  return s;
}

/// Middle row for ordinary singularities, written with the incidence data
/// instead of the Milnor numbers.
inline std::vector<std::int64_t> corollary2_row(const CurveConfig& cfg) {
  cfg.validate();
  if (!cfg.all_ordinary())
    throw InputError("E_NOT_ORDINARY", "the incidence form of the middle row needs ordinary singularities only");
  if (!cfg.has_incidence()) throw InputError("E_NO_INCIDENCE", "the incidence form of the middle row needs incidence data");
  const std::int64_t d = cfg.degree();
  const std::int64_t dp = cfg.reduced_degree();
  std::int64_t global = -incidence_binom_sum(cfg);
  for (const auto& c : cfg.components) global += binom2(c.degree);

  std::vector<std::int64_t> row(static_cast<std::size_t>(d));
  for (std::int64_t i = 1; i <= d; ++i) {
    const FracData fd = frac_data(cfg, i);
    std::int64_t v = (fd.iota - 1) * (dp - fd.iota - 1) + global;
    for (const auto& p : cfg.points) {
      const std::int64_t cg = to_int64(gamma_point(p, i, d).ceil());
      v -= (cg - 1) * (p.branch_count() - cg);
    }
    row[static_cast<std::size_t>(i - 1)] = v;
  }
  return row;
}

/// Coefficients gamma_i of (t + ... + t^{d'-1})^{n+1} for i in [n+1, (n+1)(d'-1)].
struct GammaSequence {
  std::int64_t first = 0;  // exponent of values[0]
  std::vector<std::int64_t> values;

  std::int64_t operator[](std::int64_t i) const {
    if (i < first || i >= first + static_cast<std::int64_t>(values.size())) return 0;
    return values[static_cast<std::size_t>(i - first)];
  }
};

// Inclusion-exclusion on t^{n+1} (1 - t^{d'-1})^{n+1} / (1 - t)^{n+1}.
inline GammaSequence gamma_coeffs(std::int64_t dprime, std::int64_t n) {
  if (dprime < 1 || n < 1) throw InputError("E_DEGREE", "gamma coefficients need d' >= 1 and n >= 1");
  GammaSequence g;
  g.first = n + 1;
  if (dprime == 1) return g;
  const std::int64_t parts = n + 1;
  const std::int64_t span = dprime - 1;
  for (std::int64_t i = parts; i <= parts * span; ++i) {
    const std::int64_t excess = i - parts;
    BigInt c = 0;
    for (std::int64_t k = 0; k <= parts && k * span <= excess; ++k) {
      const BigInt term = binomial(parts, k) * binomial(excess - k * span + parts - 1, parts - 1);
      if (k % 2 == 0) {
        c += term;
      } else {
        c -= term;
      }
    }
    g.values.push_back(to_int64(c));
  }
  return g;
}

/// Spectrum of the cone over a reduced hypersurface of degree d' in P^n:
/// n_{f', i/d'} = gamma_i - sum_j M_j(i/d') for i in [1, (n+1)d' - 1].
inline SpectrumVector theorem1_reduced(const ReducedConeConfig& cfg) {
  cfg.validate();
  const std::int64_t dp = cfg.degree;
  const std::int64_t n = cfg.ambient_dim;
  const GammaSequence g = gamma_coeffs(dp, n);
  SpectrumVector out(cfg.ambient_dim + 1);
  for (std::int64_t i = 1; i <= (n + 1) * dp - 1; ++i) {
    const Fraction x(i, dp);
    std::int64_t v = g[i];
    for (const auto& s : cfg.local_spectra) v -= window_count(s, x);
    out.add(x, v);
  }
  return out;
}

/// Spectrum of f = f'^m from the spectrum of f': the cell i/(md') + l/m + p'
/// copies the cell i/d' + p', with (-1)^n added when i = d', p' = n, l != m-1.
/// Cells at exponent >= n+1 are dropped.
inline SpectrumVector theorem1_power(const SpectrumVector& base, const ReducedConeConfig& cfg) {
  const std::int64_t m = cfg.power;
  const std::int64_t dp = cfg.degree;
  const std::int64_t n = cfg.ambient_dim;
  if (m < 1) throw InputError("E_POWER", "power must be positive");
  if (base.ambient_dim() != n + 1)
    throw InputError("E_AMBIENT_MISMATCH", "base spectrum must live in n+1 variables");
  const Fraction top(n + 1);
  const std::int64_t sign = (n % 2 == 0) ? 1 : -1;
  SpectrumVector out(static_cast<int>(n + 1));
  for (std::int64_t i = 1; i <= dp; ++i) {
    for (std::int64_t l = 0; l < m; ++l) {
      for (std::int64_t p = 0; p <= n; ++p) {
        const Fraction alpha = Fraction(i, m * dp) + Fraction(l, m) + Fraction(p);
        if (alpha >= top) continue;
        std::int64_t v = base.at(Fraction(i, dp) + Fraction(p));
        if (i == dp && p == n && l != m - 1) v += sign;
        out.add(alpha, v);
      }
    }
  }
  return out;
}

/// Reduced plane curve of degree d from its local spectra:
///   row0 = C(i-1,2) - sum M_j(i/d)
///   row1 = (i-1)(d-i-1) + C(d,2) - sum M_j(i/d+1)
///   row2 = C(d-i-1,2) - sum M_j(i/d+2) - delta_{i,d}
inline ConeSpectrumTable corollary1_table(std::int64_t degree, const std::vector<SpectrumVector>& local_spectra) {
  if (degree < 1) throw InputError("E_DEGREE", "degree must be positive");
  const std::int64_t d = degree;
  ConeSpectrumTable t = ConeSpectrumTable::zeros(d, d);
  std::int64_t mu = 0;
  for (const auto& s : local_spectra) mu += s.total();
  t.chi_u = 3 - ((3 - d) * d + mu);
  for (std::int64_t i = 1; i <= d; ++i) {
    const Fraction x(i, d);
    std::int64_t r0 = binom2(i - 1);
    std::int64_t r1 = (i - 1) * (d - i - 1) + binom2(d);
    std::int64_t r2 = binom2(d - i - 1) - kronecker(i, d);
    for (const auto& s : local_spectra) {
      r0 -= window_count(s, x);
      r1 -= window_count(s, x + Fraction(1));
      r2 -= window_count(s, x + Fraction(2));
    }
    t.at(0, i) = r0;
    t.at(1, i) = r1;
    t.at(2, i) = r2;
  }
  return t;
}

/// Pairwise intersection numbers agree globally and locally:
/// d'_k d'_{k'} = sum_j m_{j,k} m_{j,k'} for k != k'. Needs the full matrix.
inline bool incidence_check(const CurveConfig& cfg) {
  const auto* m = std::get_if<IncidenceMatrix>(&cfg.incidence);
  if (m == nullptr)
    throw InputError("E_INCIDENCE_UNAVAILABLE", "intersection check needs a full incidence matrix");
  const std::size_t r = cfg.components.size();
  for (const auto& row : m->rows)
    if (row.size() != r) return false;
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t kp = k + 1; kp < r; ++kp) {
      std::int64_t local = 0;
      for (const auto& row : m->rows) local += row[k] * row[kp];
      if (local != cfg.components[k].degree * cfg.components[kp].degree) return false;
    }
  }
  return true;
}

/// Cells of a spectrum at exponents i/d + e laid out as a table.
inline ConeSpectrumTable table_from_spectrum(const SpectrumVector& sv, std::int64_t d, std::int64_t dprime,
                                             std::int64_t chi) {
  ConeSpectrumTable t = ConeSpectrumTable::zeros(d, dprime);
  t.chi_u = chi;
  for (int e = 0; e < 3; ++e)
    for (std::int64_t i = 1; i <= d; ++i) t.at(e, i) = sv.at(t.exponent(e, i));
  return t;
}

/// The common multiplicity m when every component and branch has it.
inline std::optional<std::int64_t> uniform_multiplicity(const CurveConfig& cfg) {
  if (cfg.components.empty()) return std::nullopt;
  const std::int64_t m = cfg.components.front().multiplicity;
  for (const auto& c : cfg.components)
    if (c.multiplicity != m) return std::nullopt;
  for (const auto& p : cfg.points)
    for (const auto& b : p.branches)
      if (b.multiplicity != m) return std::nullopt;
  return m;
}

/// Same curve with every component and branch multiplicity set to m.
inline CurveConfig with_multiplicity(CurveConfig cfg, std::int64_t m) {
  for (auto& c : cfg.components) c.multiplicity = m;
  for (auto& p : cfg.points)
    for (auto& b : p.branches) b.multiplicity = m;
  return cfg;
}

/// Local spectra of the reduced curve (weighted-homogeneous spectra at listed
/// points, {1:1} per aggregated node) packaged for the reduced formulas.
inline ReducedConeConfig reduced_cone_config(const CurveConfig& cfg, std::int64_t power = 1) {
  ReducedConeConfig r;
  r.ambient_dim = 2;
  r.degree = cfg.reduced_degree();
  r.power = power;
  for (const auto& p : cfg.points) r.local_spectra.push_back(p.local_spectrum());
  const SpectrumVector node(2, {{Fraction(1), 1}});
  for (std::int64_t k = 0; k < cfg.nodes; ++k) r.local_spectra.push_back(node);
  return r;
}

}  // namespace conespec

#endif  // CONESPEC_CONE_HPP
