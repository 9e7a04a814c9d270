#ifndef CONESPEC_LOCAL_HPP
#define CONESPEC_LOCAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "conespec/error.hpp"
#include "conespec/fraction.hpp"
#include "conespec/spectrum.hpp"

namespace conespec {

/// Weights (w_1, ..., w_n) and weighted degree d of a weighted-homogeneous germ.
struct WeightSystem {
  std::vector<std::int64_t> weights;
  std::int64_t degree = 0;

  int nvars() const { return static_cast<int>(weights.size()); }

  // gcd of the weights is 1 and every entry is positive.
  void validate() const {
    if (weights.empty()) throw InputError("E_WEIGHTS", "weight system needs at least one weight");
    std::int64_t g = 0;
    for (auto w : weights) {
      if (w <= 0) throw InputError("E_WEIGHTS", "weights must be positive");
      g = std::gcd(g, w);
    }
    if (g != 1) throw InputError("E_WEIGHTS_NOT_COPRIME", "gcd of the weights must be 1");
    if (degree <= 0) throw InputError("E_DEGREE", "weighted degree must be positive");
  }

  // d > w_i for every i, required for an isolated singularity.
  void require_isolated() const {
    validate();
    for (auto w : weights)
      if (degree <= w)
        throw InputError("E_NOT_ISOLATED", "weighted degree " + std::to_string(degree) +
                                               " must exceed every weight (got weight " + std::to_string(w) + ")");
  }
};

/// Spectrum of z^(d/w) in one variable, rescaled to weight w and degree d:
/// exponents k*w/d for k in [1, d/w - 1]. Needs w | d.
inline SpectrumVector wh_factor(std::int64_t w, std::int64_t d) {
  if (w <= 0 || d <= 0 || d % w != 0)
    throw InputError("E_NOT_DIVISIBLE", "single-variable factor needs w | d (w=" + std::to_string(w) +
                                            ", d=" + std::to_string(d) + ")");
  SpectrumVector out(1);
  for (std::int64_t k = 1; k < d / w; ++k) out.add(Fraction(k * w, d), 1);
  return out;
}

namespace detail {

// Dense integer polynomial in s; index = exponent.
using Poly = std::vector<BigInt>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division by s^w - 1; throws if the remainder is nonzero.
inline Poly poly_div_cyclic(Poly p, std::int64_t w) {
  const auto uw = static_cast<std::size_t>(w);
  if (p.size() <= uw) {
    for (const auto& c : p)
      if (c != 0) throw InputError("E_NOT_ISOLATED", "weight system has no isolated weighted-homogeneous germ");
    return Poly{BigInt(0)};
  }
  Poly q(p.size() - uw, BigInt(0));
  for (std::size_t k = p.size(); k-- > uw;) {
    const BigInt c = p[k];
    if (c == 0) continue;
    q[k - uw] = c;
    p[k] = 0;
    p[k - uw] += c;
  }
  for (std::size_t k = 0; k < uw; ++k)
    if (p[k] != 0) throw InputError("E_NOT_ISOLATED", "weight system has no isolated weighted-homogeneous germ");
  return q;
}

}  // namespace detail

/// Spectrum of an isolated weighted-homogeneous germ,
///   Sp(t) = prod_i (t - t^{w_i/d}) / (t^{w_i/d} - 1).
///
/// When every w_i divides d each factor is the finite sum
/// t^{w_i/d} + t^{2w_i/d} + ... + t^{(d-w_i)/d} and the result is their
/// convolution. Otherwise the factors are not individually finite and the
/// quotient is taken in Z[s], s = t^{1/d}, with an exactness check.
inline SpectrumVector wh_spectrum(const WeightSystem& ws) {
  ws.require_isolated();
  const std::int64_t d = ws.degree;
  bool all_divide = true;
  for (auto w : ws.weights) all_divide = all_divide && (d % w == 0);

  if (all_divide) {
    SpectrumVector out = wh_factor(ws.weights.front(), d);
    for (std::size_t i = 1; i < ws.weights.size(); ++i) out = sv_product(out, wh_factor(ws.weights[i], d));
    return out;
  }

  // numerator prod_i (s^d - s^{w_i}), divided by each s^{w_i} - 1 in turn
  detail::Poly num{BigInt(1)};
  for (auto w : ws.weights) {
    detail::Poly f(static_cast<std::size_t>(d) + 1, BigInt(0));
    f[static_cast<std::size_t>(d)] = 1;
    f[static_cast<std::size_t>(w)] = -1;
    num = detail::poly_mul(num, f);
  }
  for (auto w : ws.weights) num = detail::poly_div_cyclic(std::move(num), w);

  SpectrumVector out(ws.nvars());
  for (std::size_t k = 0; k < num.size(); ++k) {
    if (num[k] == 0) continue;
    if (num[k] < 0) throw InputError("E_NOT_ISOLATED", "weight system has no isolated weighted-homogeneous germ");
    out.add(Fraction(static_cast<std::int64_t>(k), d), to_int64(num[k]));
  }
  return out;
}

/// Milnor number prod_i (d - w_i) / w_i; rejects a non-integral product.
inline std::int64_t milnor_wh(const WeightSystem& ws) {
  ws.require_isolated();
  Fraction mu(1);
  for (auto w : ws.weights) mu *= Fraction(ws.degree - w, w);
  if (!mu.is_integer())
    throw InputError("E_NONINTEGRAL_MILNOR", "Milnor number " + mu.str() + " is not an integer");
  return to_int64(mu.num());
}

/// #{(m1, m2) in Z_{>0}^2 : w*m1 + w'*m2 <= bound}; 0 when bound < w + w'.
inline std::int64_t lattice_count(std::int64_t w, std::int64_t wp, std::int64_t bound) {
  std::int64_t count = 0;
  for (std::int64_t m1 = 1; w * m1 + wp <= bound; ++m1) count += (bound - w * m1) / wp;
  return count;
}

/// Spectral numbers alpha with beta - 1 <= alpha < beta, counted with multiplicity.
inline std::int64_t window_count(const SpectrumVector& spec, const Fraction& beta) {
  const auto& e = spec.entries();
  auto lo = e.lower_bound(beta - Fraction(1));
  auto hi = e.lower_bound(beta);
  std::int64_t count = 0;
  for (auto it = lo; it != hi; ++it) count += it->second;
  return count;
}

/// Local irreducible component at a singular point.
struct LocalBranch {
  std::int64_t weighted_degree = 1;  // d_{j,l}
  std::int64_t multiplicity = 1;     // a_{j,l}

  friend bool operator==(const LocalBranch&, const LocalBranch&) = default;
};

/// Semi-weighted-homogeneous singular point of the reduced curve with local
/// weights (w, w') and its local irreducible components.
struct SingularPoint {
  std::int64_t w = 1;
  std::int64_t wp = 1;
  std::vector<LocalBranch> branches;

  friend bool operator==(const SingularPoint&, const SingularPoint&) = default;

  // d_j
  std::int64_t degree() const {
    std::int64_t s = 0;
    for (const auto& b : branches) s += b.weighted_degree;
    return s;
  }
  bool ordinary() const { return w == 1 && wp == 1; }
  // Number of local irreducible components; equals the reduced multiplicity at ordinary points.
  std::int64_t branch_count() const { return static_cast<std::int64_t>(branches.size()); }

  bool is_node() const { return ordinary() && branches.size() == 2; }

  WeightSystem weight_system() const { return WeightSystem{{w, wp}, degree()}; }

  // (d_j - w)(d_j - w') / (w w'), required to be a nonnegative integer.
  std::int64_t milnor() const {
    const Fraction mu = Fraction(degree() - w, w) * Fraction(degree() - wp, wp);
    if (!mu.is_integer() || mu < Fraction(0))
      throw InputError("E_NONINTEGRAL_MILNOR",
                       "Milnor number " + mu.str() + " of a point with weights (" + std::to_string(w) + "," +
                           std::to_string(wp) + ") and degree " + std::to_string(degree()) +
                           " is not a nonnegative integer");
    return to_int64(mu.num());
  }

  SpectrumVector local_spectrum() const { return wh_spectrum(weight_system()); }

  static SingularPoint ordinary_point(const std::vector<std::int64_t>& branch_mults) {
    SingularPoint p;
    for (auto a : branch_mults) p.branches.push_back({1, a});
    return p;
  }
};

/// Branch weighted degrees lie in {w, w', w*w'} (all 1 at ordinary points).
inline bool validate_branches(const SingularPoint& p) {
  if (p.w <= 0 || p.wp <= 0 || p.branches.empty()) return false;
  for (const auto& b : p.branches) {
    const auto dl = b.weighted_degree;
    if (dl != p.w && dl != p.wp && dl != p.w * p.wp) return false;
    if (b.multiplicity <= 0) return false;
  }
  return true;
}

}  // namespace conespec

#endif  // CONESPEC_LOCAL_HPP
