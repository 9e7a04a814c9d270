#include <gtest/gtest.h>

#include <numeric>

#include "conespec/local.hpp"
#include "conespec/oracle.hpp"
#include "support.hpp"

using namespace conespec;
using testsupport::isolated_pair;

namespace {

Fraction fr(std::int64_t p, std::int64_t q = 1) { return Fraction(p, q); }

// Product of the one-variable series (t - t^{w/d}) / (t^{w/d} - 1) expanded
// directly as a finite geometric sum; only valid when w | d.
SpectrumVector factor_oracle(std::int64_t w, std::int64_t d) {
  SpectrumVector out(1);
  for (std::int64_t k = 1; k * w < d; ++k) out.add(Fraction(k * w, d), 1);
  return out;
}

// Checks prod_i (s^d - s^{w_i}) == sp(s) * prod_i (s^{w_i} - 1) in Z[s].
bool polynomial_identity(const SpectrumVector& sp, const std::vector<std::int64_t>& weights, std::int64_t d) {
  using Poly = std::vector<BigInt>;
  auto mul = [](const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  Poly lhs{BigInt(1)};
  Poly rhs;
  for (const auto& [x, m] : sp.entries()) {
    const Fraction e = x * Fraction(d);
    if (!e.is_integer()) return false;
    const auto k = static_cast<std::size_t>(to_int64(e.num()));
    if (rhs.size() <= k) rhs.resize(k + 1, BigInt(0));
    rhs[k] += m;
  }
  if (rhs.empty()) rhs.push_back(0);
  for (auto w : weights) {
    Poly f(static_cast<std::size_t>(d) + 1, BigInt(0));
    f[static_cast<std::size_t>(d)] += 1;
    f[static_cast<std::size_t>(w)] -= 1;
    lhs = mul(lhs, f);
    Poly g(static_cast<std::size_t>(w) + 1, BigInt(0));
    g[static_cast<std::size_t>(w)] = 1;
    g[0] = -1;
    rhs = mul(rhs, g);
  }
  auto trim = [](Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(lhs);
  trim(rhs);
  return lhs == rhs;
}

}  // namespace

TEST(WhSpectrum, Examples) {
  EXPECT_EQ(wh_spectrum(WeightSystem{{2, 3}, 6}), SpectrumVector(2, {{fr(5, 6), 1}, {fr(7, 6), 1}}));
  EXPECT_EQ(wh_spectrum(WeightSystem{{1, 1, 1}, 3}),
            SpectrumVector(3, {{fr(1), 1}, {fr(4, 3), 3}, {fr(5, 3), 3}, {fr(2), 1}}));
  EXPECT_EQ(wh_spectrum(WeightSystem{{1, 1}, 2}), SpectrumVector(2, {{fr(1), 1}}));
}

TEST(WhSpectrum, FactorExpansionOracle) {
  // (t^{1/3} + t^{2/3}) * t^{1/2} for the cusp
  EXPECT_EQ(sv_product(factor_oracle(2, 6), factor_oracle(3, 6)), wh_spectrum(WeightSystem{{2, 3}, 6}));
}

TEST(WhSpectrum, WeightsNotDividingDegree) {
  // x^4 + x y^2 type germ with weights (2,3) and degree 8
  const auto s = wh_spectrum(WeightSystem{{2, 3}, 8});
  EXPECT_EQ(s, SpectrumVector(2, {{fr(5, 8), 1}, {fr(7, 8), 1}, {fr(1), 1}, {fr(9, 8), 1}, {fr(11, 8), 1}}));
  EXPECT_EQ(s.total(), milnor_wh(WeightSystem{{2, 3}, 8}));
  EXPECT_TRUE(polynomial_identity(s, {2, 3}, 8));
}

TEST(WhSpectrum, RejectsNonIsolated) {
  EXPECT_THROW(wh_spectrum(WeightSystem{{2, 3}, 3}), InputError);
  EXPECT_THROW(wh_spectrum(WeightSystem{{2, 4}, 8}), InputError);
}

TEST(MilnorWh, Examples) {
  EXPECT_EQ(milnor_wh(WeightSystem{{2, 3}, 6}), 2);
  for (std::int64_t d = 2; d <= 6; ++d) EXPECT_EQ(milnor_wh(WeightSystem{{1, 1}, d}), (d - 1) * (d - 1));
  EXPECT_EQ(milnor_wh(WeightSystem{{1, 1, 1}, 3}), 8);
  EXPECT_EQ(milnor_wh(WeightSystem{{1, 1, 1}, 3}), wh_spectrum(WeightSystem{{1, 1, 1}, 3}).total());
  EXPECT_THROW(milnor_wh(WeightSystem{{2, 3}, 7}), InputError);
}

TEST(LatticeCount, Examples) {
  for (std::int64_t n = 0; n <= 30; ++n) EXPECT_EQ(lattice_count(1, 1, n), n * (n - 1) / 2);
  EXPECT_EQ(lattice_count(2, 3, 5), 1);
  EXPECT_EQ(lattice_count(2, 3, 1), 0);
  EXPECT_EQ(lattice_count(3, 4, -7), 0);
}

TEST(LatticeCount, AgreesWithDoubleLoopAndIsSymmetric) {
  for (std::int64_t w = 1; w <= 10; ++w)
    for (std::int64_t wp = 1; wp <= 10; ++wp)
      for (std::int64_t b = -3; b <= 200; ++b) {
        const auto v = lattice_count(w, wp, b);
        ASSERT_EQ(v, oracle::brute_lattice(w, wp, b)) << w << "," << wp << "," << b;
        ASSERT_EQ(v, lattice_count(wp, w, b));
        if (b < w + wp) {
          ASSERT_EQ(v, 0);
        }
      }
}

TEST(WindowCount, Examples) {
  const SpectrumVector cusp(2, {{fr(5, 6), 1}, {fr(7, 6), 1}});
  EXPECT_EQ(window_count(cusp, fr(1)), 1);
  EXPECT_EQ(window_count(cusp, fr(4, 3)), 2);
  EXPECT_EQ(window_count(SpectrumVector(2), fr(3, 7)), 0);
  // half-open: beta - 1 included, beta excluded
  EXPECT_EQ(window_count(cusp, fr(11, 6)), 2);
  EXPECT_EQ(window_count(cusp, fr(13, 6)), 1);
  EXPECT_EQ(window_count(cusp, fr(7, 3)), 0);
  EXPECT_EQ(window_count(cusp, fr(5, 6)), 0);
}

TEST(ValidateBranches, Examples) {
  EXPECT_TRUE(validate_branches(SingularPoint{2, 3, {{6, 1}}}));
  EXPECT_TRUE(validate_branches(SingularPoint::ordinary_point({1, 1, 1, 1})));
  EXPECT_FALSE(validate_branches(SingularPoint{2, 3, {{4, 1}}}));
  EXPECT_FALSE(validate_branches(SingularPoint{1, 1, {{2, 1}}}));
  EXPECT_FALSE(validate_branches(SingularPoint{2, 3, {}}));
}

TEST(SingularPointData, DegreeMilnorAndSpectrum) {
  const SingularPoint cusp_tangent{2, 3, {{6, 1}, {3, 1}}};
  EXPECT_EQ(cusp_tangent.degree(), 9);
  EXPECT_EQ(cusp_tangent.milnor(), 7);
  EXPECT_EQ(cusp_tangent.local_spectrum().total(), 7);
  const SingularPoint p = SingularPoint::ordinary_point({2, 5, 1, 1});
  EXPECT_TRUE(p.ordinary());
  EXPECT_EQ(p.milnor(), 9);
  EXPECT_THROW((SingularPoint{2, 3, {{2, 1}, {2, 1}}}.milnor()), InputError);
}

TEST(LocalProperties, SupportSymmetryTotalForTwoAndThreeVariables) {
  for (std::int64_t w1 = 1; w1 <= 6; ++w1)
    for (std::int64_t w2 = w1; w2 <= 6; ++w2)
      for (std::int64_t d = w2 + 1; d <= 60; ++d) {
        const WeightSystem ws{{w1, w2}, d};
        if (std::gcd(w1, w2) != 1) continue;
        if (!isolated_pair(w1, w2, d)) continue;
        const auto s = wh_spectrum(ws);
        ASSERT_TRUE(sv_support_check(s)) << w1 << "," << w2 << "," << d;
        ASSERT_TRUE(sv_symmetry_check(s)) << w1 << "," << w2 << "," << d;
        ASSERT_EQ(s.total(), milnor_wh(ws));
        ASSERT_TRUE(polynomial_identity(s, ws.weights, d));
      }
  for (std::int64_t d = 2; d <= 20; ++d) {
    for (const auto& w : std::vector<std::vector<std::int64_t>>{{1, 1, 1}, {1, 1, 2}, {1, 2, 3}, {1, 1, 1, 1}}) {
      if (d <= *std::max_element(w.begin(), w.end())) continue;
      const WeightSystem ws{w, d};
      bool divides = true;
      for (auto x : w) divides = divides && d % x == 0;
      if (!divides) continue;
      const auto s = wh_spectrum(ws);
      EXPECT_TRUE(sv_support_check(s));
      EXPECT_TRUE(sv_symmetry_check(s));
      EXPECT_EQ(s.total(), milnor_wh(ws));
    }
  }
}

TEST(LocalProperties, ThomSebastianiFactorization) {
  for (std::int64_t w1 = 1; w1 <= 8; ++w1)
    for (std::int64_t w2 = 1; w2 <= 8; ++w2) {
      if (std::gcd(w1, w2) != 1) continue;
      for (std::int64_t d = std::max(w1, w2) + 1; d <= 60; ++d) {
        if (d % w1 != 0 || d % w2 != 0) continue;
        ASSERT_EQ(wh_spectrum(WeightSystem{{w1, w2}, d}), sv_product(factor_oracle(w1, d), factor_oracle(w2, d)));
        ASSERT_EQ(wh_spectrum(WeightSystem{{w1, w2}, d}), sv_product(wh_factor(w1, d), wh_factor(w2, d)));
      }
    }
  for (std::int64_t d = 2; d <= 12; ++d) {
    const auto one = factor_oracle(1, d);
    EXPECT_EQ(wh_spectrum(WeightSystem{{1, 1, 1}, d}), sv_product(sv_product(one, one), one));
  }
}

TEST(LocalProperties, BridgeIdentity) {
  for (std::int64_t w = 1; w <= 5; ++w)
    for (std::int64_t wp = 1; wp <= 5; ++wp) {
      if (std::gcd(w, wp) != 1) continue;
      for (std::int64_t dj = std::max(w, wp) + 1; dj <= 40; ++dj) {
        if (!isolated_pair(w, wp, dj)) continue;
        const auto spec = wh_spectrum(WeightSystem{{w, wp}, dj});
        for (std::int64_t d = 1; d <= 40; ++d)
          for (std::int64_t i = 1; i <= d; ++i) {
            const Fraction x(i, d);
            ASSERT_EQ(lattice_count(w, wp, to_int64((Fraction(dj) * x).ceil()) - 1), window_count(spec, x))
                << "w=" << w << " w'=" << wp << " dj=" << dj << " x=" << x;
          }
      }
    }
}
