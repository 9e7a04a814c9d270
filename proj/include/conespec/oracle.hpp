#ifndef CONESPEC_ORACLE_HPP
#define CONESPEC_ORACLE_HPP

// Brute-force and transliterated implementations kept apart from the engine,
// for differential testing.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "conespec/cone.hpp"
#include "conespec/curve.hpp"
#include "conespec/error.hpp"
#include "conespec/fraction.hpp"
#include "conespec/report.hpp"
#include "conespec/singular_format.hpp"

namespace conespec::oracle {

inline std::int64_t brute_lattice(std::int64_t w, std::int64_t wp, std::int64_t bound) {
  std::int64_t count = 0;
  for (std::int64_t m1 = 1; m1 <= bound; ++m1)
    for (std::int64_t m2 = 1; m2 <= bound; ++m2)
      if (w * m1 + wp * m2 <= bound) ++count;
  return count;
}

/// Coefficients of (t + ... + t^{d'-1})^{n+1} by repeated convolution; index = exponent.
inline std::vector<std::int64_t> brute_gamma_dense(std::int64_t dprime, std::int64_t n) {
  std::vector<std::int64_t> factor(static_cast<std::size_t>(dprime), 0);
  for (std::int64_t k = 1; k < dprime; ++k) factor[static_cast<std::size_t>(k)] = 1;
  std::vector<std::int64_t> acc{1};
  for (std::int64_t step = 0; step <= n; ++step) {
    std::vector<std::int64_t> next(acc.size() + factor.size() - 1, 0);
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (std::size_t b = 0; b < factor.size(); ++b) next[a + b] += acc[a] * factor[b];
    acc = std::move(next);
  }
  return acc;
}

/// Same coefficients restricted to [n+1, (n+1)(d'-1)].
inline std::vector<std::int64_t> brute_gamma(std::int64_t dprime, std::int64_t n) {
  const auto dense = brute_gamma_dense(dprime, n);
  std::vector<std::int64_t> out;
  for (std::int64_t i = n + 1; i <= (n + 1) * (dprime - 1); ++i) out.push_back(dense[static_cast<std::size_t>(i)]);
  return out;
}

/// ceil(v) the way the listing computes it: m - int(m - v) with m = 100,
/// where int() truncates toward zero. Valid only for v < 100.
inline BigInt idiom_ceiling(const Fraction& v) {
  const Fraction shifted = Fraction(100) - v;
  const BigInt trunc = shifted.num() / shifted.den();  // toward zero
  return BigInt(100) - trunc;
}

/// Variables of the reference listing, one-to-one.
struct ReferenceState {
  std::vector<std::vector<std::int64_t>> al;  // row j: branch count, then multiplicities
  std::vector<std::int64_t> ds;               // expanded component degrees
  std::vector<std::int64_t> as;               // expanded component multiplicities
  std::vector<std::vector<std::int64_t>> sp;  // 4 x d; sp[3] holds the column sums
  std::int64_t d = 0;
  std::int64_t dr = 0;
  std::int64_t dsq = 0;
  std::int64_t OD = 0;  // NOLINT(readability-identifier-naming)
  std::int64_t q = 0;
  std::int64_t chi = 0;
};

namespace detail {

// Exact ceiling, checked against the listing's idiom whenever it applies.
inline std::int64_t checked_ceiling(const Fraction& v) {
  const BigInt exact = v.ceil();
  if (v < Fraction(100) && idiom_ceiling(v) != exact)
    throw InternalError("ceiling idiom disagrees with exact ceiling at " + v.str());
  return to_int64(exact);
}

}  // namespace detail

/// Transliteration of the reference listing: same variables, same loops, same
/// order of evaluation. Only the ceiling idiom is replaced by the exact ceiling.
inline ReferenceState reference_run(const SingularInts& vec) {
  ReferenceState st;
  const auto& GlCmp = vec.glcmp;  // NOLINT(readability-identifier-naming)
  const auto& LG = vec.lg;        // NOLINT(readability-identifier-naming)
  st.OD = vec.od;

  // s=size(LG) div 2; w accumulates LG[2k-1]*LG[2k]*(LG[2k]-1) div 2 (count is negative)
  const std::int64_t s_lg = static_cast<std::int64_t>(LG.size()) / 2;
  std::int64_t w = 0;
  for (std::int64_t k = 1; k <= s_lg; ++k) {
    const std::int64_t cnt = LG[static_cast<std::size_t>(2 * k - 2)];
    const std::int64_t val = LG[static_cast<std::size_t>(2 * k - 1)];
    w = w + cnt * val * (val - 1) / 2;
  }
  st.dsq = w;

  const std::int64_t pcount = static_cast<std::int64_t>(GlCmp.size()) / 3;
  for (std::int64_t k = 1; k <= pcount; ++k) {
    for (std::int64_t i = 1; i <= -GlCmp[static_cast<std::size_t>(3 * k - 3)]; ++i) {
      st.ds.push_back(GlCmp[static_cast<std::size_t>(3 * k - 2)]);
      st.as.push_back(GlCmp[static_cast<std::size_t>(3 * k - 1)]);
    }
  }
  const std::int64_t r = static_cast<std::int64_t>(st.ds.size());
  for (std::int64_t k = 0; k < r; ++k) st.dsq = st.dsq + st.ds[k] * (st.ds[k] - 1) / 2;
  for (std::int64_t k = 0; k < r; ++k) {
    st.d = st.d + st.ds[k] * st.as[k];
    st.dr = st.dr + st.ds[k];
  }
  const std::int64_t d = st.d;
  const std::int64_t dr = st.dr;
  st.sp.assign(4, std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));

  // z = Si with a trailing 0; 1-based like the listing
  std::vector<std::int64_t> z(1, 0);
  z.insert(z.end(), vec.si.begin(), vec.si.end());
  const std::int64_t n = static_cast<std::int64_t>(vec.si.size());
  z.push_back(0);

  // al is 1-based in both indices; row 0 / column 0 unused.
  std::vector<std::vector<std::int64_t>> al(1);
  auto al_at = [&](std::int64_t j, std::int64_t l) -> std::int64_t& {
    if (static_cast<std::int64_t>(al.size()) <= j) al.resize(static_cast<std::size_t>(j + 1));
    auto& row = al[static_cast<std::size_t>(j)];
    if (static_cast<std::int64_t>(row.size()) <= l) row.resize(static_cast<std::size_t>(l + 1), 0);
    return row[static_cast<std::size_t>(l)];
  };
  std::int64_t j = 0;
  std::int64_t l = 1;
  std::int64_t p = 1;
  while (p < n) {
    j++;
    const std::int64_t s = -z[static_cast<std::size_t>(p)];
    al_at(j, 1) = z[static_cast<std::size_t>(p + 1)];
    for (l = al_at(j, 1) + 1; l > 1; l--) al_at(j, l) = 1;
    p = p + 2;
    for (; p <= n && z[static_cast<std::size_t>(p)] > 0; p++) {
      l++;
      al_at(j, l) = z[static_cast<std::size_t>(p)];
    }
    for (std::int64_t i = 1; i < s; i++)
      for (l = 1; l <= al_at(j, 1) + 1; l++) al_at(j + i, l) = al_at(j, l);
    j = j + s - 1;
  }
  st.q = j;
  const std::int64_t q = st.q;

  for (std::int64_t i = 1; i <= d; i++) {
    std::int64_t s = 0;
    for (std::int64_t k = 0; k < r; k++) s = s + st.ds[k] * (detail::checked_ceiling(Fraction(st.as[k] * i, d)) - 1);
    const std::int64_t io = i - s;
    auto& sp1 = st.sp[0][static_cast<std::size_t>(i - 1)];
    auto& sp2 = st.sp[1][static_cast<std::size_t>(i - 1)];
    auto& sp3 = st.sp[2][static_cast<std::size_t>(i - 1)];
    sp1 = (io - 1) * (io - 2) / 2;
    sp2 = st.dsq + (io - 1) * (dr - io - 1);
    sp3 = (dr - io - 1) * (dr - io - 2) / 2;
    for (std::int64_t jj = 1; jj <= q; jj++) {
      Fraction ga(0);
      for (l = 2; l <= al_at(jj, 1) + 1; l++) {
        const Fraction v(al_at(jj, l) * i, d);
        ga = ga + v - Fraction(detail::checked_ceiling(v)) + Fraction(1);
      }
      const std::int64_t pp = detail::checked_ceiling(ga);
      const std::int64_t nb = al_at(jj, 1);
      sp1 = sp1 - (pp - 1) * (pp - 2) / 2;
      sp2 = sp2 - (pp - 1) * (nb - pp);
      sp3 = sp3 - (nb - pp) * (nb - pp - 1) / 2;
    }
  }
  for (std::int64_t i = 1; i <= d; i++)
    for (int row = 0; row < 3; ++row) st.sp[3][static_cast<std::size_t>(i - 1)] += st.sp[row][static_cast<std::size_t>(i - 1)];

  std::int64_t acc = 0;
  for (std::int64_t jj = 1; jj <= q; jj++) acc = acc + (al_at(jj, 1) - 1) * (al_at(jj, 1) - 1);
  st.chi = dr * (dr - 3) + 3 - acc - st.OD;

  al.resize(static_cast<std::size_t>(q + 1));
  st.al.assign(al.begin() + 1, al.end());
  for (auto& row : st.al)
    if (!row.empty()) row.erase(row.begin());
  return st;
}

/// Integer vectors describing an ordinary configuration, one entry per
/// component and per point.
inline SingularInts to_vectors(const CurveConfig& cfg) {
  if (!cfg.all_ordinary()) throw InputError("E_NOT_ORDINARY", "the reference listing handles ordinary points only");
  SingularInts v;
  for (const auto& c : cfg.components) v.glcmp.insert(v.glcmp.end(), {-1, c.degree, c.multiplicity});
  for (const auto& p : cfg.points) {
    v.si.push_back(-1);
    v.si.push_back(p.branch_count());
    for (const auto& b : p.branches) v.si.push_back(b.multiplicity);
  }
  v.od = cfg.nodes;
  std::map<std::int64_t, std::int64_t> by_value;
  if (const auto* ms = std::get_if<IncidenceMultiset>(&cfg.incidence)) {
    for (const auto& [count, value] : ms->entries) v.lg.insert(v.lg.end(), {-count, value});
  } else if (const auto* m = std::get_if<IncidenceMatrix>(&cfg.incidence)) {
    for (const auto& row : m->rows)
      for (auto x : row)
        if (x >= 1) ++by_value[x];
    for (const auto& [value, count] : by_value) v.lg.insert(v.lg.end(), {-count, value});
  }
  if (v.lg.empty()) v.lg.push_back(0);
  return v;
}

/// The listing's output as a table. The listing does not subtract
/// delta_{i,d} in its e=2 row, so that one cell is shifted back here.
inline ConeSpectrumTable reference_table(const ReferenceState& st) {
  ConeSpectrumTable t = ConeSpectrumTable::zeros(st.d, st.dr);
  t.chi_u = st.chi;
  for (int e = 0; e < 3; ++e)
    for (std::int64_t i = 1; i <= st.d; ++i) t.at(e, i) = st.sp[static_cast<std::size_t>(e)][static_cast<std::size_t>(i - 1)];
  if (st.d >= 1) t.at(2, st.d) -= 1;
  return t;
}

inline ConeSpectrumTable reference_ordinary(const CurveConfig& cfg) {
  cfg.validate();
  return reference_table(reference_run(to_vectors(cfg)));
}

/// Engine against the oracles for one configuration.
inline CheckReport cross_check(const CurveConfig& cfg) {
  CheckReport rep;
  std::vector<LatticeQuery> touched;
  const ConeSpectrumTable thm2 = theorem2_table(cfg, &touched);

  if (cfg.all_ordinary()) {
    const ConeSpectrumTable ref = reference_ordinary(cfg);
    if (auto m = first_table_mismatch(ref, thm2, {0, 2})) {
      rep.fail("rows_0_2_vs_reference", *m);
    } else {
      rep.pass("rows_0_2_vs_reference");
    }
    if (ref.chi_u != thm2.chi_u) {
      rep.fail("chi_vs_reference", Mismatch{0, -1, ref.chi_u, thm2.chi_u, "chi(U)"});
    } else {
      rep.pass("chi_vs_reference", "chi(U)=" + std::to_string(thm2.chi_u));
    }
    if (cfg.has_incidence()) {
      const auto cor2 = corollary2_row(cfg);
      if (auto m = first_row_mismatch(ref.rows[1], cor2, 1)) {
        rep.fail("cor2_row_vs_reference", *m);
      } else {
        rep.pass("cor2_row_vs_reference");
      }
      if (auto m = row_sum_mismatch(ref)) {
        rep.fail("reference_row_sum", *m);
      } else {
        rep.pass("reference_row_sum");
      }
    }
  }

  bool lattice_ok = true;
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> seen;
  for (const auto& qy : touched) {
    if (!seen.insert({qy.w, qy.wp, qy.bound}).second) continue;
    const std::int64_t brute = brute_lattice(qy.w, qy.wp, qy.bound);
    if (brute != qy.value) {
      rep.fail("lattice_count_vs_brute",
               Mismatch{qy.bound, -1, brute, qy.value,
                        "i is the bound; w=" + std::to_string(qy.w) + " w'=" + std::to_string(qy.wp)});
      lattice_ok = false;
      break;
    }
  }
  if (lattice_ok) rep.pass("lattice_count_vs_brute", std::to_string(seen.size()) + " distinct queries");

  const auto fast = gamma_coeffs(cfg.reduced_degree(), 2);
  const auto slow = brute_gamma(cfg.reduced_degree(), 2);
  if (auto m = first_row_mismatch(slow, fast.values, -1)) {
    m->note = "index counts from exponent 3";
    rep.fail("gamma_coeffs_vs_brute", *m);
  } else {
    rep.pass("gamma_coeffs_vs_brute");
  }

  if (auto m = row_sum_mismatch(thm2)) {
    rep.fail("row_sum", *m);
  } else {
    rep.pass("row_sum");
  }
  return rep;
}

}  // namespace conespec::oracle

#endif  // CONESPEC_ORACLE_HPP
