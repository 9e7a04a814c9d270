#ifndef CONESPEC_TESTS_SUPPORT_HPP
#define CONESPEC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "conespec/conespec.hpp"

namespace testsupport {

using namespace conespec;

inline std::string fixture(const std::string& name) { return std::string(CONESPEC_FIXTURES) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CurveConfig load_curve(const std::string& name, const Binding& b = {}) {
  return std::get<CurveConfig>(parse_config_text(slurp(fixture(name)), b));
}

inline std::vector<std::int64_t> ints(std::initializer_list<std::int64_t> v) { return v; }

/// One of the parameterized fixtures at the parameter values printed next to it.
struct PrintedTable {
  std::string file;
  Binding binding;
  std::vector<std::int64_t> row0;
  std::vector<std::int64_t> row1;
  std::vector<std::int64_t> row2;  // without the i=d cell
  std::int64_t chi;
};

inline std::vector<PrintedTable> printed_tables() {
  std::vector<PrintedTable> out;
  out.push_back({"conics_lines.sing",
                 {{"a", 2}, {"b", 5}, {"c", 2}},
                 {0, 0, 0, 1, 1, 1, 2, 1, 1, 2, 2, 2, 3, 9},
                 {3, 4, 4, 3, 4, 4, 3, 4, 4, 3, 4, 4, 3, -4},
                 {3, 2, 2, 2, 1, 1, 1, 1, 1, 1, 0, 0, 0},
                 6});
  out.push_back({"cubic_pencil.sing",
                 {{"a", 3}, {"b", 2}, {"c", 2}},
                 {0, 0, 0, 2, 3, 4, 0, 3, 4, 4, 9, 11, 4, 5, 11, 13, 15, 24},
                 {6, 8, 10, 14, 14, 14, 12, 14, 14, 14, 12, 10, 14, 14, 10, 8, 6, -4},
                 {15, 13, 11, 5, 4, 3, 9, 4, 3, 3, 0, 0, 3, 2, 0, 0, 0},
                 21});
  PrintedTable s11{"sextic_pencil.sing",
                {{"a", 3}, {"b", 2}, {"c", 1}},
                {0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 3, 3, 4, 4, 5, 5, 3, 3, 4, 4, 5, 5, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 25},
                std::vector<std::int64_t>(36, 9),
                {8, 8, 7, 7, 6, 6, 5, 5, 4, 4, 3, 3, 5, 5, 4, 4, 3, 3, 5, 5, 4, 4, 3, 3, 5, 5, 4, 4, 3, 3, 2, 2, 1, 1, 0, 0},
                17};
  s11.row1.push_back(-9);
  out.push_back(s11);
  out.push_back({"five_lines.sing",
                 {{"a", 4}, {"b", 2}, {"c", 0}},
                 {0, 0, 0, 0, 0, 1, 0, 1, 4},
                 {0, 1, 1, 1, 1, 0, 1, 0, -4},
                 {1, 0, 0, 0, 0, 0, 0, 0},
                 1});
  out.push_back({"five_lines.sing",
                 {{"a", 5}, {"b", 1}, {"c", 0}},
                 {0, 0, 0, 0, 1, 1, 1, 1, 4},
                 {0, 0, 1, 0, 0, 0, 0, 0, -4},
                 {1, 1, 0, 1, 0, 0, 0, 0},
                 1});
  out.push_back({"lines_conic.sing",
                 {{"a", 1}, {"b", 1}, {"c", 4}},
                 {0, 0, 0, 0, 1, 1, 0, 0, 3},
                 {1, 1, 1, 0, 0, 0, 1, 1, -3},
                 {0, 0, 0, 1, 0, 0, 0, 0},
                 1});
  return out;
}

/// The six parameterized fixtures over the parameter ranges stated next to them.
inline std::vector<CurveConfig> fixture_corpus() {
  std::vector<CurveConfig> out;
  for (const std::string f : {"conics_lines.sing", "cubic_pencil.sing", "quartic_pencil.sing", "sextic_pencil.sing", "five_lines.sing", "lines_conic.sing"})
    for (std::int64_t a = 1; a <= 5; ++a)
      for (std::int64_t b = 1; b <= 5; ++b)
        for (std::int64_t c = 0; c <= 4; ++c) out.push_back(load_curve(f, {{"a", a}, {"b", b}, {"c", c}}));
  return out;
}

/// True when some f of weighted degree d in two variables of weights (w, wp)
/// has an isolated singularity: each variable needs a monomial x^a or x^a y.
inline bool isolated_pair(std::int64_t w, std::int64_t wp, std::int64_t d) {
  auto covered = [d](std::int64_t a, std::int64_t b) {
    for (std::int64_t k = 1; k * a <= d; ++k)
      if (k * a == d || k * a + b == d) return true;
    return false;
  };
  return covered(w, wp) && covered(wp, w);
}

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Ordinary configuration drawn without a realizability check: up to 6
/// components of degree <= 4 and multiplicity <= 5, up to 6 points with up to
/// 8 branches whose multiplicities are taken from the component multiplicities.
inline CurveConfig random_ordinary(Rng& rng) {
  CurveConfig cfg;
  const auto r = uniform(rng, 1, 6);
  for (std::int64_t k = 0; k < r; ++k) cfg.components.push_back({uniform(rng, 1, 4), uniform(rng, 1, 5)});
  const auto q = uniform(rng, 0, 6);
  for (std::int64_t j = 0; j < q; ++j) {
    const auto nb = uniform(rng, 2, 8);
    std::vector<std::int64_t> mults;
    for (std::int64_t l = 0; l < nb; ++l)
      mults.push_back(cfg.components[static_cast<std::size_t>(uniform(rng, 0, r - 1))].multiplicity);
    std::sort(mults.rbegin(), mults.rend());
    cfg.points.push_back(SingularPoint::ordinary_point(mults));
  }
  cfg.nodes = uniform(rng, 0, 5);
  if (uniform(rng, 0, 3) > 0) {
    IncidenceMultiset ms;
    const auto pairs = uniform(rng, 0, 3);
    for (std::int64_t k = 0; k < pairs; ++k) ms.entries.emplace_back(uniform(rng, 1, 4), uniform(rng, 1, 3));
    cfg.incidence = ms;
  }
  return cfg;
}

/// Lines with small integer coefficients, their exact intersection points,
/// optionally a few generic smooth curves meeting everything in nodes, and the
/// full incidence matrix. Component multiplicities are drawn from [1, max_mult].
inline CurveConfig random_arrangement(Rng& rng, std::int64_t max_mult, bool list_some_nodes = true) {
  using Vec = std::array<std::int64_t, 3>;
  auto primitive = [](Vec v) {
    std::int64_t g = std::gcd(std::gcd(std::abs(v[0]), std::abs(v[1])), std::abs(v[2]));
    if (g == 0) return v;
    for (auto& x : v) x /= g;
    for (auto x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
    return v;
  };
  std::set<Vec> chosen;
  std::vector<Vec> lines;
  const auto nlines = uniform(rng, 2, 8);
  while (static_cast<std::int64_t>(lines.size()) < nlines) {
    Vec v{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)};
    if (v == Vec{0, 0, 0}) continue;
    v = primitive(v);
    if (chosen.insert(v).second) lines.push_back(v);
  }
  std::map<Vec, std::set<std::size_t>> through;
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      const Vec& u = lines[a];
      const Vec& v = lines[b];
      const Vec p = primitive({u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]});
      through[p].insert(a);
      through[p].insert(b);
    }

  CurveConfig cfg;
  for (std::size_t k = 0; k < lines.size(); ++k) cfg.components.push_back({1, uniform(rng, 1, max_mult)});
  const auto ncurves = uniform(rng, 0, 2);
  for (std::int64_t k = 0; k < ncurves; ++k) cfg.components.push_back({uniform(rng, 2, 4), uniform(rng, 1, max_mult)});
  const std::size_t ncomp = cfg.components.size();

  IncidenceMatrix m;
  std::vector<std::vector<std::int64_t>> node_rows;
  for (const auto& [pt, idx] : through) {
    std::vector<std::int64_t> row(ncomp, 0);
    std::vector<std::int64_t> mults;
    for (auto k : idx) {
      row[k] = 1;
      mults.push_back(cfg.components[k].multiplicity);
    }
    if (idx.size() >= 3 || (list_some_nodes && uniform(rng, 0, 1) == 1)) {
      cfg.points.push_back(SingularPoint::ordinary_point(mults));
      m.rows.push_back(row);
    } else {
      ++cfg.nodes;
      node_rows.push_back(row);
    }
  }
  // generic curves: transversal to everything, avoiding the arrangement points
  for (std::size_t k = lines.size(); k < ncomp; ++k)
    for (std::size_t other = 0; other < k; ++other) {
      const std::int64_t meet = cfg.components[k].degree * cfg.components[other].degree;
      for (std::int64_t t = 0; t < meet; ++t) {
        std::vector<std::int64_t> row(ncomp, 0);
        row[k] = 1;
        row[other] = 1;
        ++cfg.nodes;
        node_rows.push_back(row);
      }
    }
  for (auto& r : node_rows) m.rows.push_back(std::move(r));
  cfg.incidence = m;
  return cfg;
}

/// Reduced configuration with weighted points. Each point has coprime weights
/// and branch degrees taken from {w, w', w w'}; degrees and branch counts are
/// chosen so that the Milnor numbers are integral.
inline CurveConfig random_swh_reduced(Rng& rng) {
  CurveConfig cfg;
  const auto r = uniform(rng, 1, 4);
  for (std::int64_t k = 0; k < r; ++k) cfg.components.push_back({uniform(rng, 1, 5), 1});
  const auto q = uniform(rng, 0, 3);
  for (std::int64_t j = 0; j < q; ++j) {
    SingularPoint p;
    do {
      p.w = uniform(rng, 1, 4);
      p.wp = uniform(rng, 1, 5);
    } while (std::gcd(p.w, p.wp) != 1);
    // branches: eps*w + eps'*w' + c*w*w' with eps, eps' in {0,1}
    const bool e1 = uniform(rng, 0, 1) == 1;
    const bool e2 = uniform(rng, 0, 1) == 1;
    const auto c = uniform(rng, (e1 || e2) ? 0 : 1, 3);
    if (e1) p.branches.push_back({p.w, 1});
    if (e2) p.branches.push_back({p.wp, 1});
    for (std::int64_t k = 0; k < c; ++k) p.branches.push_back({p.w * p.wp, 1});
    if (p.degree() <= std::max(p.w, p.wp)) continue;
    cfg.points.push_back(p);
  }
  cfg.nodes = uniform(rng, 0, 4);
  return cfg;
}

}  // namespace testsupport

#endif  // CONESPEC_TESTS_SUPPORT_HPP
