#ifndef CONESPEC_VERIFY_HPP
#define CONESPEC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "conespec/cone.hpp"
#include "conespec/curve.hpp"
#include "conespec/native_format.hpp"
#include "conespec/report.hpp"

namespace conespec {

namespace detail {

inline void check_local_spectra(CheckReport& rep, const std::vector<SpectrumVector>& spectra) {
  for (std::size_t k = 0; k < spectra.size(); ++k) {
    const auto& s = spectra[k];
    const auto idx = static_cast<std::int64_t>(k + 1);
    if (!sv_support_check(s)) {
      rep.fail("local_support", Mismatch{idx, -1, 0, 0, "point " + std::to_string(idx) + ": " + s.str()});
      return;
    }
    if (!sv_symmetry_check(s)) {
      rep.fail("local_symmetry", Mismatch{idx, -1, 0, 0, "point " + std::to_string(idx) + ": " + s.str()});
      return;
    }
  }
  rep.pass("local_support");
  rep.pass("local_symmetry");
}

}  // namespace detail

/// Thickening: the power transform of the reduced cone spectrum, laid out on
/// the grid of the thickened table.
inline ConeSpectrumTable thickened_table(const CurveConfig& cfg, std::int64_t m) {
  const CurveConfig reduced = with_multiplicity(cfg, 1);
  const ReducedConeConfig rc = reduced_cone_config(reduced, m);
  const SpectrumVector base = theorem1_reduced(rc);
  const SpectrumVector powered = theorem1_power(base, rc);
  return table_from_spectrum(powered, reduced.reduced_degree() * m, reduced.reduced_degree(), chi_u(reduced));
}

inline CheckReport verify_curve(const CurveConfig& cfg) {
  cfg.validate();
  CheckReport rep;
  const ConeSpectrumTable t = theorem2_table(cfg);

  if (auto m = row_sum_mismatch(t)) {
    rep.fail("row_sum", *m);
  } else {
    rep.pass("row_sum", "chi(U)=" + std::to_string(t.chi_u));
  }
  if (auto m = negativity_mismatch(t)) {
    rep.fail("nonnegative_below_d", *m);
  } else {
    rep.pass("nonnegative_below_d");
  }

  std::vector<SpectrumVector> locals;
  for (const auto& p : cfg.points) locals.push_back(p.local_spectrum());
  detail::check_local_spectra(rep, locals);
  bool mu_ok = true;
  for (std::size_t k = 0; k < cfg.points.size(); ++k) {
    const std::int64_t mu = cfg.points[k].milnor();
    if (locals[k].total() != mu) {
      rep.fail("local_total_is_milnor", Mismatch{static_cast<std::int64_t>(k + 1), -1, mu, locals[k].total(), "point index"});
      mu_ok = false;
      break;
    }
  }
  if (mu_ok) rep.pass("local_total_is_milnor");

  if (std::holds_alternative<IncidenceMatrix>(cfg.incidence)) {
    if (incidence_check(cfg)) {
      rep.pass("incidence_check");
    } else {
      rep.fail("incidence_check", Mismatch{0, -1, 0, 0, "global degree products differ from local sums"});
    }
  }

  if (cfg.all_ordinary() && cfg.has_incidence()) {
    const auto cor2 = corollary2_row(cfg);
    if (auto m = first_row_mismatch(t.rows[1], cor2, 1)) {
      rep.fail("cor2_equals_thm2_middle", *m);
    } else {
      rep.pass("cor2_equals_thm2_middle");
    }
  }

  if (cfg.is_reduced()) {
    const ConeSpectrumTable c1 = corollary1_table(cfg.reduced_degree(), reduced_cone_config(cfg).local_spectra);
    if (auto m = first_table_mismatch(c1, t)) {
      rep.fail("cor1_equals_thm2", *m);
    } else {
      rep.pass("cor1_equals_thm2");
    }
  }

  if (auto m = uniform_multiplicity(cfg)) {
    const ConeSpectrumTable th = thickened_table(cfg, *m);
    if (auto mm = first_table_mismatch(th, t)) {
      rep.fail("thickening_consistency", *mm, "m=" + std::to_string(*m));
    } else {
      rep.pass("thickening_consistency", "m=" + std::to_string(*m));
    }
  }
  return rep;
}

inline CheckReport verify_reduced(const ReducedConeConfig& cfg) {
  cfg.validate();
  CheckReport rep;
  detail::check_local_spectra(rep, cfg.local_spectra);
  const SpectrumVector base = theorem1_reduced(cfg);
  if (sv_support_check(base)) {
    rep.pass("cone_support");
  } else {
    rep.fail("cone_support", Mismatch{0, -1, 0, 0, base.str()});
  }
  if (cfg.power > 1) {
    const SpectrumVector powered = theorem1_power(base, cfg);
    if (sv_support_check(powered)) {
      rep.pass("power_support");
    } else {
      rep.fail("power_support", Mismatch{0, -1, 0, 0, powered.str()});
    }
  }
  if (cfg.ambient_dim == 2) {
    const ConeSpectrumTable c1 = corollary1_table(cfg.degree, cfg.local_spectra);
    const ConeSpectrumTable t1 = table_from_spectrum(base, cfg.degree, cfg.degree, c1.chi_u);
    if (auto m = first_table_mismatch(t1, c1)) {
      rep.fail("cor1_equals_theorem1", *m);
    } else {
      rep.pass("cor1_equals_theorem1");
    }
    if (auto m = row_sum_mismatch(c1)) {
      rep.fail("row_sum", *m);
    } else {
      rep.pass("row_sum", "chi(U)=" + std::to_string(c1.chi_u));
    }
  }
  return rep;
}

inline CheckReport verify(const NativeConfig& cfg) {
  return std::visit(
      [](const auto& c) -> CheckReport {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, CurveConfig>) {
          return verify_curve(c);
        } else {
          return verify_reduced(c);
        }
      },
      cfg);
}

}  // namespace conespec

#endif  // CONESPEC_VERIFY_HPP
