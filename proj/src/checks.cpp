#include "fieldpair/checks.hpp"

#include "fieldpair/sampler.hpp"

#include <algorithm>
#include <cmath>

namespace fieldpair {

namespace {

constexpr double kExact = 1e-12;
constexpr std::uint64_t kCheckSeed = 20080101;

Axis sweep_axis(int k, int n) { return Axis(2.0 * kPi * k / n); }

} // namespace

std::vector<CheckResult> run_invariant_checks(ConditionalReading reading) {
  std::vector<CheckResult> out;
  Rng rng(kCheckSeed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);

  {
    double r = 0.0;
    const Axis a(0.3);
    const FieldSuperposition f = FieldSuperposition::single(BasisField::on_plus(a));
    for (int k = 0; k < 360; ++k) {
      const Axis b = sweep_axis(k, 360);
      const double c = std::cos(0.5 * (b.theta() - a.theta()));
      const MeasurementResult m = measure(f, b);
      r = std::max({r, std::abs(m.prob_plus - c * c), std::abs(m.prob_minus - (1.0 - c * c))});
    }
    out.push_back({"single_particle_law", r, kExact});
  }
  {
    double r = 0.0;
    for (int k = 0; k < 100; ++k) {
      const Axis a(angle(rng));
      const Axis b(angle(rng));
      const QuadratureGrid grid = hemisphere_grid(Hemisphere{a}, 64, 128);
      const Vec3 bu = b.unit();
      const double avg = grid.integrate([&](const SurfacePoint &p) { return dot(p.vec(), bu) / kPi; });
      r = std::max(r, std::abs(avg - average_full_dot(b, Hemisphere{a})));
    }
    out.push_back({"quadrature_oracle", r, 1e-9});
  }
  {
    double r = 0.0;
    const Axis a(0.7);
    const FieldSuperposition f = FieldSuperposition::single(BasisField::on_plus(a));
    for (int j = 0; j < 36; ++j) {
      const FieldSuperposition g = rebasis(a, sweep_axis(j, 36));
      for (int k = 0; k < 360; ++k) {
        const Axis b = sweep_axis(k, 360);
        r = std::max(r, std::abs(measure(f, b).prob_plus - measure(g, b).prob_plus));
      }
    }
    out.push_back({"equivalence_class", r, kExact});
  }
  {
    double r = 0.0;
    for (AlphaSign sign : {AlphaSign::Plus, AlphaSign::Minus}) {
      const FieldSuperposition f = make_alpha(Axis(0.4), sign);
      for (int k = 0; k < 360; ++k) {
        const MeasurementResult m = measure(f, sweep_axis(k, 360));
        r = std::max({r, std::abs(m.prob_plus - 0.5), std::abs(m.prob_minus - 0.5)});
      }
    }
    out.push_back({"alpha_isotropy", r, kExact});
  }
  {
    double r = 0.0;
    for (int i = 0; i < 360; ++i) {
      for (int k = 0; k < 360; ++k) {
        r = std::max(r, consistency_residual(sweep_axis(i, 360), sweep_axis(k, 360), reading));
      }
    }
    out.push_back({"conditional_consistency", r, kExact});
  }
  {
    double law = 0.0;
    double routes = 0.0;
    double u_dep = 0.0;
    double signaling = 0.0;
    double corr = 0.0;
    double f0 = 0.0;
    for (int k = 0; k < 360; ++k) {
      const double delta = 2.0 * kPi * k / 360;
      const JointSetting s{Axis(0.2), Axis(0.2 + delta)};
      const JointDistribution d = joint_distribution(s);
      const double sn = std::sin(0.5 * delta);
      const double cs = std::cos(0.5 * delta);
      law = std::max({law, std::abs(d.p[0][0] - 0.5 * sn * sn), std::abs(d.p[1][1] - 0.5 * sn * sn),
                      std::abs(d.p[0][1] - 0.5 * cs * cs), std::abs(d.p[1][0] - 0.5 * cs * cs)});
      routes = std::max({routes, max_abs_diff(d, joint_via_conditional(s, Wing::First, reading)),
                         max_abs_diff(d, joint_via_conditional(s, Wing::Second, reading))});
      if (k % 10 == 0) {
        for (int j = 0; j < 36; ++j) {
          u_dep = std::max(u_dep, max_abs_diff(d, joint_distribution(s, sweep_axis(j, 36))));
        }
        f0 = std::max(f0, f0_noncontribution_check(s).aleph_route_discrepancy);
      }
      const JointSetting remote1{Axis(0.2), sweep_axis(k, 360)};
      const JointSetting remote2{sweep_axis(k, 360), Axis(0.2)};
      for (double m : {marginal(remote1, Wing::First)[0], marginal(remote2, Wing::Second)[0]}) {
        signaling = std::max(signaling, std::abs(m - 0.5));
      }
      corr = std::max(corr, std::abs(correlation(s) + std::cos(delta)));
    }
    out.push_back({"joint_law", law, kExact});
    out.push_back({"route_agreement", routes, kExact});
    out.push_back({"u_independence", u_dep, kExact});
    out.push_back({"f0_exclusion", f0, kExact});
    out.push_back({"no_signaling", signaling, kExact});
    out.push_back({"correlation_law", corr, kExact});
  }
  {
    const ChshAngles std_angles{Axis(0.0), Axis(0.5 * kPi), Axis(0.25 * kPi), Axis(0.75 * kPi)};
    const double s = chsh(std_angles, ChshMode::Analytic).s;
    out.push_back({"chsh_tsirelson", std::abs(s - kTsirelsonBound), kExact});
  }
  {
    const FieldSuperposition f = FieldSuperposition::single(BasisField::on_plus(Axis(0.0)));
    const Axis b(0.25 * kPi);
    const Axis c(0.5 * kPi);
    const auto bc = path_probabilities(f, {b, c});
    const auto cb = path_probabilities(f, {c, b});
    double diff = 0.0;
    for (const auto &[path, p] : bc) {
      diff = std::max(diff, std::abs(p - cb.at(path)));
    }
    // passes when the orderings differ by more than 0.1
    out.push_back({"noncommutativity_witness", std::max(0.0, 0.1 - diff), 0.0});
  }
  return out;
}

} // namespace fieldpair
