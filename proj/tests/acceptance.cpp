// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Usage: acceptance <path-to-fieldpair-cli>

#include "fieldpair/sampler.hpp"

#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace fieldpair;

namespace {

struct Outcome_ {
  bool ok;
  std::string detail;
};

std::string fmt(const char *f, double x) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double sweep_angle(int k, int n) { return 2.0 * kPi * k / n; }

Outcome_ single_particle_law() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(101);
  std::uniform_real_distribution<double> ang(-2 * kPi, 2 * kPi);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double ta = ang(rng), tb = ang(rng);
    const MeasurementResult m = measure(FieldSuperposition::single(BasisField::on_plus(Axis(ta))), Axis(tb));
    const double c = std::cos((tb - ta) / 2), s = std::sin((ta - tb) / 2);
    worst = std::max({worst, std::abs(m.prob_plus - c * c), std::abs(m.prob_minus - s * s)});
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-12 && secs < 1.0, "max residual " + fmt("%.3g", worst) + " (tol 1e-12), " + fmt("%.3f", secs) + " s (< 1 s)"};
}

Outcome_ quadrature_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(102);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Axis a(ang(rng)), b(ang(rng));
    const QuadratureGrid grid = hemisphere_grid(Hemisphere{a}, 64, 128);
    const Vec3 bu = b.unit();
    const double avg = grid.integrate([&](const SurfacePoint &p) { return dot(p.vec(), bu) / kPi; });
    worst = std::max(worst, std::abs(avg - std::cos(b.theta() - a.theta())));
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-9 && secs < 5.0, "max residual " + fmt("%.3g", worst) + " (tol 1e-9), " + fmt("%.3f", secs) + " s (< 5 s)"};
}

Outcome_ equivalence_class() {
  Rng rng(103);
  std::uniform_real_distribution<double> ang(-2 * kPi, 2 * kPi);
  const Axis a(0.37);
  const FieldSuperposition f = FieldSuperposition::single(BasisField::on_plus(a));
  double worst = 0.0;
  for (int j = 0; j < 36; ++j) {
    const FieldSuperposition g = rebasis(a, Axis(ang(rng)));
    for (int k = 0; k < 360; ++k) {
      const Axis b(sweep_angle(k, 360));
      const MeasurementResult x = measure(f, b), y = measure(g, b);
      worst = std::max({worst, std::abs(x.prob_plus - y.prob_plus), std::abs(x.prob_minus - y.prob_minus)});
    }
  }
  return {worst <= 1e-12, "max probability change " + fmt("%.3g", worst) + " (tol 1e-12)"};
}

Outcome_ alpha_isotropy() {
  double worst = 0.0;
  for (AlphaSign sign : {AlphaSign::Plus, AlphaSign::Minus}) {
    const FieldSuperposition f = make_alpha(Axis(1.1), sign);
    for (int k = 0; k < 360; ++k) {
      const MeasurementResult m = measure(f, Axis(sweep_angle(k, 360)));
      worst = std::max({worst, std::abs(m.prob_plus - 0.5), std::abs(m.prob_minus - 0.5)});
    }
  }
  return {worst <= 1e-12, "max |p - 1/2| " + fmt("%.3g", worst) + " (tol 1e-12)"};
}

Outcome_ conditional_consistency() {
  double corrected = 0.0;
  double literal_err = 0.0;
  for (int i = 0; i < 360; ++i) {
    for (int k = 0; k < 360; ++k) {
      const Axis u(sweep_angle(i, 360)), b(sweep_angle(k, 360));
      corrected = std::max(corrected, consistency_residual(u, b));
      const double c = std::cos((u.theta() - b.theta()) / 2);
      literal_err = std::max(literal_err, std::abs(consistency_residual(u, b, ConditionalReading::LiteralPrinted) -
                                                   std::abs(c * c - 0.5)));
    }
  }
  return {corrected <= 1e-12 && literal_err <= 1e-12,
          "corrected residual " + fmt("%.3g", corrected) + ", literal-formula mismatch " + fmt("%.3g", literal_err) +
              " (tol 1e-12)"};
}

Outcome_ joint_law() {
  double law = 0.0, routes = 0.0, u_dep = 0.0;
  for (int k = 0; k < 360; ++k) {
    const double delta = sweep_angle(k, 360);
    const JointSetting s{Axis(0.5), Axis(0.5 + delta)};
    const JointDistribution d = joint_distribution(s);
    const double same = 0.5 * std::pow(std::sin(delta / 2), 2);
    const double opposite = 0.5 * std::pow(std::cos(delta / 2), 2);
    law = std::max({law, std::abs(d.p[0][0] - same), std::abs(d.p[1][1] - same), std::abs(d.p[0][1] - opposite),
                    std::abs(d.p[1][0] - opposite)});
    routes = std::max({routes, max_abs_diff(d, joint_via_conditional(s, Wing::First)),
                       max_abs_diff(d, joint_via_conditional(s, Wing::Second))});
    for (int j = 0; j < 36; ++j) {
      u_dep = std::max(u_dep, max_abs_diff(d, joint_distribution(s, Axis(sweep_angle(j, 36)))));
    }
  }
  return {law <= 1e-12 && routes <= 1e-12 && u_dep <= 1e-12,
          "law " + fmt("%.3g", law) + ", routes " + fmt("%.3g", routes) + ", u-dependence " + fmt("%.3g", u_dep) +
              " (tol 1e-12)"};
}

Outcome_ no_signaling() {
  double worst = 0.0;
  const Axis local(0.9);
  for (int k = 0; k < 360; ++k) {
    const Axis remote(sweep_angle(k, 360));
    for (double m : {marginal({local, remote}, Wing::First)[0], marginal({local, remote}, Wing::First)[1],
                     marginal({remote, local}, Wing::Second)[0], marginal({remote, local}, Wing::Second)[1]}) {
      worst = std::max(worst, std::abs(m - 0.5));
    }
  }
  return {worst <= 1e-12, "max |marginal - 1/2| " + fmt("%.3g", worst) + " (tol 1e-12)"};
}

Outcome_ correlation_and_chsh() {
  double corr = 0.0;
  for (int k = 0; k < 360; ++k) {
    const double delta = sweep_angle(k, 360);
    corr = std::max(corr, std::abs(correlation({Axis(-0.4), Axis(-0.4 + delta)}) + std::cos(delta)));
  }
  const ChshAngles standard{Axis::from_degrees(0), Axis::from_degrees(90), Axis::from_degrees(45),
                            Axis::from_degrees(135)};
  const double s_exact = chsh(standard, ChshMode::Analytic).s;
  const auto t0 = std::chrono::steady_clock::now();
  const ChshResult mc = chsh(standard, ChshMode::MonteCarlo, 1000000, 42);
  const double secs = seconds_since(t0);
  const bool ok = corr <= 1e-12 && std::abs(s_exact - kTsirelsonBound) <= 1e-12 &&
                  std::abs(mc.s - kTsirelsonBound) <= 0.01 && secs < 10.0;
  return {ok, "E residual " + fmt("%.3g", corr) + ", analytic S " + fmt("%.12g", s_exact) + ", Monte Carlo S " +
                  fmt("%.5f", mc.s) + " +- " + fmt("%.5f", mc.s_standard_error) + " (tol 0.01) in " +
                  fmt("%.2f", secs) + " s (< 10 s)"};
}

Outcome_ baseline_bound() {
  RunOptions naive;
  naive.kind = SamplerKind::Naive;
  bool ok = true;
  double worst_z = 0.0;
  const std::array<double, 4> deltas{0.0, kPi / 4, kPi / 2, 3 * kPi / 4};
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    const RunStats st = run_experiment({Axis(0.0), Axis(deltas[k])}, 1000000, derive_seed(900, k), naive);
    const double z = std::abs(st.correlation() + 0.5 * std::cos(deltas[k])) / st.correlation_standard_error();
    worst_z = std::max(worst_z, z);
    ok = ok && z <= 3.0;
  }
  const ChshAngles standard{Axis::from_degrees(0), Axis::from_degrees(90), Axis::from_degrees(45),
                            Axis::from_degrees(135)};
  const ChshResult s_std = chsh(standard, ChshMode::MonteCarlo, 1000000, 901, naive);
  ok = ok && std::abs(s_std.s - std::sqrt(2.0)) <= 0.01;

  Rng rng(902);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  double worst_excess = -1e9;
  for (int i = 0; i < 50; ++i) {
    const ChshAngles angles{Axis(ang(rng)), Axis(ang(rng)), Axis(ang(rng)), Axis(ang(rng))};
    const ChshResult r = chsh(angles, ChshMode::MonteCarlo, 100000, derive_seed(903, i), naive);
    worst_excess = std::max(worst_excess, (r.s - kBellBound) / r.s_standard_error);
    ok = ok && r.s <= kBellBound + 3 * r.s_standard_error;
  }
  return {ok, "worst E z-score " + fmt("%.2f", worst_z) + " (<= 3), standard S " + fmt("%.5f", s_std.s) +
                  " (sqrt2 +- 0.01), max (S - 2)/sigma over 50 tuples " + fmt("%.2f", worst_excess) + " (<= 3)"};
}

Outcome_ noncommutativity() {
  const FieldSuperposition f = FieldSuperposition::single(BasisField::on_plus(Axis(0.0)));
  const auto bc = path_probabilities(f, {Axis(kPi / 4), Axis(kPi / 2)});
  const auto cb = path_probabilities(f, {Axis(kPi / 2), Axis(kPi / 4)});
  double diff = 0.0;
  for (const auto &[path, p] : bc) {
    diff = std::max(diff, std::abs(p - cb.at(path)));
  }
  return {diff > 0.1, "max path-probability difference " + fmt("%.6f", diff) + " (> 0.1)"};
}

std::string capture(const std::string &command) {
  std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) {
    return "<popen failed>";
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe.get())) > 0) {
    out.append(buf, n);
  }
  return out;
}

Outcome_ reproducibility(const std::string &cli) {
  if (cli.empty()) {
    return {false, "no CLI path given"};
  }
  const std::vector<std::string> commands{
      "chsh --mode montecarlo --n 200000 --seed 7",
      "chsh --mode montecarlo --n 200000 --seed 7 --baseline --format json",
      "sample --a-deg 15 --b-deg 75 --n 300000 --seed 11",
      "sample --a-deg 15 --b-deg 75 --n 2000 --seed 11 --records",
      "sample --a-deg 15 --b-deg 75 --n 300000 --seed 11 --baseline --u-policy fixed --u-deg 20",
  };
  for (const auto &c : commands) {
    const std::string first = capture(cli + " " + c);
    const std::string second = capture(cli + " " + c);
    if (first.empty() || first != second) {
      return {false, "output differs for: " + c};
    }
  }
  return {true, std::to_string(commands.size()) + " Monte Carlo commands byte-identical on repeat"};
}

} // namespace

int main(int argc, char **argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome_()>>> criteria{
      {"AC1 single-particle law", single_particle_law},
      {"AC2 quadrature oracle", quadrature_oracle},
      {"AC3 equivalence class", equivalence_class},
      {"AC4 alpha-field isotropy", alpha_isotropy},
      {"AC5 conditional-table consistency", conditional_consistency},
      {"AC6 joint law, routes, u-independence", joint_law},
      {"AC7 no-signaling", no_signaling},
      {"AC8 correlation and CHSH", correlation_and_chsh},
      {"AC9 factorizable baseline bound", baseline_bound},
      {"AC10 noncommutativity witness", noncommutativity},
      {"AC11 reproducibility", [&] { return reproducibility(cli); }},
  };
  int failed = 0;
  for (const auto &[name, run] : criteria) {
    const Outcome_ r = run();
    failed += r.ok ? 0 : 1;
    std::printf("[%s] %s: %s\n", r.ok ? "PASS" : "FAIL", name.c_str(), r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
