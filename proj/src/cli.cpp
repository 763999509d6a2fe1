#include "fieldpair/cli.hpp"

#include "fieldpair/checks.hpp"
#include "fieldpair/report.hpp"
#include "fieldpair/sampler.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>

namespace fieldpair {

namespace {

struct CommonFlags {
  double u_deg = 0.0;
  std::uint64_t seed = 42;
  std::string format = "csv";
  std::string out_path;
  bool eq42_literal = false;
};

struct ProbeArgs {
  double a_deg = 0.0;
  double b_deg = 0.0;
  std::string field = "hemisphere";
};

struct JointArgs {
  double a_deg = 0.0;
  double b_deg = 0.0;
  std::string route = "all";
};

struct SweepArgs {
  double delta_min = 0.0;
  double delta_max = 180.0;
  int steps = 19;
  double a_deg = 0.0;
};

struct ChshArgs {
  std::vector<double> angles{0.0, 90.0, 45.0, 135.0};
  std::string mode = "analytic";
  std::uint64_t n = 1000000;
  bool baseline = false;
  std::string u_policy = "uniform";
  unsigned threads = 0;
};

struct SampleArgs {
  double a_deg = 0.0;
  double b_deg = 0.0;
  std::uint64_t n = 100000;
  bool baseline = false;
  std::string u_policy = "uniform";
  std::string anchor = "coin";
  unsigned threads = 0;
  bool records = false;
};

ConditionalReading reading_of(const CommonFlags &c) {
  return c.eq42_literal ? ConditionalReading::LiteralPrinted : ConditionalReading::Corrected;
}

void add_common_params(Report &r, const std::string &command, const CommonFlags &c) {
  r.params.emplace_back("command", command);
  r.params.emplace_back("u_deg", c.u_deg);
  r.params.emplace_back("seed", static_cast<std::int64_t>(c.seed));
  r.params.emplace_back("eq42_literal", std::string(c.eq42_literal ? "true" : "false"));
}

UPolicy u_policy_of(const std::string &name, const CommonFlags &c) {
  return name == "fixed" ? UPolicy::fixed(Axis::from_degrees(c.u_deg)) : UPolicy::uniform();
}

Report probe(const ProbeArgs &args, const CommonFlags &c) {
  const Axis a = Axis::from_degrees(args.a_deg);
  const Axis b = Axis::from_degrees(args.b_deg);
  const FieldSuperposition f = args.field == "hemisphere" ? FieldSuperposition::single(BasisField::on_plus(a))
                               : args.field == "alpha_plus" ? make_alpha(a, AlphaSign::Plus)
                                                            : make_alpha(a, AlphaSign::Minus);
  const MeasurementResult m = measure(f, b);
  const double q_plus = std::norm(measurement_amplitude_quadrature(f, b));
  const double q_minus = std::norm(measurement_amplitude_quadrature(f, antipode(b)));
  const double residual = std::abs(q_plus / (q_plus + q_minus) - m.prob_plus);

  Report r;
  add_common_params(r, "probe", c);
  r.params.emplace_back("a_deg", args.a_deg);
  r.params.emplace_back("b_deg", args.b_deg);
  r.params.emplace_back("field", args.field);
  r.columns = {"a_deg", "b_deg", "field", "prob_plus", "prob_minus", "quadrature_residual"};
  r.add_row({args.a_deg, args.b_deg, args.field, m.prob_plus, m.prob_minus, residual});
  return r;
}

Report joint(const JointArgs &args, const CommonFlags &c) {
  const JointSetting s{Axis::from_degrees(args.a_deg), Axis::from_degrees(args.b_deg)};
  const Axis u = Axis::from_degrees(c.u_deg);
  const ConditionalReading reading = reading_of(c);
  std::vector<std::pair<std::string, JointDistribution>> routes;
  if (args.route == "aleph" || args.route == "all") {
    routes.emplace_back("aleph", joint_distribution(s, u));
  }
  if (args.route == "cond1" || args.route == "all") {
    routes.emplace_back("cond1", joint_via_conditional(s, Wing::First, reading));
  }
  if (args.route == "cond2" || args.route == "all") {
    routes.emplace_back("cond2", joint_via_conditional(s, Wing::Second, reading));
  }
  double discrepancy = 0.0;
  for (const auto &x : routes) {
    for (const auto &y : routes) {
      discrepancy = std::max(discrepancy, max_abs_diff(x.second, y.second));
    }
  }

  Report r;
  add_common_params(r, "joint", c);
  r.params.emplace_back("a_deg", args.a_deg);
  r.params.emplace_back("b_deg", args.b_deg);
  r.params.emplace_back("route", args.route);
  r.columns = {"route", "p_pp", "p_pm", "p_mp", "p_mm", "marginal1_plus", "marginal2_plus", "E",
               "max_route_discrepancy"};
  for (const auto &[name, d] : routes) {
    r.add_row({name, d.p[0][0], d.p[0][1], d.p[1][0], d.p[1][1], d.p[0][0] + d.p[0][1], d.p[0][0] + d.p[1][0],
               d.correlation(), discrepancy});
  }
  return r;
}

Report sweep(const SweepArgs &args, const CommonFlags &c) {
  if (!(args.delta_max > args.delta_min)) {
    throw std::invalid_argument("sweep: empty delta range");
  }
  const Axis u = Axis::from_degrees(c.u_deg);
  Report r;
  add_common_params(r, "sweep", c);
  r.params.emplace_back("delta_min", args.delta_min);
  r.params.emplace_back("delta_max", args.delta_max);
  r.params.emplace_back("steps", static_cast<std::int64_t>(args.steps));
  r.params.emplace_back("a_deg", args.a_deg);
  r.columns = {"delta_deg", "p_pp", "p_pm", "E_model", "E_naive", "E_quantum"};
  for (int k = 0; k < args.steps; ++k) {
    const double delta = args.delta_min + (args.delta_max - args.delta_min) * k / (args.steps - 1);
    const JointSetting s{Axis::from_degrees(args.a_deg), Axis::from_degrees(args.a_deg + delta)};
    const JointDistribution d = joint_distribution(s, u);
    const double e_quantum = -std::cos(delta * kPi / 180.0);
    r.add_row({delta, d.p[0][0], d.p[0][1], d.correlation(), naive_correlation(s, UPolicy::uniform()), e_quantum});
  }
  return r;
}

Report run_chsh(const ChshArgs &args, const CommonFlags &c) {
  const ChshAngles angles{Axis::from_degrees(args.angles[0]), Axis::from_degrees(args.angles[1]),
                          Axis::from_degrees(args.angles[2]), Axis::from_degrees(args.angles[3])};
  RunOptions options;
  options.kind = args.baseline ? SamplerKind::Naive : SamplerKind::Model;
  options.u_policy = u_policy_of(args.u_policy, c);
  options.reading = reading_of(c);
  options.threads = args.threads;
  const ChshMode mode = args.mode == "montecarlo" ? ChshMode::MonteCarlo : ChshMode::Analytic;
  const ChshResult res = chsh(angles, mode, args.n, c.seed, options);

  Report r;
  add_common_params(r, "chsh", c);
  r.params.emplace_back("a_deg", args.angles[0]);
  r.params.emplace_back("a2_deg", args.angles[1]);
  r.params.emplace_back("b_deg", args.angles[2]);
  r.params.emplace_back("b2_deg", args.angles[3]);
  r.params.emplace_back("mode", args.mode);
  r.params.emplace_back("n", static_cast<std::int64_t>(args.n));
  r.params.emplace_back("model", std::string(args.baseline ? "naive" : "field"));
  r.params.emplace_back("u_policy", args.u_policy);
  r.columns = {"E_ab", "E_ab2", "E_a2b", "E_a2b2", "S", "S_stderr", "bell_bound", "tsirelson_bound"};
  r.add_row({res.correlations[0], res.correlations[1], res.correlations[2], res.correlations[3], res.s,
             res.s_standard_error, kBellBound, kTsirelsonBound});
  return r;
}

Report sample(const SampleArgs &args, const CommonFlags &c) {
  const JointSetting s{Axis::from_degrees(args.a_deg), Axis::from_degrees(args.b_deg)};
  RunOptions options;
  options.kind = args.baseline ? SamplerKind::Naive : SamplerKind::Model;
  options.u_policy = u_policy_of(args.u_policy, c);
  options.anchor = args.anchor == "first"    ? AnchorPolicy::First
                   : args.anchor == "second" ? AnchorPolicy::Second
                                             : AnchorPolicy::FairCoin;
  options.reading = reading_of(c);
  options.threads = args.threads;

  Report r;
  add_common_params(r, "sample", c);
  r.params.emplace_back("a_deg", args.a_deg);
  r.params.emplace_back("b_deg", args.b_deg);
  r.params.emplace_back("n", static_cast<std::int64_t>(args.n));
  r.params.emplace_back("model", std::string(args.baseline ? "naive" : "field"));
  r.params.emplace_back("anchor", args.anchor);
  r.params.emplace_back("u_policy", args.u_policy);

  if (args.records) {
    r.columns = {"trial", "u_deg", "r1_x", "r1_y", "r1_z", "eps1", "eps2"};
    std::int64_t i = 0;
    for (const TrialRecord &t : generate_trials(s, args.n, c.seed, options)) {
      const Vec3 &v = t.r1.vec();
      r.add_row({i++, t.u.degrees(), v.x, v.y, v.z, static_cast<std::int64_t>(value(t.epsilon1)),
                 static_cast<std::int64_t>(value(t.epsilon2))});
    }
    return r;
  }

  const RunStats stats = run_experiment(s, args.n, c.seed, options);
  const JointDistribution d = stats.joint();
  const JointDistribution se = stats.standard_errors();
  auto count = [&](std::size_t i, std::size_t j) { return static_cast<std::int64_t>(stats.counts[i][j]); };
  r.columns = {"count_pp", "count_pm", "count_mp", "count_mm", "p_pp",           "p_pm",
               "p_mp",     "p_mm",     "se_pp",    "se_pm",    "marginal1_plus", "marginal2_plus",
               "marginal_se", "E",     "E_stderr"};
  r.add_row({count(0, 0), count(0, 1), count(1, 0), count(1, 1), d.p[0][0], d.p[0][1], d.p[1][0], d.p[1][1],
             se.p[0][0], se.p[0][1], stats.marginal(Wing::First)[0], stats.marginal(Wing::Second)[0],
             stats.marginal_standard_error(Wing::First), stats.correlation(), stats.correlation_standard_error()});
  return r;
}

Report check(const CommonFlags &c, bool &all_passed) {
  Report r;
  add_common_params(r, "check", c);
  r.columns = {"check", "residual", "tolerance", "passed"};
  all_passed = true;
  for (const CheckResult &res : run_invariant_checks(reading_of(c))) {
    all_passed = all_passed && res.passed();
    r.add_row({res.name, res.residual, res.tolerance, std::string(res.passed() ? "true" : "false")});
  }
  return r;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Field-particle model of EPR spin pairs: probabilities, joint laws, sampling, CHSH"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonFlags common;
  app.add_option("--u-deg", common.u_deg, "Source construction axis u (degrees)");
  app.add_option("--seed", common.seed, "Master random seed");
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", common.out_path, "Write results to PATH instead of stdout");
  app.add_flag("--eq42-literal", common.eq42_literal,
               "Use the literal printed conditional table (pi shift) instead of the corrected one");

  ProbeArgs probe_args;
  auto *probe_cmd = app.add_subcommand("probe", "Single-particle measurement probabilities");
  probe_cmd->add_option("--a-deg", probe_args.a_deg, "Field axis (degrees)")->required();
  probe_cmd->add_option("--b-deg", probe_args.b_deg, "Measurement axis (degrees)")->required();
  probe_cmd->add_option("--field", probe_args.field, "Field kind")
      ->check(CLI::IsMember({"hemisphere", "alpha_plus", "alpha_minus"}));

  JointArgs joint_args;
  auto *joint_cmd = app.add_subcommand("joint", "Two-party joint distribution");
  joint_cmd->add_option("--a-deg", joint_args.a_deg, "Wing 1 axis (degrees)")->required();
  joint_cmd->add_option("--b-deg", joint_args.b_deg, "Wing 2 axis (degrees)")->required();
  joint_cmd->add_option("--route", joint_args.route, "Computation route")
      ->check(CLI::IsMember({"aleph", "cond1", "cond2", "all"}));

  SweepArgs sweep_args;
  auto *sweep_cmd = app.add_subcommand("sweep", "Joint law and correlations over an angle range");
  sweep_cmd->add_option("--delta-min", sweep_args.delta_min, "First relative angle (degrees)");
  sweep_cmd->add_option("--delta-max", sweep_args.delta_max, "Last relative angle (degrees)");
  sweep_cmd->add_option("--steps", sweep_args.steps, "Number of rows")->check(CLI::Range(2, 1000000));
  sweep_cmd->add_option("--a-deg", sweep_args.a_deg, "Wing 1 axis (degrees)");

  ChshArgs chsh_args;
  auto *chsh_cmd = app.add_subcommand("chsh", "CHSH value from analytic or sampled correlations");
  chsh_cmd->add_option("--angles", chsh_args.angles, "a a2 b b2 in degrees")->expected(4)->delimiter(',');
  chsh_cmd->add_option("--mode", chsh_args.mode, "analytic or montecarlo")
      ->check(CLI::IsMember({"analytic", "montecarlo"}));
  chsh_cmd->add_option("--n", chsh_args.n, "Trials per setting")->check(CLI::PositiveNumber);
  chsh_cmd->add_flag("--baseline", chsh_args.baseline, "Use the factorizable baseline instead of the field model");
  chsh_cmd->add_option("--u-policy", chsh_args.u_policy, "Baseline source axis")
      ->check(CLI::IsMember({"uniform", "fixed"}));
  chsh_cmd->add_option("--threads", chsh_args.threads, "Worker threads (0 = all cores)");

  SampleArgs sample_args;
  auto *sample_cmd = app.add_subcommand("sample", "Monte Carlo outcome pairs for one setting");
  sample_cmd->add_option("--a-deg", sample_args.a_deg, "Wing 1 axis (degrees)")->required();
  sample_cmd->add_option("--b-deg", sample_args.b_deg, "Wing 2 axis (degrees)")->required();
  sample_cmd->add_option("--n", sample_args.n, "Number of trials")->check(CLI::PositiveNumber);
  sample_cmd->add_flag("--baseline", sample_args.baseline, "Use the factorizable baseline");
  sample_cmd->add_option("--u-policy", sample_args.u_policy, "Baseline source axis")
      ->check(CLI::IsMember({"uniform", "fixed"}));
  sample_cmd->add_option("--anchor", sample_args.anchor, "Anchored wing")
      ->check(CLI::IsMember({"coin", "first", "second"}));
  sample_cmd->add_option("--threads", sample_args.threads, "Worker threads (0 = all cores)");
  sample_cmd->add_flag("--records", sample_args.records, "Emit one row per trial instead of a summary");

  auto *check_cmd = app.add_subcommand("check", "Run the invariant suite");

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const auto &a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  int status = kExitOk;
  Report report;
  try {
    if (probe_cmd->parsed()) {
      report = probe(probe_args, common);
    } else if (joint_cmd->parsed()) {
      report = joint(joint_args, common);
    } else if (sweep_cmd->parsed()) {
      report = sweep(sweep_args, common);
    } else if (chsh_cmd->parsed()) {
      report = run_chsh(chsh_args, common);
    } else if (sample_cmd->parsed()) {
      report = sample(sample_args, common);
    } else if (check_cmd->parsed()) {
      bool passed = false;
      report = check(common, passed);
      status = passed ? kExitOk : kExitCheckFailed;
    }
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const OutputFormat format = common.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (common.out_path.empty()) {
    report.write(out, format);
  } else {
    std::ofstream file(common.out_path);
    if (!file) {
      err << "error: cannot open " << common.out_path << '\n';
      return kExitUsage;
    }
    report.write(file, format);
  }
  return status;
}

} // namespace fieldpair
