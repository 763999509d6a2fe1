#include "fieldpair/checks.hpp"
#include "fieldpair/cli.hpp"
#include "fieldpair/sampler.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace fieldpair;

namespace {

py::list joint_to_list(const JointDistribution &d) {
  py::list out;
  for (const auto &row : d.p) {
    out.append(py::make_tuple(row[0], row[1]));
  }
  return out;
}

ConditionalReading reading_from(bool literal) {
  return literal ? ConditionalReading::LiteralPrinted : ConditionalReading::Corrected;
}

} // namespace

PYBIND11_MODULE(_fieldpair, m) {
  m.doc() = "Field-particle model of EPR-correlated spin-1/2 pairs";

  py::class_<Axis>(m, "Axis")
      .def(py::init<double>(), py::arg("theta"))
      .def_static("from_degrees", &Axis::from_degrees)
      .def_property_readonly("theta", &Axis::theta)
      .def_property_readonly("degrees", &Axis::degrees)
      .def("__repr__", [](const Axis &a) { return "Axis(" + std::to_string(a.theta()) + ")"; });

  m.def("antipode", &antipode);
  m.def("midpoint_axis", &midpoint_axis);

  m.def(
      "measure_hemisphere",
      [](double a, double b) {
        const MeasurementResult r = measure(FieldSuperposition::single(BasisField::on_plus(Axis(a))), Axis(b));
        return py::make_tuple(r.prob_plus, r.prob_minus);
      },
      py::arg("theta_a"), py::arg("theta_b"), "(P(+1), P(-1)) for the field on the +a hemisphere measured along b");
  m.def(
      "measure_alpha",
      [](double u, double b, int sign) {
        const MeasurementResult r = measure(make_alpha(Axis(u), sign >= 0 ? AlphaSign::Plus : AlphaSign::Minus), Axis(b));
        return py::make_tuple(r.prob_plus, r.prob_minus);
      },
      py::arg("theta_u"), py::arg("theta_b"), py::arg("sign") = 1);
  m.def(
      "measure_rebasis",
      [](double a, double u, double b) {
        const MeasurementResult r = measure(rebasis(Axis(a), Axis(u)), Axis(b));
        return py::make_tuple(r.prob_plus, r.prob_minus);
      },
      py::arg("theta_a"), py::arg("theta_u"), py::arg("theta_b"));
  m.def("average_full_dot", [](double b, double region) { return average_full_dot(Axis(b), Hemisphere{Axis(region)}); });

  m.def(
      "alpha_conditional",
      [](double u, double b, bool plus_branch, bool literal) {
        return alpha_conditional({Axis(u), Axis(b), plus_branch ? Branch::Plus : Branch::Minus}, reading_from(literal));
      },
      py::arg("theta_u"), py::arg("theta_b"), py::arg("plus_branch") = true, py::arg("literal") = false);
  m.def(
      "consistency_residual",
      [](double u, double b, bool literal) { return consistency_residual(Axis(u), Axis(b), reading_from(literal)); },
      py::arg("theta_u"), py::arg("theta_b"), py::arg("literal") = false);

  m.def(
      "joint_distribution",
      [](double a, double b, double u) { return joint_to_list(joint_distribution({Axis(a), Axis(b)}, Axis(u))); },
      py::arg("theta_a"), py::arg("theta_b"), py::arg("theta_u") = 0.0,
      "[[p(+,+), p(+,-)], [p(-,+), p(-,-)]] from the correlated field part");
  m.def(
      "joint_via_conditional",
      [](double a, double b, int anchor_wing, bool literal) {
        return joint_to_list(joint_via_conditional({Axis(a), Axis(b)}, anchor_wing == 2 ? Wing::Second : Wing::First,
                                                   reading_from(literal)));
      },
      py::arg("theta_a"), py::arg("theta_b"), py::arg("anchor_wing") = 1, py::arg("literal") = false);
  m.def(
      "correlation", [](double a, double b, double u) { return correlation({Axis(a), Axis(b)}, Axis(u)); },
      py::arg("theta_a"), py::arg("theta_b"), py::arg("theta_u") = 0.0);
  m.def(
      "marginal",
      [](double a, double b, int wing) {
        const auto p = marginal({Axis(a), Axis(b)}, wing == 2 ? Wing::Second : Wing::First);
        return py::make_tuple(p[0], p[1]);
      },
      py::arg("theta_a"), py::arg("theta_b"), py::arg("wing") = 1);
  m.def(
      "naive_correlation",
      [](double a, double b, py::object fixed_u) {
        const UPolicy policy = fixed_u.is_none() ? UPolicy::uniform() : UPolicy::fixed(Axis(fixed_u.cast<double>()));
        return naive_correlation({Axis(a), Axis(b)}, policy);
      },
      py::arg("theta_a"), py::arg("theta_b"), py::arg("fixed_u") = py::none());

  m.def(
      "run_experiment",
      [](double a, double b, std::uint64_t n, std::uint64_t seed, bool baseline, unsigned threads) {
        RunOptions options;
        options.kind = baseline ? SamplerKind::Naive : SamplerKind::Model;
        options.threads = threads;
        RunStats stats;
        {
          py::gil_scoped_release release;
          stats = run_experiment({Axis(a), Axis(b)}, n, seed, options);
        }
        py::dict out;
        out["n"] = stats.n;
        out["seed"] = stats.seed;
        out["counts"] = py::make_tuple(py::make_tuple(stats.counts[0][0], stats.counts[0][1]),
                                       py::make_tuple(stats.counts[1][0], stats.counts[1][1]));
        out["joint"] = joint_to_list(stats.joint());
        out["correlation"] = stats.correlation();
        out["correlation_stderr"] = stats.correlation_standard_error();
        return out;
      },
      py::arg("theta_a"), py::arg("theta_b"), py::arg("n"), py::arg("seed") = 42, py::arg("baseline") = false,
      py::arg("threads") = 0);

  m.def(
      "chsh",
      [](std::array<double, 4> angles, bool montecarlo, std::uint64_t n, std::uint64_t seed, bool baseline) {
        RunOptions options;
        options.kind = baseline ? SamplerKind::Naive : SamplerKind::Model;
        ChshResult r;
        {
          py::gil_scoped_release release;
          r = chsh({Axis(angles[0]), Axis(angles[1]), Axis(angles[2]), Axis(angles[3])},
                   montecarlo ? ChshMode::MonteCarlo : ChshMode::Analytic, n, seed, options);
        }
        return py::make_tuple(r.s, r.s_standard_error, r.correlations);
      },
      py::arg("angles"), py::arg("montecarlo") = false, py::arg("n") = 0, py::arg("seed") = 42,
      py::arg("baseline") = false, "(S, stderr, [E(a,b), E(a,b2), E(a2,b), E(a2,b2)]) for radians (a, a2, b, b2)");

  m.def(
      "invariant_checks",
      [](bool literal) {
        py::list out;
        for (const auto &c : run_invariant_checks(reading_from(literal))) {
          out.append(py::make_tuple(c.name, c.residual, c.tolerance, c.passed()));
        }
        return out;
      },
      py::arg("literal") = false);

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "fieldpair");
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI command; returns (exit_code, stdout, stderr)");

  m.attr("BELL_BOUND") = kBellBound;
  m.attr("TSIRELSON_BOUND") = kTsirelsonBound;
}
