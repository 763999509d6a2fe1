#include "fieldpair/field.hpp"

#include <cmath>

namespace fieldpair {

namespace {

Complex phase_factor(double phase) { return std::polar(1.0, phase); }

} // namespace

FieldSuperposition::FieldSuperposition(std::vector<FieldTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw DegenerateField("field superposition needs at least one term");
  }
  bool any_nonzero = false;
  for (const auto &t : terms_) {
    if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag()) || !std::isfinite(t.basis.phase)) {
      throw std::invalid_argument("field coefficients and phases must be finite");
    }
    any_nonzero = any_nonzero || std::abs(t.coeff) > 0.0;
  }
  if (!any_nonzero) {
    throw DegenerateField("field superposition has only zero coefficients");
  }
  if (norm() < kDegenerateNorm) {
    throw DegenerateField("field superposition has vanishing measurement norm");
  }
}

FieldSuperposition FieldSuperposition::scaled(Complex factor) const {
  std::vector<FieldTerm> out = terms_;
  for (auto &t : out) {
    t.coeff *= factor;
  }
  return FieldSuperposition(std::move(out));
}

double FieldSuperposition::norm() const {
  const Axis z{0.0};
  return std::norm(measurement_amplitude(*this, z)) + std::norm(measurement_amplitude(*this, antipode(z)));
}

Complex evaluate(const FieldSuperposition &f, const SurfacePoint &p) {
  Complex acc = 0.0;
  for (const auto &t : f.terms()) {
    if (contains(t.basis.support, p)) {
      acc += t.coeff * phase_factor(t.basis.phase) * dot(p.vec(), t.basis.support.center.unit()) / kPi;
    }
  }
  return acc;
}

double average_full_dot(Axis b, const Hemisphere &region) { return std::cos(b.theta() - region.center.theta()); }

Complex basis_amplitude(const BasisField &basis, Axis outcome) {
  // The rotated field F_{+b} + F_{-b} averaged over the hemisphere centred on
  // the midpoint [center + outcome] gives cos of the half angle.
  const Hemisphere half_rotated{midpoint_axis(basis.support.center, outcome)};
  return phase_factor(basis.phase) * average_full_dot(outcome, half_rotated);
}

Complex measurement_amplitude(const FieldSuperposition &f, Axis outcome) {
  Complex acc = 0.0;
  for (const auto &t : f.terms()) {
    acc += t.coeff * basis_amplitude(t.basis, outcome);
  }
  return acc;
}

Complex measurement_amplitude_quadrature(const FieldSuperposition &f, Axis outcome, int n_polar, int n_azimuth) {
  const Vec3 o = outcome.unit();
  Complex acc = 0.0;
  for (const auto &t : f.terms()) {
    const Hemisphere half_rotated{midpoint_axis(t.basis.support.center, outcome)};
    const QuadratureGrid grid = hemisphere_grid(half_rotated, n_polar, n_azimuth);
    const double avg = grid.integrate([&](const SurfacePoint &p) { return dot(p.vec(), o) / kPi; });
    acc += t.coeff * phase_factor(t.basis.phase) * avg;
  }
  return acc;
}

MeasurementResult measure(const FieldSuperposition &f, Axis b) {
  const Complex amp_plus = measurement_amplitude(f, b);
  const Complex amp_minus = measurement_amplitude(f, antipode(b));
  const double w_plus = std::norm(amp_plus);
  const double w_minus = std::norm(amp_minus);
  const double n = w_plus + w_minus;
  if (n < kDegenerateNorm) {
    throw DegenerateField("measurement on a field with vanishing norm");
  }
  auto unit_phase = [](Complex a) { return std::abs(a) > 0.0 ? a / std::abs(a) : Complex(1.0); };
  return MeasurementResult{
      w_plus / n,
      w_minus / n,
      FieldSuperposition::single(BasisField::on_plus(b), unit_phase(amp_plus)),
      FieldSuperposition::single(BasisField::on_minus(b), unit_phase(amp_minus)),
  };
}

std::vector<Outcome> sequential_measure(const FieldSuperposition &f, const std::vector<Axis> &axes, Rng &rng) {
  if (axes.empty()) {
    throw std::invalid_argument("sequential_measure: no axes given");
  }
  std::vector<Outcome> outcomes;
  outcomes.reserve(axes.size());
  FieldSuperposition current = f;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (const Axis &b : axes) {
    MeasurementResult r = measure(current, b);
    const Outcome o = u01(rng) < r.prob_plus ? Outcome::Plus : Outcome::Minus;
    outcomes.push_back(o);
    current = r.post(o);
  }
  return outcomes;
}

std::map<std::vector<Outcome>, double> path_probabilities(const FieldSuperposition &f,
                                                          const std::vector<Axis> &axes) {
  std::map<std::vector<Outcome>, double> out;
  struct Node {
    FieldSuperposition field;
    std::vector<Outcome> path;
    double prob;
  };
  std::vector<Node> frontier{{f, {}, 1.0}};
  for (const Axis &b : axes) {
    std::vector<Node> next;
    next.reserve(frontier.size() * 2);
    for (const auto &node : frontier) {
      const MeasurementResult r = measure(node.field, b);
      for (Outcome o : {Outcome::Plus, Outcome::Minus}) {
        auto path = node.path;
        path.push_back(o);
        next.push_back({r.post(o), std::move(path), node.prob * r.prob(o)});
      }
    }
    frontier = std::move(next);
  }
  for (auto &node : frontier) {
    out[node.path] += node.prob;
  }
  return out;
}

FieldSuperposition rebasis(Axis field_axis, Axis u) {
  const double half = 0.5 * (u.theta() - field_axis.theta());
  return FieldSuperposition{
      FieldTerm{std::cos(half), BasisField::on_plus(u)},
      FieldTerm{std::sin(half), BasisField::on_minus(u)},
  };
}

FieldSuperposition make_alpha(Axis u, AlphaSign sign) {
  const Complex lead = sign == AlphaSign::Plus ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
  return FieldSuperposition{
      FieldTerm{lead, BasisField::on_plus(u)},
      FieldTerm{1.0, BasisField::on_minus(u)},
  };
}

bool equivalent(const FieldSuperposition &f1, const FieldSuperposition &f2, int n_axes, double tol) {
  if (n_axes < 4) {
    throw std::invalid_argument("equivalent: need at least 4 probe axes");
  }
  for (int k = 0; k < n_axes; ++k) {
    const Axis b(2.0 * kPi * k / n_axes);
    if (std::abs(measure(f1, b).prob_plus - measure(f2, b).prob_plus) > tol) {
      return false;
    }
  }
  return true;
}

} // namespace fieldpair
