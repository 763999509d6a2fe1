#include "fieldpair/subquantum.hpp"

#include <cmath>

namespace fieldpair {

bool embedded_ok(const FieldSuperposition &f, const Particle &p) {
  for (const auto &t : f.terms()) {
    if (std::abs(t.coeff) > 0.0 && contains(t.basis.support, p.position)) {
      return true;
    }
  }
  return false;
}

Outcome elementary_outcome(Axis u, const Particle &p) {
  return branch_of(u, p.position) == Branch::Plus ? Outcome::Plus : Outcome::Minus;
}

double alpha_conditional(const ConditionalSpec &spec, ConditionalReading reading) {
  const double half = 0.5 * (spec.u.theta() - spec.b.theta());
  double shift = 0.0;
  if (spec.branch == Branch::Minus) {
    shift = reading == ConditionalReading::Corrected ? 0.5 * kPi : kPi;
  }
  const double c = std::cos(half + shift);
  return c * c;
}

double consistency_residual(Axis u, Axis b, ConditionalReading reading) {
  const double p_plus = alpha_conditional({u, b, Branch::Plus}, reading);
  const double p_minus = alpha_conditional({u, b, Branch::Minus}, reading);
  return std::abs(0.5 * p_plus + 0.5 * p_minus - 0.5);
}

} // namespace fieldpair
