#pragma once

#include "fieldpair/field.hpp"

namespace fieldpair {

struct Particle {
  SurfacePoint position;
};

/// Which hemisphere of the no-perturbation axis holds the particle.
enum class Branch { Plus, Minus };

inline Branch branch_of(Axis u, const SurfacePoint &p) {
  return contains(Hemisphere{u}, p) ? Branch::Plus : Branch::Minus;
}
inline Branch opposite(Branch b) { return b == Branch::Plus ? Branch::Minus : Branch::Plus; }

struct ConditionalSpec {
  Axis u;
  Axis b;
  Branch branch;
};

/// How the hemisphere-conditioned outcome table is read.
///
/// `Corrected` shifts the half angle by pi/2 on the -u branch, giving
/// cos^2 on +u and sin^2 on -u; the two branches then average to 1/2.
/// `LiteralPrinted` shifts by pi, which makes both branches cos^2 and breaks
/// that average. It exists to demonstrate the failure.
enum class ConditionalReading { Corrected, LiteralPrinted };

/// The particle must sit where some nonzero term of the field is supported.
bool embedded_ok(const FieldSuperposition &f, const Particle &p);

/// No-perturbation outcome: +1 iff the particle is in the +u hemisphere.
Outcome elementary_outcome(Axis u, const Particle &p);

/// P(outcome +1 along spec.b | particle in the spec.branch hemisphere of
/// spec.u) for the alpha fields built on u.
double alpha_conditional(const ConditionalSpec &spec, ConditionalReading reading = ConditionalReading::Corrected);

/// |sum over branches of P(+1 | branch) P(branch) - 1/2| with uniform
/// particles, so P(branch) = 1/2.
double consistency_residual(Axis u, Axis b, ConditionalReading reading = ConditionalReading::Corrected);

} // namespace fieldpair
