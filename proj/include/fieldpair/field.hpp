#pragma once

#include "fieldpair/geometry.hpp"

#include <complex>
#include <initializer_list>
#include <map>
#include <vector>

namespace fieldpair {

using Complex = std::complex<double>;

/// Measurement outcome along an axis.
enum class Outcome : int { Plus = 1, Minus = -1 };

inline int value(Outcome o) { return static_cast<int>(o); }
inline Outcome flip(Outcome o) { return o == Outcome::Plus ? Outcome::Minus : Outcome::Plus; }

/// Axis whose hemisphere corresponds to outcome `o` when measuring along `b`.
inline Axis outcome_axis(Axis b, Outcome o) { return o == Outcome::Plus ? b : antipode(b); }

/// Elementary hemispherical field: (r . center) e^{i phase} / pi on the
/// support, zero elsewhere (unit radius).
struct BasisField {
  Hemisphere support;
  double phase = 0.0;

  static BasisField on_plus(Axis u, double phase = 0.0) { return {Hemisphere{u}, phase}; }
  static BasisField on_minus(Axis u, double phase = 0.0) { return {Hemisphere{antipode(u)}, phase}; }
};

struct FieldTerm {
  Complex coeff;
  BasisField basis;
};

/// Raised when a field has no measurable content (every amplitude vanishes).
class DegenerateField : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Norm below this is treated as an unphysical state.
inline constexpr double kDegenerateNorm = 1e-14;

/// Complex linear combination of basis fields.
class FieldSuperposition {
public:
  /// Throws DegenerateField on an empty list, all-zero coefficients, or a
  /// combination whose measurement norm vanishes.
  explicit FieldSuperposition(std::vector<FieldTerm> terms);
  FieldSuperposition(std::initializer_list<FieldTerm> terms)
      : FieldSuperposition(std::vector<FieldTerm>(terms)) {}

  static FieldSuperposition single(const BasisField &basis, Complex coeff = 1.0) {
    return FieldSuperposition({FieldTerm{coeff, basis}});
  }

  const std::vector<FieldTerm> &terms() const { return terms_; }

  /// Same field with every coefficient multiplied by `factor`.
  FieldSuperposition scaled(Complex factor) const;

  /// Sum of squared measurement amplitudes over an outcome pair. The value is
  /// the same for every measurement axis.
  double norm() const;

private:
  std::vector<FieldTerm> terms_;
};

/// Field value at a point of the unit sphere.
Complex evaluate(const FieldSuperposition &f, const SurfacePoint &p);

/// Mean of r . b / pi over `region`, in closed form: cos(theta_b - theta_region).
double average_full_dot(Axis b, const Hemisphere &region);

/// Amplitude of `basis` for the outcome whose hemisphere is centred on
/// `outcome`: the basis field rotated toward the apparatus and averaged over
/// the half-rotated hemisphere between its center and `outcome`.
Complex basis_amplitude(const BasisField &basis, Axis outcome);

/// Sum of the term amplitudes for the outcome hemisphere centred on `outcome`.
Complex measurement_amplitude(const FieldSuperposition &f, Axis outcome);

/// measurement_amplitude with every rotated average integrated numerically on
/// a hemisphere_grid instead of taken in closed form.
Complex measurement_amplitude_quadrature(const FieldSuperposition &f, Axis outcome, int n_polar = 64,
                                         int n_azimuth = 128);

struct MeasurementResult {
  double prob_plus;
  double prob_minus;
  FieldSuperposition post_plus;
  FieldSuperposition post_minus;

  double prob(Outcome o) const { return o == Outcome::Plus ? prob_plus : prob_minus; }
  const FieldSuperposition &post(Outcome o) const { return o == Outcome::Plus ? post_plus : post_minus; }
};

/// Measurement along `b`. The field rotates onto the outcome hemisphere
/// keeping the phase of its amplitude; no phase is added.
MeasurementResult measure(const FieldSuperposition &f, Axis b);

/// Measures along each axis in turn, sampling outcomes and continuing with
/// the post-measurement field.
std::vector<Outcome> sequential_measure(const FieldSuperposition &f, const std::vector<Axis> &axes, Rng &rng);

/// Exact probability of every outcome path for the sequence `axes`.
std::map<std::vector<Outcome>, double> path_probabilities(const FieldSuperposition &f,
                                                          const std::vector<Axis> &axes);

/// cos((u - a)/2) F_{+u} + sin((u - a)/2) F_{-u}: same predictions as F_{+a}.
FieldSuperposition rebasis(Axis field_axis, Axis u);

enum class AlphaSign { Plus, Minus };

/// e^{+-i pi/2} F_{+u} + F_{-u}. Probability 1/2 along every axis.
FieldSuperposition make_alpha(Axis u, AlphaSign sign);

/// Compares measurement probabilities along `n_axes` evenly spaced axes.
/// Probabilities are first-order trigonometric polynomials in the axis angle,
/// so any n_axes >= 4 decides equivalence.
bool equivalent(const FieldSuperposition &f1, const FieldSuperposition &f2, int n_axes = 8, double tol = 1e-12);

} // namespace fieldpair
