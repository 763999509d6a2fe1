#pragma once

#include "fieldpair/subquantum.hpp"

#include <array>
#include <string>

namespace fieldpair {

struct PairTerm {
  Complex coeff;
  BasisField first;
  BasisField second;
};

/// Product-basis field over the two spheres.
class TwoPartyField {
public:
  explicit TwoPartyField(std::vector<PairTerm> terms);

  const std::vector<PairTerm> &terms() const { return terms_; }

private:
  std::vector<PairTerm> terms_;
};

/// Joint amplitude for outcome hemispheres centred on `outcome1` (wing 1) and
/// `outcome2` (wing 2): each product term contributes the product of its
/// single-wing rotated averages.
Complex pair_amplitude(const TwoPartyField &f, Axis outcome1, Axis outcome2);

/// F_alpha(u)+ on wing 1 times F_alpha(u)- on wing 2, expanded to 4 terms.
TwoPartyField make_ft(Axis u);

/// F_T = F_0 + i F_aleph.
struct Decomposition {
  Axis u;
  TwoPartyField f0;     ///< F_{+u}F_{+u} + F_{-u}F_{-u}, scaled
  TwoPartyField faleph; ///< F_{+u}F_{-u} - F_{-u}F_{+u}, scaled
};

/// Splits a field of the make_ft form (either wing order) into its
/// same-hemisphere and opposite-hemisphere parts. Throws std::invalid_argument
/// for any other shape.
Decomposition decompose(const TwoPartyField &ft);

struct JointSetting {
  Axis a; ///< wing 1
  Axis b; ///< wing 2
};

/// Probabilities over the four outcome pairs.
struct JointDistribution {
  std::array<std::array<double, 2>, 2> p{}; ///< [eps1][eps2], index 0 is +1

  static constexpr std::size_t index(Outcome o) { return o == Outcome::Plus ? 0 : 1; }
  double at(Outcome e1, Outcome e2) const { return p[index(e1)][index(e2)]; }
  double &at(Outcome e1, Outcome e2) { return p[index(e1)][index(e2)]; }
  double total() const { return p[0][0] + p[0][1] + p[1][0] + p[1][1]; }
  double correlation() const { return p[0][0] + p[1][1] - p[0][1] - p[1][0]; }
};

/// Largest entry-wise absolute difference.
double max_abs_diff(const JointDistribution &x, const JointDistribution &y);

/// |pair_amplitude|^2 normalized over the four outcome pairs.
JointDistribution pair_distribution(const TwoPartyField &f, const JointSetting &s);

/// Closed form of the F_aleph(u) amplitude for outcomes (eps1 along a, eps2 along b).
Complex joint_amplitude_aleph(Axis u, const JointSetting &s, Outcome e1, Outcome e2);

/// Joint law from F_aleph alone. Independent of u.
JointDistribution joint_distribution(const JointSetting &s, Axis u = Axis{0.0});

enum class Wing { First, Second };

/// Anchored route: rewrite the state on the anchor wing's axis so that wing's
/// outcome follows the particle hemisphere, then take the other wing from the
/// hemisphere-conditioned table on the opposite hemisphere.
JointDistribution joint_via_conditional(const JointSetting &s, Wing anchor,
                                        ConditionalReading reading = ConditionalReading::Corrected);

/// Sum of eps1 * eps2 * p over the joint law; equals -cos(theta_b - theta_a).
double correlation(const JointSetting &s, Axis u = Axis{0.0});

/// {P(+1), P(-1)} for one wing.
std::array<double, 2> marginal(const JointSetting &s, Wing wing, Axis u = Axis{0.0});

struct F0Check {
  /// max |P_aleph - P_cond| over both anchors; zero when F_0 is dropped.
  double aleph_route_discrepancy;
  /// max |P_{F_T} - P_aleph| when the F_0 terms are kept.
  double f0_included_deviation;
};

/// Shows that dropping F_0 is what makes the field route agree with the
/// conditional routes.
F0Check f0_noncontribution_check(const JointSetting &s, Axis u = Axis{0.0});

/// Source configuration: the F_T(u) field and particles on opposite points.
class SourceState {
public:
  SourceState(Axis u, const SurfacePoint &r1, std::string x1 = "x1", std::string x2 = "x2");

  static SourceState sample(Axis u, Rng &rng);

  const TwoPartyField &field() const { return field_; }
  Axis u() const { return u_; }
  const SurfacePoint &r1() const { return r1_; }
  const SurfacePoint &r2() const { return r2_; }
  const std::string &x1() const { return x1_; }
  const std::string &x2() const { return x2_; }

private:
  TwoPartyField field_;
  Axis u_;
  SurfacePoint r1_;
  SurfacePoint r2_;
  std::string x1_;
  std::string x2_;
};

} // namespace fieldpair
