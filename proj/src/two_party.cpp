#include "fieldpair/two_party.hpp"

#include <algorithm>
#include <cmath>

namespace fieldpair {

namespace {

constexpr double kShapeTol = 1e-12;

constexpr std::array<Outcome, 2> kOutcomes{Outcome::Plus, Outcome::Minus};

// 0 for the +u hemisphere, 1 for -u, -1 for anything else.
int side_of(const Hemisphere &h, Axis u) {
  const double d = std::remainder(h.center.theta() - u.theta(), 2.0 * kPi);
  if (std::abs(d) < kShapeTol) {
    return 0;
  }
  if (std::abs(std::abs(d) - kPi) < kShapeTol) {
    return 1;
  }
  return -1;
}

// Coefficient of the basis term in the canonical F_{+u} / F_{-u} = F_{antipode(u)} form.
// Different angle representatives of the same hemisphere give the same
// amplitude up to a sign cos(x + pi) = -cos(x).
Complex canonical_coeff(const BasisField &basis, Axis canonical_center) {
  const double d = basis.support.center.theta() - canonical_center.theta();
  const long turns = std::lround(d / (2.0 * kPi));
  const double sign = (turns % 2 == 0) ? 1.0 : -1.0;
  return sign * std::polar(1.0, basis.phase);
}

} // namespace

TwoPartyField::TwoPartyField(std::vector<PairTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw DegenerateField("two-party field needs at least one term");
  }
  const bool any_nonzero =
      std::any_of(terms_.begin(), terms_.end(), [](const PairTerm &t) { return std::abs(t.coeff) > 0.0; });
  if (!any_nonzero) {
    throw DegenerateField("two-party field has only zero coefficients");
  }
}

Complex pair_amplitude(const TwoPartyField &f, Axis outcome1, Axis outcome2) {
  Complex acc = 0.0;
  for (const auto &t : f.terms()) {
    acc += t.coeff * basis_amplitude(t.first, outcome1) * basis_amplitude(t.second, outcome2);
  }
  return acc;
}

TwoPartyField make_ft(Axis u) {
  const FieldSuperposition one = make_alpha(u, AlphaSign::Plus);
  const FieldSuperposition two = make_alpha(u, AlphaSign::Minus);
  std::vector<PairTerm> terms;
  terms.reserve(4);
  for (const auto &t1 : one.terms()) {
    for (const auto &t2 : two.terms()) {
      terms.push_back({t1.coeff * t2.coeff, t1.basis, t2.basis});
    }
  }
  return TwoPartyField(std::move(terms));
}

Decomposition decompose(const TwoPartyField &ft) {
  if (ft.terms().empty()) {
    throw std::invalid_argument("decompose: empty field");
  }
  const Axis u = ft.terms().front().first.support.center;
  const std::array<Axis, 2> centers{u, antipode(u)};
  // c[s1][s2]: coefficient on F_{s1 u} x F_{s2 u}
  std::array<std::array<Complex, 2>, 2> c{};
  for (const auto &t : ft.terms()) {
    const int s1 = side_of(t.first.support, u);
    const int s2 = side_of(t.second.support, u);
    if (s1 < 0 || s2 < 0) {
      throw std::invalid_argument("decompose: supports are not hemispheres of a common axis");
    }
    c[s1][s2] += t.coeff * canonical_coeff(t.first, centers[s1]) * canonical_coeff(t.second, centers[s2]);
  }
  const Complex same = c[0][0];
  const Complex cross = c[0][1] / Complex(0.0, 1.0);
  const double scale = std::max({std::abs(c[0][0]), std::abs(c[0][1]), std::abs(c[1][0]), std::abs(c[1][1])});
  if (scale == 0.0 || std::abs(c[1][1] - same) > kShapeTol * scale ||
      std::abs(c[1][0] + c[0][1]) > kShapeTol * scale) {
    throw std::invalid_argument("decompose: field is not of the F_0 + i F_aleph form");
  }
  const BasisField plus = BasisField::on_plus(u);
  const BasisField minus = BasisField::on_minus(u);
  std::vector<PairTerm> f0_terms{{same, plus, plus}, {same, minus, minus}};
  std::vector<PairTerm> fa_terms{{cross, plus, minus}, {-cross, minus, plus}};
  if (std::abs(same) == 0.0 || std::abs(cross) == 0.0) {
    throw std::invalid_argument("decompose: one of F_0 / F_aleph vanishes");
  }
  return Decomposition{u, TwoPartyField(std::move(f0_terms)), TwoPartyField(std::move(fa_terms))};
}

double max_abs_diff(const JointDistribution &x, const JointDistribution &y) {
  double m = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      m = std::max(m, std::abs(x.p[i][j] - y.p[i][j]));
    }
  }
  return m;
}

JointDistribution pair_distribution(const TwoPartyField &f, const JointSetting &s) {
  JointDistribution d;
  for (Outcome e1 : kOutcomes) {
    for (Outcome e2 : kOutcomes) {
      d.at(e1, e2) = std::norm(pair_amplitude(f, outcome_axis(s.a, e1), outcome_axis(s.b, e2)));
    }
  }
  const double n = d.total();
  if (n < kDegenerateNorm) {
    throw DegenerateField("two-party field has vanishing joint norm");
  }
  for (auto &row : d.p) {
    for (auto &x : row) {
      x /= n;
    }
  }
  return d;
}

Complex joint_amplitude_aleph(Axis u, const JointSetting &s, Outcome e1, Outcome e2) {
  const double o1 = outcome_axis(s.a, e1).theta();
  const double o2 = outcome_axis(s.b, e2).theta();
  const double plus_u = u.theta();
  const double minus_u = antipode(u).theta();
  return std::cos(0.5 * (o1 - plus_u)) * std::cos(0.5 * (o2 - minus_u)) -
         std::cos(0.5 * (o1 - minus_u)) * std::cos(0.5 * (o2 - plus_u));
}

JointDistribution joint_distribution(const JointSetting &s, Axis u) {
  JointDistribution d;
  for (Outcome e1 : kOutcomes) {
    for (Outcome e2 : kOutcomes) {
      d.at(e1, e2) = std::norm(joint_amplitude_aleph(u, s, e1, e2));
    }
  }
  const double n = d.total();
  for (auto &row : d.p) {
    for (auto &x : row) {
      x /= n;
    }
  }
  return d;
}

JointDistribution joint_via_conditional(const JointSetting &s, Wing anchor, ConditionalReading reading) {
  const Axis anchor_axis = anchor == Wing::First ? s.a : s.b;
  const Axis other_axis = anchor == Wing::First ? s.b : s.a;
  JointDistribution d;
  for (Branch branch : {Branch::Plus, Branch::Minus}) {
    // Anchor particle in `branch` of its own axis, probability 1/2; the other
    // particle is on the opposite point, hence in the opposite hemisphere.
    const Outcome anchor_outcome = branch == Branch::Plus ? Outcome::Plus : Outcome::Minus;
    const double p_other_plus = alpha_conditional({anchor_axis, other_axis, opposite(branch)}, reading);
    for (Outcome other : kOutcomes) {
      const double p_other = other == Outcome::Plus ? p_other_plus : 1.0 - p_other_plus;
      const double p = 0.5 * p_other;
      if (anchor == Wing::First) {
        d.at(anchor_outcome, other) = p;
      } else {
        d.at(other, anchor_outcome) = p;
      }
    }
  }
  return d;
}

double correlation(const JointSetting &s, Axis u) { return joint_distribution(s, u).correlation(); }

std::array<double, 2> marginal(const JointSetting &s, Wing wing, Axis u) {
  const JointDistribution d = joint_distribution(s, u);
  if (wing == Wing::First) {
    return {d.p[0][0] + d.p[0][1], d.p[1][0] + d.p[1][1]};
  }
  return {d.p[0][0] + d.p[1][0], d.p[0][1] + d.p[1][1]};
}

F0Check f0_noncontribution_check(const JointSetting &s, Axis u) {
  const TwoPartyField ft = make_ft(u);
  const Decomposition parts = decompose(ft);
  const JointDistribution aleph = pair_distribution(parts.faleph, s);
  const double route = std::max(max_abs_diff(aleph, joint_via_conditional(s, Wing::First)),
                                max_abs_diff(aleph, joint_via_conditional(s, Wing::Second)));
  const JointDistribution with_f0 = pair_distribution(ft, s);
  return F0Check{route, max_abs_diff(with_f0, aleph)};
}

SourceState::SourceState(Axis u, const SurfacePoint &r1, std::string x1, std::string x2)
    : field_(make_ft(u)), u_(u), r1_(r1), r2_(r1.reflected()), x1_(std::move(x1)), x2_(std::move(x2)) {}

SourceState SourceState::sample(Axis u, Rng &rng) { return SourceState(u, uniform_sample(rng)); }

} // namespace fieldpair
