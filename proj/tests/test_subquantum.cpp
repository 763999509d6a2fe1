#include "fieldpair/subquantum.hpp"

#include <doctest.h>

#include <cmath>

using namespace fieldpair;

TEST_CASE("embedded_ok") {
  const FieldSuperposition f = FieldSuperposition::single(BasisField::on_plus(Axis(0.5)));
  CHECK(embedded_ok(f, Particle{SurfacePoint(Axis(0.5).unit())}));
  CHECK(embedded_ok(f, Particle{SurfacePoint::from_angles(0.7, 0.2)}));
  CHECK_FALSE(embedded_ok(f, Particle{SurfacePoint(antipode(Axis(0.5)).unit())}));
  // boundary counts as supported
  CHECK(embedded_ok(f, Particle{SurfacePoint(Vec3{0, 1, 0})}));

  Rng rng(1);
  const FieldSuperposition alpha = make_alpha(Axis(1.0), AlphaSign::Minus);
  for (int i = 0; i < 1000; ++i) {
    CHECK(embedded_ok(alpha, Particle{uniform_sample(rng)}));
  }
}

TEST_CASE("elementary_outcome") {
  const Axis u(1.2);
  CHECK(elementary_outcome(u, Particle{SurfacePoint(u.unit())}) == Outcome::Plus);
  CHECK(elementary_outcome(u, Particle{SurfacePoint(antipode(u).unit())}) == Outcome::Minus);

  Rng rng(77);
  const int n = 1000000;
  int plus = 0;
  for (int i = 0; i < n; ++i) {
    plus += elementary_outcome(u, Particle{uniform_sample(rng)}) == Outcome::Plus;
  }
  CHECK(std::abs(static_cast<double>(plus) / n - 0.5) <= 3 * 0.5 / std::sqrt(n));
}

TEST_CASE("alpha_conditional") {
  const Axis u(0.4);
  CHECK(alpha_conditional({u, u, Branch::Plus}) == doctest::Approx(1.0));
  CHECK(alpha_conditional({u, u, Branch::Minus}) == doctest::Approx(0.0));
  const Axis b(0.4 - kPi / 2);
  CHECK(alpha_conditional({u, b, Branch::Plus}) == doctest::Approx(0.5));
  CHECK(alpha_conditional({u, b, Branch::Minus}) == doctest::Approx(0.5));
  CHECK(0.5 * alpha_conditional({u, b, Branch::Plus}) + 0.5 * alpha_conditional({u, b, Branch::Minus}) ==
        doctest::Approx(0.5));
}

TEST_CASE("conditional branches are complementary") {
  for (int i = 0; i < 360; ++i) {
    for (int k = 0; k < 360; k += 7) {
      const Axis u(2 * kPi * i / 360), b(2 * kPi * k / 360);
      const double sum = alpha_conditional({u, b, Branch::Plus}) + alpha_conditional({u, b, Branch::Minus});
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("consistency residual: corrected vs literal reading") {
  double worst = 0.0;
  for (int i = 0; i < 360; ++i) {
    for (int k = 0; k < 360; ++k) {
      worst = std::max(worst, consistency_residual(Axis(2 * kPi * i / 360), Axis(2 * kPi * k / 360)));
    }
  }
  CHECK(worst <= 1e-12);

  const Axis u(kPi / 3), b(0.0);
  CHECK(std::abs(consistency_residual(u, b, ConditionalReading::LiteralPrinted) - 0.25) <= 1e-12);
  CHECK(consistency_residual(u, u) <= 1e-12);
  // literal residual is |cos^2(delta/2) - 1/2| everywhere, including u = b
  for (int k = 0; k < 360; ++k) {
    const Axis bk(2 * kPi * k / 360);
    const double c = std::cos(0.5 * (u.theta() - bk.theta()));
    CHECK(std::abs(consistency_residual(u, bk, ConditionalReading::LiteralPrinted) - std::abs(c * c - 0.5)) <= 1e-12);
  }
  CHECK(std::abs(consistency_residual(u, u, ConditionalReading::LiteralPrinted) - 0.5) <= 1e-12);
}

TEST_CASE("branch_of is deterministic in the hemisphere") {
  Rng rng(8);
  const Axis u(2.2);
  for (int i = 0; i < 1000; ++i) {
    const SurfacePoint p = uniform_sample(rng);
    const Branch expected = dot(p.vec(), u.unit()) >= 0 ? Branch::Plus : Branch::Minus;
    CHECK(branch_of(u, p) == expected);
    CHECK(branch_of(u, p) == branch_of(u, p));
  }
}
