#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace fieldpair {

inline constexpr double kPi = std::numbers::pi;

/// Random stream used throughout. Each task owns its own instance.
using Rng = std::mt19937_64;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;
};

inline double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3 &v);

/// Direction in the x-z plane given by its polar angle from +z.
///
/// The angle is kept as given (no wrapping). Two axes whose angles differ by
/// 2*pi point the same way, but half-angle amplitudes built from them differ
/// in sign, which only matters inside a superposition.
class Axis {
public:
  constexpr Axis() = default;
  explicit Axis(double theta);

  static Axis from_degrees(double degrees);

  constexpr double theta() const { return theta_; }
  double degrees() const { return theta_ * 180.0 / kPi; }
  Vec3 unit() const;

private:
  double theta_ = 0.0;
};

/// Opposite direction, taken as theta - pi.
Axis antipode(Axis a);

/// Axis at the mean of the two polar angles.
Axis midpoint_axis(Axis a, Axis b);

/// Closed half-sphere {r : r . center >= 0}.
struct Hemisphere {
  Axis center;

  Hemisphere opposite() const { return Hemisphere{antipode(center)}; }
};

/// Point on the unit sphere.
class SurfacePoint {
public:
  /// Throws std::invalid_argument unless |v| = 1 within 1e-12.
  explicit SurfacePoint(const Vec3 &v);

  /// Polar angle from +z and azimuth from +x.
  static SurfacePoint from_angles(double polar, double azimuth);

  const Vec3 &vec() const { return v_; }
  SurfacePoint reflected() const { return SurfacePoint(Vec3{-v_.x, -v_.y, -v_.z}); }

private:
  Vec3 v_;
};

/// Boundary points (r . center == 0) belong to the hemisphere.
bool contains(const Hemisphere &h, const SurfacePoint &p);

/// Uniform point on the sphere: z uniform in [-1, 1], azimuth uniform in [0, 2pi).
SurfacePoint uniform_sample(Rng &rng);

struct QuadratureNode {
  SurfacePoint point;
  double weight;
};

struct QuadratureGrid {
  std::vector<QuadratureNode> nodes;

  template <class F> double integrate(F &&f) const {
    double acc = 0.0;
    for (const auto &node : nodes) {
      acc += node.weight * f(node.point);
    }
    return acc;
  }

  double total_weight() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

/// Product rule over a hemisphere: Gauss-Legendre in cos(polar) on [0, 1] and
/// uniform azimuth, built around h.center as the pole and rotated into the
/// lab frame. Exact for polynomials of degree <= 2*n_polar - 1 in cos(polar).
QuadratureGrid hemisphere_grid(const Hemisphere &h, int n_polar, int n_azimuth);

} // namespace fieldpair
