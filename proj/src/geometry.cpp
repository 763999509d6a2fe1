#include "fieldpair/geometry.hpp"

#include <cmath>
#include <string>

namespace fieldpair {

double norm(const Vec3 &v) { return std::sqrt(dot(v, v)); }

Axis::Axis(double theta) : theta_(theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("axis angle must be finite");
  }
}

Axis Axis::from_degrees(double degrees) { return Axis(degrees * kPi / 180.0); }

Vec3 Axis::unit() const { return Vec3{std::sin(theta_), 0.0, std::cos(theta_)}; }

Axis antipode(Axis a) { return Axis(a.theta() - kPi); }

Axis midpoint_axis(Axis a, Axis b) { return Axis(0.5 * (a.theta() + b.theta())); }

SurfacePoint::SurfacePoint(const Vec3 &v) : v_(v) {
  const double n = norm(v);
  if (!(std::abs(n - 1.0) <= 1e-12)) {
    throw std::invalid_argument("surface point must be a unit vector, got norm " + std::to_string(n));
  }
}

SurfacePoint SurfacePoint::from_angles(double polar, double azimuth) {
  const double s = std::sin(polar);
  return SurfacePoint(Vec3{s * std::cos(azimuth), s * std::sin(azimuth), std::cos(polar)});
}

bool contains(const Hemisphere &h, const SurfacePoint &p) { return dot(p.vec(), h.center.unit()) >= 0.0; }

SurfacePoint uniform_sample(Rng &rng) {
  std::uniform_real_distribution<double> z_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * kPi);
  const double z = z_dist(rng);
  const double phi = phi_dist(rng);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  // renormalize so the unit check holds regardless of rounding in sqrt
  Vec3 v{s * std::cos(phi), s * std::sin(phi), z};
  const double n = norm(v);
  return SurfacePoint(Vec3{v.x / n, v.y / n, v.z / n});
}

double QuadratureGrid::total_weight() const {
  double acc = 0.0;
  for (const auto &node : nodes) {
    acc += node.weight;
  }
  return acc;
}

GaussLegendre gauss_legendre(int n) {
  if (n < 1) {
    throw std::invalid_argument("gauss_legendre: order must be positive");
  }
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  // Newton iteration on P_n from the Chebyshev-like initial guess; roots are
  // symmetric so only half are computed.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    // recompute derivative at the converged root
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[i] = -x;
    gl.weights[i] = w;
    gl.nodes[n - 1 - i] = x;
    gl.weights[n - 1 - i] = w;
  }
  return gl;
}

QuadratureGrid hemisphere_grid(const Hemisphere &h, int n_polar, int n_azimuth) {
  if (n_polar < 2 || n_azimuth < 2) {
    throw std::invalid_argument("hemisphere_grid: need n_polar >= 2 and n_azimuth >= 2");
  }
  const GaussLegendre gl = gauss_legendre(n_polar);
  // local frame: pole along the center, e1 in the x-z plane, e2 = +y
  const double th = h.center.theta();
  const Vec3 pole{std::sin(th), 0.0, std::cos(th)};
  const Vec3 e1{std::cos(th), 0.0, -std::sin(th)};
  const Vec3 e2{0.0, 1.0, 0.0};
  const double dphi = 2.0 * kPi / n_azimuth;

  QuadratureGrid grid;
  grid.nodes.reserve(static_cast<std::size_t>(n_polar) * n_azimuth);
  for (int i = 0; i < n_polar; ++i) {
    const double t = 0.5 * (gl.nodes[i] + 1.0); // cos(polar) in [0, 1]
    const double w = 0.5 * gl.weights[i] * dphi;
    const double s = std::sqrt(1.0 - t * t);
    for (int j = 0; j < n_azimuth; ++j) {
      const double phi = (j + 0.5) * dphi;
      const double c = s * std::cos(phi);
      const double d = s * std::sin(phi);
      Vec3 v{t * pole.x + c * e1.x + d * e2.x, t * pole.y + c * e1.y + d * e2.y, t * pole.z + c * e1.z + d * e2.z};
      const double n = norm(v);
      grid.nodes.push_back({SurfacePoint(Vec3{v.x / n, v.y / n, v.z / n}), w});
    }
  }
  return grid;
}

} // namespace fieldpair
