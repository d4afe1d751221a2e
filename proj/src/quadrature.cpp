// Direct boundary quadrature of the single layer operator and the incident
// trace. The kernels use std::cyl_bessel_j / std::cyl_neumann so the oracles
// share no code with the closed forms they certify.

#include <cmath>
#include <numbers>
#include <string>

#include "mem/assembly.hpp"
#include "mem/errors.hpp"

namespace mem {
namespace {

using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr double kEulerGamma = 0.57721566490153286061;

Complex hankel0_std(double r) { return {std::cyl_bessel_j(0.0, r), std::cyl_neumann(0.0, r)}; }

Complex green(double k, double r) { return kI / 4.0 * hankel0_std(k * r); }

const Cylinder& cyl(const Scene& scene, int p) {
  if (p < 0 || p >= scene.size()) throw DimensionError("cylinder index out of range");
  return scene.cylinders[static_cast<std::size_t>(p)];
}

void check_nodes(int n_quad) {
  if (n_quad < 8 || n_quad % 2 != 0) throw DomainError("n_quad must be even and at least 8");
}

Eigen::VectorXd node_angles(int n_quad) {
  Eigen::VectorXd t(n_quad);
  for (int i = 0; i < n_quad; ++i) t(i) = 2.0 * pi * i / n_quad;
  return t;
}

Eigen::Matrix2Xd node_points(const Cylinder& c, const Eigen::VectorXd& t) {
  Eigen::Matrix2Xd x(2, t.size());
  for (Eigen::Index i = 0; i < t.size(); ++i)
    x.col(i) = c.center + c.radius * Point2(std::cos(t(i)), std::sin(t(i)));
  return x;
}

/// Column m + N holds b_m(t_i) = e^{i m t_i} / sqrt(2 pi a).
Eigen::MatrixXcd basis_matrix(double radius, const Eigen::VectorXd& t, int first, int last) {
  Eigen::MatrixXcd b(t.size(), last - first + 1);
  const double norm = 1.0 / std::sqrt(2.0 * pi * radius);
  for (Eigen::Index i = 0; i < t.size(); ++i)
    for (int m = first; m <= last; ++m) b(i, m - first) = norm * std::polar(1.0, m * t(i));
  return b;
}

/// Kernel matrix for the self block in the product-quadrature form
/// K_ij = R_ij M1_ij + (2 pi / n) M2_ij, with G = M1 ln(4 sin^2((t - tau)/2)) + M2.
Eigen::MatrixXcd kress_kernel(double k, double a, const Eigen::VectorXd& t) {
  const int n = static_cast<int>(t.size());
  const int half = n / 2;
  // R depends on i - j only.
  Eigen::VectorXd weight(n);
  for (int d = 0; d < n; ++d) {
    const double s = 2.0 * pi * d / n;
    double acc = 0.0;
    for (int m = 1; m < half; ++m) acc += std::cos(m * s) / m;
    weight(d) = -2.0 * pi / half * acc - pi / (static_cast<double>(half) * half) * std::cos(half * s);
  }
  const Complex diag_m2 = kI / 4.0 - (kEulerGamma + std::log(k * a / 2.0)) / (2.0 * pi);
  Eigen::MatrixXcd kernel(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double r_ij = weight((i - j + n) % n);
      if (i == j) {
        kernel(i, j) = r_ij * (-1.0 / (4.0 * pi)) + 2.0 * pi / n * diag_m2;
        continue;
      }
      const double half_gap = (t(i) - t(j)) / 2.0;
      const double r = 2.0 * a * std::abs(std::sin(half_gap));
      const double m1 = -std::cyl_bessel_j(0.0, k * r) / (4.0 * pi);
      const Complex m2 = green(k, r) - m1 * std::log(4.0 * std::sin(half_gap) * std::sin(half_gap));
      kernel(i, j) = r_ij * m1 + 2.0 * pi / n * m2;
    }
  }
  return kernel;
}

Eigen::MatrixXcd block_quadrature(const Scene& scene, int p, int q, int first, int last, int n_quad,
                                  SingularRule rule) {
  check_nodes(n_quad);
  const Cylinder& cp = cyl(scene, p);
  const Cylinder& cq = cyl(scene, q);
  const Eigen::VectorXd t = node_angles(n_quad);
  const Eigen::MatrixXcd bp = basis_matrix(cp.radius, t, first, last);
  const double k = scene.wavenumber;

  if (p == q) {
    if (rule == SingularRule::refuse)
      throw DomainError("self block quadrature needs the singular rule");
    const Eigen::MatrixXcd kernel = kress_kernel(k, cp.radius, t);
    const double w = 2.0 * pi * cp.radius / n_quad * cp.radius;
    return w * bp.adjoint() * kernel * bp;
  }

  const Eigen::MatrixXcd bq = basis_matrix(cq.radius, t, first, last);
  const Eigen::Matrix2Xd xp = node_points(cp, t);
  const Eigen::Matrix2Xd xq = node_points(cq, t);
  Eigen::MatrixXcd kernel(n_quad, n_quad);
  for (int i = 0; i < n_quad; ++i)
    for (int j = 0; j < n_quad; ++j) kernel(i, j) = green(k, (xp.col(i) - xq.col(j)).norm());
  const double w = (2.0 * pi * cp.radius / n_quad) * (2.0 * pi * cq.radius / n_quad);
  return w * bp.adjoint() * kernel * bq;
}

}  // namespace

Complex single_layer_pairing_quadrature(const Scene& scene, int p, int q, int m, int n, int n_quad,
                                        SingularRule rule) {
  if (p == q && m != n && rule == SingularRule::refuse)
    throw DomainError("self block quadrature needs the singular rule");
  const int lo = std::min(m, n);
  const int hi = std::max(m, n);
  const Eigen::MatrixXcd b = block_quadrature(scene, p, q, lo, hi, n_quad, rule);
  return b(m - lo, n - lo);
}

Eigen::MatrixXcd single_layer_block_quadrature(const Scene& scene, int p, int q, int n, int n_quad,
                                               SingularRule rule) {
  if (n < 0) throw DimensionError("truncation N must be non-negative");
  return block_quadrature(scene, p, q, -n, n, n_quad, rule);
}

Complex incident_field_reference(const Scene& scene, const Point2& x) {
  if (const auto* pw = std::get_if<PlaneWave>(&scene.incident)) {
    const Point2 beta(std::cos(pw->angle), std::sin(pw->angle));
    return std::polar(1.0, scene.wavenumber * beta.dot(x));
  }
  const auto& ps = std::get<PointSource>(scene.incident);
  return green(scene.wavenumber, (x - ps.location).norm());
}

Eigen::VectorXcd incident_trace_quadrature(const Scene& scene, int p, int n, int n_quad) {
  check_nodes(n_quad);
  if (n < 0) throw DimensionError("truncation N must be non-negative");
  const Cylinder& c = cyl(scene, p);
  const Eigen::VectorXd t = node_angles(n_quad);
  const Eigen::Matrix2Xd x = node_points(c, t);
  Eigen::VectorXcd u(n_quad);
  for (int i = 0; i < n_quad; ++i) u(i) = incident_field_reference(scene, x.col(i));
  const Eigen::MatrixXcd b = basis_matrix(c.radius, t, -n, n);
  return -(2.0 * pi * c.radius / n_quad) * (b.adjoint() * u);
}

}  // namespace mem
