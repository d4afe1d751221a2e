#include "mem/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mem/errors.hpp"
#include "mem/parallel.hpp"
#include "mem/specfun.hpp"

namespace mem {
namespace {

using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

double min_radius(const Scene& scene) {
  double a = std::numeric_limits<double>::infinity();
  for (const auto& c : scene.cylinders) a = std::min(a, c.radius);
  return a;
}

void check_solution(const Scene& scene, const CoefficientVector& solution) {
  if (solution.cylinders() != scene.size())
    throw DimensionError("solution cylinder count does not match the scene");
}

}  // namespace

bool is_inside(const Scene& scene, const Point2& x) {
  const double margin = kInsideMargin * min_radius(scene);
  return std::any_of(scene.cylinders.begin(), scene.cylinders.end(), [&](const Cylinder& c) {
    return (x - c.center).norm() <= c.radius + margin;
  });
}

Complex incident_field(const Scene& scene, const Point2& x) {
  if (const auto* pw = std::get_if<PlaneWave>(&scene.incident)) {
    const Point2 beta(std::cos(pw->angle), std::sin(pw->angle));
    return std::polar(1.0, scene.wavenumber * beta.dot(x));
  }
  const auto& ps = std::get<PointSource>(scene.incident);
  const double r = (x - ps.location).norm();
  if (r == 0.0) throw DomainError("incident field is singular at the source");
  return kI / 4.0 * hankel1(0, scene.wavenumber * r);
}

Complex scattered_field(const Scene& scene, const CoefficientVector& solution, const Point2& x) {
  check_solution(scene, solution);
  if (is_inside(scene, x)) throw DomainError("field point lies inside a cylinder");
  const int n = solution.truncation();
  Complex sum{};
  for (int p = 0; p < scene.size(); ++p) {
    const Cylinder& c = scene.cylinders[static_cast<std::size_t>(p)];
    const Point2 rel = x - c.center;
    const double theta = polar_angle(rel);
    const CylinderTable ta(n, scene.wavenumber * c.radius, false);
    const CylinderTable tr(n, scene.wavenumber * rel.norm());
    const Complex scale = kI / 4.0 * std::sqrt(2.0 * pi * c.radius);
    Complex part{};
    for (int m = -n; m <= n; ++m) {
      const Complex phi = solution(p, m);
      if (phi == Complex{}) continue;
      part += phi * (ta.j(m) * tr.h(m)).value() * std::polar(1.0, m * theta);
    }
    sum += scale * part;
  }
  return sum;
}

Complex single_layer_field_quadrature(const Scene& scene, const CoefficientVector& solution,
                                      const Point2& x, int n_quad) {
  check_solution(scene, solution);
  if (n_quad < 8) throw DomainError("n_quad must be at least 8");
  const double clearance = kQuadratureClearance * min_radius(scene);
  for (const auto& c : scene.cylinders)
    if ((x - c.center).norm() <= c.radius + clearance)
      throw DomainError("field point too close to a boundary for trapezoid quadrature");

  const int n = solution.truncation();
  Complex sum{};
  for (int p = 0; p < scene.size(); ++p) {
    const Cylinder& c = scene.cylinders[static_cast<std::size_t>(p)];
    const double norm = 1.0 / std::sqrt(2.0 * pi * c.radius);
    Complex part{};
    for (int i = 0; i < n_quad; ++i) {
      const double t = 2.0 * pi * i / n_quad;
      const Point2 y = c.center + c.radius * Point2(std::cos(t), std::sin(t));
      Complex density{};
      for (int m = -n; m <= n; ++m) density += solution(p, m) * std::polar(norm, m * t);
      const double kr = scene.wavenumber * (x - y).norm();
      const Complex g = kI / 4.0 * Complex(std::cyl_bessel_j(0.0, kr), std::cyl_neumann(0.0, kr));
      part += g * density;
    }
    sum += part * (2.0 * pi * c.radius / n_quad);
  }
  return sum;
}

double boundary_residual(const Scene& scene, const CoefficientVector& solution, int samples_per_cylinder) {
  check_solution(scene, solution);
  if (samples_per_cylinder < 1) throw DomainError("need at least one boundary sample");
  std::vector<double> worst(scene.cylinders.size(), 0.0);
  parallel_for(scene.size(), [&](int p) {
    const Cylinder& c = scene.cylinders[static_cast<std::size_t>(p)];
    const double r = c.radius * (1.0 + kTraceOffset);
    for (int i = 0; i < samples_per_cylinder; ++i) {
      const double t = 2.0 * pi * i / samples_per_cylinder;
      const Point2 x = c.center + r * Point2(std::cos(t), std::sin(t));
      const double v = std::abs(incident_field(scene, x) + scattered_field(scene, solution, x));
      worst[static_cast<std::size_t>(p)] = std::max(worst[static_cast<std::size_t>(p)], v);
    }
  });
  return *std::max_element(worst.begin(), worst.end());
}

std::vector<FieldSample> total_field_grid(const Scene& scene, const CoefficientVector& solution,
                                          const GridSpec& grid) {
  check_solution(scene, solution);
  if (grid.nx < 1 || grid.ny < 1) throw DimensionError("grid needs nx, ny >= 1");
  std::vector<FieldSample> out(static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.ny));
  parallel_for(grid.ny, [&](int j) {
    for (int i = 0; i < grid.nx; ++i) {
      FieldSample& s = out[static_cast<std::size_t>(j) * static_cast<std::size_t>(grid.nx) +
                           static_cast<std::size_t>(i)];
      s.point = grid.origin + Point2(i * grid.dx, j * grid.dy);
      s.inside = is_inside(scene, s.point);
      if (s.inside) continue;
      s.u_inc = incident_field(scene, s.point);
      s.u_scat = scattered_field(scene, solution, s.point);
      s.u_total = s.u_inc + s.u_scat;
    }
  });
  return out;
}

}  // namespace mem
