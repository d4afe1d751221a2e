#pragma once

#include <vector>

#include "mem/coefficients.hpp"
#include "mem/scene.hpp"

namespace mem {

struct FieldSample {
  Point2 point = Point2::Zero();
  Complex u_inc{};
  Complex u_scat{};
  Complex u_total{};
  bool inside = false;  ///< inside a closed cylinder; field entries stay zero
};

/// Points closer than this fraction of the smallest radius to a cylinder
/// count as inside.
inline constexpr double kInsideMargin = 1e-9;
/// The field quadrature refuses points within this fraction of a_min.
inline constexpr double kQuadratureClearance = 0.01;
/// Boundary samples sit this fraction of a_p outside Gamma_p.
inline constexpr double kTraceOffset = 1e-6;

bool is_inside(const Scene& scene, const Point2& x);

Complex incident_field(const Scene& scene, const Point2& x);

/// u^s(x) = sum_p sum_m phi_m^p (i/4) sqrt(2 pi a_p) J_m(k a_p) H_m(k r_p) e^{i m theta_p}.
/// Throws DomainError inside a cylinder.
Complex scattered_field(const Scene& scene, const CoefficientVector& solution, const Point2& x);

/// Trapezoid rule for the single layer potential of the density
/// phi = sum phi_m^p b_m^p, with the standard-library Hankel kernel.
Complex single_layer_field_quadrature(const Scene& scene, const CoefficientVector& solution,
                                      const Point2& x, int n_quad);

/// max |u_inc + u_s| over samples_per_cylinder equispaced points per boundary,
/// each pushed outward by kTraceOffset * a_p.
double boundary_residual(const Scene& scene, const CoefficientVector& solution,
                         int samples_per_cylinder = 64);

struct GridSpec {
  Point2 origin = Point2::Zero();
  double dx = 1.0;
  double dy = 1.0;
  int nx = 1;
  int ny = 1;
};

/// Row-major (y outer, x inner) samples.
std::vector<FieldSample> total_field_grid(const Scene& scene, const CoefficientVector& solution,
                                          const GridSpec& grid);

}  // namespace mem
