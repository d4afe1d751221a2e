#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mem/coefficients.hpp"
#include "mem/errors.hpp"
#include "mem/scene.hpp"
#include "mem/solver.hpp"

namespace mem {

// ---------------------------------------------------------------------------
// Rate fitting

struct RateFit {
  double slope = 0.0;      ///< d log(value) / dN
  double intercept = 0.0;
  double r_squared = 1.0;
  std::vector<std::size_t> indices;  ///< points used, ascending
};

inline constexpr double kFitFloor = 1e-13;
/// Upper edge of the fitting window used by sweeps: excludes the
/// pre-asymptotic plateau.
inline constexpr double kFitCeiling = 1e-2;
inline constexpr double kFitTailFraction = 0.5;

/// Least-squares slope of log(values) against n over the last tail_fraction
/// of the points lying strictly inside (floor, ceiling); at least 4 points are
/// used whenever the window holds 4. Throws DomainError with fewer.
template <typename Real>
RateFit fit_rate(std::span<const int> n, std::span<const Real> values, double tail_fraction = 0.5,
                 double floor = kFitFloor, double ceiling = std::numeric_limits<double>::infinity()) {
  if (n.size() != values.size()) throw DimensionError("fit_rate: size mismatch");
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
    throw DomainError("fit_rate: tail_fraction must lie in (0, 1]");
  std::vector<std::size_t> window;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = static_cast<double>(values[i]);
    if (v > floor && v < ceiling && std::isfinite(v)) window.push_back(i);
  }
  if (window.size() < 4)
    throw DomainError("fit_rate: " + std::to_string(window.size()) +
                      " points in the fitting window, need at least 4");
  auto take = static_cast<std::size_t>(std::ceil(tail_fraction * static_cast<double>(window.size())));
  take = std::max<std::size_t>(take, 4);

  RateFit fit;
  fit.indices.assign(window.end() - static_cast<std::ptrdiff_t>(take), window.end());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i : fit.indices) {
    sx += n[i];
    sy += std::log(static_cast<double>(values[i]));
  }
  const double cnt = static_cast<double>(take);
  const double mx = sx / cnt;
  const double my = sy / cnt;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i : fit.indices) {
    const double dx = n[i] - mx;
    const double dy = std::log(static_cast<double>(values[i])) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw DomainError("fit_rate: all N values coincide");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

// ---------------------------------------------------------------------------
// Envelopes

/// Base b of gamma(N) = b^N together with the pair or source that attains it.
struct GammaBase {
  double value = 0.0;
  int p = -1;
  int q = -1;  ///< -1 when the source term dominates
  bool non_contractive() const { return value >= 1.0; }
};

/// Point source: max(a_p/d_px0, a_p/(d_pq - a_q)); plane wave: the pair term.
GammaBase gamma1_base(const Scene& scene, const PairGeometry& geom);
/// Point source: max(a_p/d_px0, a_p d_qx0 / (d_pq d_qx0 - a_q^2));
/// plane wave: max a_p/d_pq.
GammaBase gamma2_base(const Scene& scene, const PairGeometry& geom);

double gamma1(const Scene& scene, const PairGeometry& geom, int n);
double gamma2(const Scene& scene, const PairGeometry& geom, int n);

// ---------------------------------------------------------------------------
// Sweeps

struct ConvergenceReport {
  std::string scene_id;
  SequenceNorm norm = SequenceNorm::l0;
  int n_ref = 0;
  std::vector<int> n_values;
  std::vector<double> error;
  std::vector<double> gamma1;
  std::vector<double> gamma2;
  std::vector<double> e1_surrogate;  ///< filled by first_order_error_sweep only
};

/// Dense solve at N_ref = n_max + 5.
SolveResult reference_solution(const Scene& scene, int n_max);

/// ||reference - pad(candidate)|| in the selected norm.
double approximation_error(const CoefficientVector& reference, const CoefficientVector& candidate,
                           SequenceNorm norm = SequenceNorm::l0);

/// One dense solve per N (in parallel) plus the reference at max(N) + 5.
ConvergenceReport convergence_sweep(const Scene& scene, const std::vector<int>& n_list,
                                    SequenceNorm norm = SequenceNorm::l0);

/// As convergence_sweep, plus the first-order surrogate
/// ||G - G(N)|| + ||(A(N_ref) - A(N)) G(N_ref)|| with G taken at N_ref.
ConvergenceReport first_order_error_sweep(const Scene& scene, const std::vector<int>& n_list,
                                          SequenceNorm norm = SequenceNorm::l0);

/// Fitted log-slopes of a report's curves; E uses the window (1e-13, 1e-2)
/// and the last half of its points, the envelopes every positive point.
struct ReportRates {
  RateFit error;
  RateFit gamma1;
  RateFit gamma2;
};
ReportRates report_rates(const ConvergenceReport& report);

/// log E(N) - log gamma1(N) <= slack * N + C over the fitted tail of E.
struct BoundCheck {
  double constant = 0.0;      ///< smallest C that makes the inequality hold
  double excess_slope = 0.0;  ///< fitted slope of log(E / gamma1) over the tail
  bool holds = false;         ///< C finite and excess_slope <= slack
};
BoundCheck bound_validity(const ConvergenceReport& report, double slack = 0.05);

// ---------------------------------------------------------------------------
// Diagnostics

enum class SigmaKernel { standard, point_source, plane_wave };

inline constexpr double kSigmaRelativeCutoff = 1e-18;

/// Partial sum over n = 1..n_max of sigma^pq(m, n). Throws DomainError if the
/// terms are still growing at n_max.
double sigma_series(const Scene& scene, const PairGeometry& geom, int p, int q, int m,
                    SigmaKernel kind, int n_max = 100000);

enum class Breakdown { first_order_valid, first_order_suspect };

struct BreakdownReport {
  Breakdown classification = Breakdown::first_order_valid;
  int largest = -1;
  int mid = -1;
  double gap = 0.0;
  double threshold = 0.0;  ///< 5/4 of the mid cylinder's radius
};

/// Compares the gap between the two largest cylinders with 5/4 of the
/// smaller one's radius. Needs M >= 2.
BreakdownReport breakdown_check(const Scene& scene, const PairGeometry& geom);

}  // namespace mem
