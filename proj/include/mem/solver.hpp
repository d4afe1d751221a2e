#pragma once

#include <limits>
#include <string_view>

#include "mem/assembly.hpp"
#include "mem/coefficients.hpp"

namespace mem {

enum class Backend { dense, gmres, reflections, first_order };

std::string_view backend_name(Backend backend);
/// Accepts dense, gmres, reflections, first-order.
Backend parse_backend(std::string_view name);

/// Largest M(2N+1) the dense backend accepts.
inline constexpr Eigen::Index kMaxDenseDimension = 20000;
/// reciprocal condition estimates below this are treated as singular.
inline constexpr double kSingularRcond = 1e-14;

struct SolveResult {
  CoefficientVector solution;
  Backend backend = Backend::dense;
  int iterations = 0;
  /// ||W Phi - G||_2 recomputed from the returned solution. For first_order
  /// this is the neglected coupling ||A G||_2.
  double residual = 0.0;
  bool converged = false;
  bool diverged = false;
  /// 1 / rcond from the dense LU; NaN for the other backends.
  double condition_estimate = std::numeric_limits<double>::quiet_NaN();
};

double residual_norm(const MemSystem& system, const CoefficientVector& solution);

/// LU with partial pivoting. Throws SingularError and CapabilityError.
SolveResult solve_dense(const MemSystem& system);

SolveResult solve_gmres(const MemSystem& system, double tol = 1e-10, int restart = 50,
                        int max_iterations = 2000);

/// Phi^(0) = G, Phi^(j) = G - A Phi^(j-1). Converged when the update, scaled
/// by max(1, rho/(1-rho)) with rho the ratio of successive updates, falls to
/// tol * ||Phi||; diverged after 3 consecutive growing updates.
SolveResult solve_reflections(const MemSystem& system, int max_iters = 1000, double tol = 1e-12);

/// Phi = G; the residual field records ||A G||_2.
SolveResult first_order_solution(const MemSystem& system);

/// Dispatch with default parameters.
SolveResult solve(const MemSystem& system, Backend backend);

}  // namespace mem
