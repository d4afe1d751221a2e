#include "mem/solver.hpp"

#include <Eigen/LU>
#include <string>

#include "mem/errors.hpp"
#include "mem/gmres.hpp"

namespace mem {

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::dense:
      return "dense";
    case Backend::gmres:
      return "gmres";
    case Backend::reflections:
      return "reflections";
    case Backend::first_order:
      return "first-order";
  }
  return "";
}

Backend parse_backend(std::string_view name) {
  for (Backend b : {Backend::dense, Backend::gmres, Backend::reflections, Backend::first_order})
    if (backend_name(b) == name) return b;
  throw FormatError("unknown backend '" + std::string(name) + "'");
}

double residual_norm(const MemSystem& system, const CoefficientVector& solution) {
  return (system.op.apply(solution.values()) - system.rhs.values()).norm();
}

SolveResult solve_dense(const MemSystem& system) {
  const Eigen::Index dim = system.op.dimension();
  if (dim > kMaxDenseDimension)
    throw CapabilityError("dense solve of dimension " + std::to_string(dim) + " exceeds the cap of " +
                          std::to_string(kMaxDenseDimension));
  SolveResult out;
  out.backend = Backend::dense;
  if (dim == 0) {
    out.solution = system.rhs;
    out.converged = true;
    out.condition_estimate = 1.0;
    return out;
  }
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(system.op.dense());
  const double rcond = lu.rcond();
  if (!(rcond >= kSingularRcond))
    throw SingularError("system matrix is numerically singular (rcond = " + std::to_string(rcond) + ")");
  out.solution = CoefficientVector(system.cylinders(), system.truncation(), lu.solve(system.rhs.values()));
  out.condition_estimate = 1.0 / rcond;
  out.residual = residual_norm(system, out.solution);
  out.converged = true;
  return out;
}

SolveResult solve_gmres(const MemSystem& system, double tol, int restart, int max_iterations) {
  if (!(tol > 0.0)) throw DomainError("gmres tolerance must be positive");
  auto outcome = gmres<Complex>([&](const Eigen::VectorXcd& v) { return system.op.apply(v); },
                                system.rhs.values(), tol, restart, max_iterations);
  SolveResult out;
  out.backend = Backend::gmres;
  out.solution = CoefficientVector(system.cylinders(), system.truncation(), std::move(outcome.x));
  out.iterations = outcome.iterations;
  out.residual = residual_norm(system, out.solution);
  const double gnorm = system.rhs.values().norm();
  out.converged = out.residual <= tol * gnorm;
  return out;
}

SolveResult solve_reflections(const MemSystem& system, int max_iters, double tol) {
  if (max_iters < 1) throw DomainError("reflections need max_iters >= 1");
  const Eigen::VectorXcd& g = system.rhs.values();
  Eigen::VectorXcd phi = g;
  SolveResult out;
  out.backend = Backend::reflections;

  double previous_update = -1.0;
  int growing = 0;
  for (int j = 1; j <= max_iters; ++j) {
    Eigen::VectorXcd next = g - system.op.apply_coupling(phi);
    const double update = (next - phi).norm();
    phi = std::move(next);
    out.iterations = j;
    if (update == 0.0) {
      out.iterations = j - 1;
      out.converged = true;
      break;
    }
    if (!std::isfinite(update)) {
      out.diverged = true;
      break;
    }
    double tail = update;
    if (previous_update > 0.0) {
      const double rho = update / previous_update;
      if (rho < 1.0) tail = update * std::max(1.0, rho / (1.0 - rho));
      growing = rho > 1.0 ? growing + 1 : 0;
      if (growing >= 3) {
        out.diverged = true;
        break;
      }
    }
    if (previous_update > 0.0 && update < previous_update && tail <= tol * phi.norm()) {
      out.converged = true;
      break;
    }
    previous_update = update;
  }
  out.solution = CoefficientVector(system.cylinders(), system.truncation(), std::move(phi));
  out.residual = residual_norm(system, out.solution);
  return out;
}

SolveResult first_order_solution(const MemSystem& system) {
  SolveResult out;
  out.backend = Backend::first_order;
  out.solution = system.rhs;
  out.residual = system.op.apply_coupling(system.rhs.values()).norm();
  out.converged = true;
  return out;
}

SolveResult solve(const MemSystem& system, Backend backend) {
  switch (backend) {
    case Backend::dense:
      return solve_dense(system);
    case Backend::gmres:
      return solve_gmres(system);
    case Backend::reflections:
      return solve_reflections(system);
    case Backend::first_order:
      return first_order_solution(system);
  }
  return solve_dense(system);
}

}  // namespace mem
