#pragma once

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <vector>

namespace mem {

template <typename Scalar>
struct GmresOutcome {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
};

namespace detail {

template <typename Scalar>
void givens(const Scalar& a, const Scalar& b, double& c, Scalar& s) {
  const double na = std::abs(a);
  const double nb = std::abs(b);
  if (nb == 0.0) {
    c = 1.0;
    s = Scalar(0);
  } else if (na == 0.0) {
    c = 0.0;
    s = Scalar(1);
  } else {
    const double r = std::hypot(na, nb);
    c = na / r;
    s = (a / na) * std::conj(b) / r;
  }
}

}  // namespace detail

/// Restarted GMRES with modified Gram-Schmidt and Givens rotations.
/// `apply(v)` returns A v. Stops when the recurrence residual drops to
/// tol * |b|; the caller recomputes the true residual.
template <typename Scalar, typename Apply>
GmresOutcome<Scalar> gmres(Apply&& apply, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b,
                           double tol, int restart, int max_iterations) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  GmresOutcome<Scalar> out;
  const Eigen::Index n = b.size();
  out.x = Vec::Zero(n);
  const double bnorm = b.norm();
  if (bnorm == 0.0) {
    out.converged = true;
    return out;
  }
  restart = std::max(1, std::min<int>(restart, static_cast<int>(n)));

  Vec r = b;
  double rnorm = bnorm;
  while (out.iterations < max_iterations) {
    Mat basis(n, restart + 1);
    Mat hess = Mat::Zero(restart + 1, restart);
    std::vector<double> cs(static_cast<std::size_t>(restart));
    std::vector<Scalar> sn(static_cast<std::size_t>(restart));
    Vec e = Vec::Zero(restart + 1);
    e(0) = Scalar(rnorm);
    basis.col(0) = r / rnorm;

    int j = 0;
    for (; j < restart && out.iterations < max_iterations; ++j) {
      ++out.iterations;
      Vec w = apply(Vec(basis.col(j)));
      for (int i = 0; i <= j; ++i) {
        hess(i, j) = basis.col(i).dot(w);
        w -= hess(i, j) * basis.col(i);
      }
      const double h_next = w.norm();
      hess(j + 1, j) = Scalar(h_next);
      if (h_next > 0.0) basis.col(j + 1) = w / h_next;

      for (int i = 0; i < j; ++i) {
        const Scalar t = cs[i] * hess(i, j) + sn[i] * hess(i + 1, j);
        hess(i + 1, j) = -std::conj(sn[i]) * hess(i, j) + cs[i] * hess(i + 1, j);
        hess(i, j) = t;
      }
      detail::givens(hess(j, j), hess(j + 1, j), cs[j], sn[j]);
      hess(j, j) = cs[j] * hess(j, j) + sn[j] * hess(j + 1, j);
      hess(j + 1, j) = Scalar(0);
      e(j + 1) = -std::conj(sn[j]) * e(j);
      e(j) = cs[j] * e(j);

      out.relative_residual = std::abs(e(j + 1)) / bnorm;
      if (out.relative_residual <= tol || h_next == 0.0) {
        ++j;
        break;
      }
    }

    const Vec y = hess.topLeftCorner(j, j).template triangularView<Eigen::Upper>().solve(e.head(j));
    out.x += basis.leftCols(j) * y;
    r = b - apply(out.x);
    rnorm = r.norm();
    out.relative_residual = rnorm / bnorm;
    if (out.relative_residual <= tol) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

}  // namespace mem
