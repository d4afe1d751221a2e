#include "mem/coefficients.hpp"

#include <cmath>
#include <string>

#include "mem/errors.hpp"

namespace mem {

CoefficientVector::CoefficientVector(int cylinders, int truncation)
    : cylinders_(cylinders),
      truncation_(truncation),
      values_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(cylinders) * (2 * truncation + 1))) {
  if (cylinders < 0 || truncation < 0)
    throw DimensionError("coefficient vector needs M >= 0 and N >= 0");
}

CoefficientVector::CoefficientVector(int cylinders, int truncation, Eigen::VectorXcd values)
    : cylinders_(cylinders), truncation_(truncation), values_(std::move(values)) {
  if (cylinders < 0 || truncation < 0)
    throw DimensionError("coefficient vector needs M >= 0 and N >= 0");
  if (values_.size() != static_cast<Eigen::Index>(cylinders) * (2 * truncation + 1))
    throw DimensionError("coefficient storage has " + std::to_string(values_.size()) +
                         " entries, expected M(2N+1)");
}

CoefficientVector CoefficientVector::padded(int n) const {
  if (n < truncation_) throw DimensionError("padded() needs n >= N");
  CoefficientVector out(cylinders_, n);
  for (int p = 0; p < cylinders_; ++p)
    out.segment(p).segment(n - truncation_, modes()) = segment(p);
  return out;
}

CoefficientVector CoefficientVector::truncated(int n) const {
  if (n > truncation_ || n < 0) throw DimensionError("truncated() needs 0 <= n <= N");
  CoefficientVector out(cylinders_, n);
  for (int p = 0; p < cylinders_; ++p)
    out.segment(p) = segment(p).segment(truncation_ - n, 2 * n + 1);
  return out;
}

double CoefficientVector::norm(SequenceNorm kind) const {
  if (kind == SequenceNorm::l0) return values_.norm();
  double acc = 0.0;
  for (int p = 0; p < cylinders_; ++p)
    for (int m = -truncation_; m <= truncation_; ++m)
      acc += std::norm((*this)(p, m)) / std::sqrt(1.0 + static_cast<double>(m) * m);
  return std::sqrt(acc);
}

}  // namespace mem
