#pragma once

#include <Eigen/Core>
#include <complex>

namespace mem {

using Complex = std::complex<double>;

/// Sequence norms on doubly indexed coefficients: l0 is the plain l2 sum,
/// l_minus_half weights entry (p, m) by (1 + m^2)^(-1/2).
enum class SequenceNorm { l0, l_minus_half };

/// Per-cylinder coefficients for modes m in [-N, N], stored cylinder-major:
/// entry (p, m) lives at p * (2N + 1) + (m + N).
class CoefficientVector {
 public:
  CoefficientVector() = default;
  CoefficientVector(int cylinders, int truncation);
  CoefficientVector(int cylinders, int truncation, Eigen::VectorXcd values);

  int cylinders() const { return cylinders_; }
  int truncation() const { return truncation_; }
  int modes() const { return 2 * truncation_ + 1; }
  Eigen::Index size() const { return values_.size(); }

  Eigen::Index index(int p, int m) const {
    return static_cast<Eigen::Index>(p) * modes() + (m + truncation_);
  }

  Complex& operator()(int p, int m) { return values_(index(p, m)); }
  const Complex& operator()(int p, int m) const { return values_(index(p, m)); }

  auto segment(int p) { return values_.segment(static_cast<Eigen::Index>(p) * modes(), modes()); }
  auto segment(int p) const {
    return values_.segment(static_cast<Eigen::Index>(p) * modes(), modes());
  }

  const Eigen::VectorXcd& values() const { return values_; }
  Eigen::VectorXcd& values() { return values_; }

  /// Embeds into truncation n >= N, inserting exact zeros for new modes.
  CoefficientVector padded(int n) const;
  /// Keeps modes [-n, n], n <= N.
  CoefficientVector truncated(int n) const;

  double norm(SequenceNorm kind = SequenceNorm::l0) const;

 private:
  int cylinders_ = 0;
  int truncation_ = 0;
  Eigen::VectorXcd values_;
};

}  // namespace mem
