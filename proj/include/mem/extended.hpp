#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <type_traits>

#include "mem/errors.hpp"

namespace mem {

namespace detail {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

inline double magnitude_bound(double v) { return std::abs(v); }
inline double magnitude_bound(const std::complex<double>& v) {
  return std::max(std::abs(v.real()), std::abs(v.imag()));
}

}  // namespace detail

/// A value stored as mantissa * 2^exponent with |mantissa| in [0.5, 1).
///
/// Cylinder functions of large order over- or underflow long before the
/// ratios the assembly needs do; carrying the binary exponent separately lets
/// H_m(kd) / H_m(ka) be formed exactly and only converted at the end.
template <typename Scalar>
class Extended {
 public:
  Extended() = default;

  explicit Extended(Scalar mantissa, long exponent = 0)
      : mantissa_(mantissa), exponent_(exponent) {
    normalize();
  }

  const Scalar& mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }
  bool is_zero() const { return mantissa_ == Scalar(0); }

  /// log2 of the magnitude; -inf for zero.
  double log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log2(std::abs(mantissa_)) + static_cast<double>(exponent_);
  }

  /// Converts to a plain scalar. Values below the double range flush to zero;
  /// values above it throw.
  Scalar value() const {
    if (is_zero()) return Scalar(0);
    if (exponent_ > std::numeric_limits<double>::max_exponent)
      throw OverflowError("extended value exceeds double range (2^" +
                          std::to_string(exponent_) + ")");
    if (exponent_ < std::numeric_limits<double>::min_exponent - 60)
      return Scalar(0);
    return scale(mantissa_, static_cast<int>(exponent_));
  }

  Extended operator-() const { return Extended(-mantissa_, exponent_); }

  template <typename Other>
  auto operator*(const Extended<Other>& rhs) const {
    using R = decltype(Scalar{} * Other{});
    return Extended<R>(R(mantissa_) * R(rhs.mantissa()), exponent_ + rhs.exponent());
  }

  template <typename Other>
  auto operator/(const Extended<Other>& rhs) const {
    using R = decltype(Scalar{} / Other{});
    if (rhs.is_zero()) throw DomainError("division by an extended zero");
    return Extended<R>(R(mantissa_) / R(rhs.mantissa()), exponent_ - rhs.exponent());
  }

  Extended operator*(const Scalar& s) const { return Extended(mantissa_ * s, exponent_); }

 private:
  static Scalar scale(const Scalar& v, int e) {
    if constexpr (detail::is_complex<Scalar>::value) {
      return Scalar(std::ldexp(v.real(), e), std::ldexp(v.imag(), e));
    } else {
      return std::ldexp(v, e);
    }
  }

  void normalize() {
    const double mag = detail::magnitude_bound(mantissa_);
    if (mag == 0.0) {
      mantissa_ = Scalar(0);
      exponent_ = 0;
      return;
    }
    if (!std::isfinite(mag)) throw OverflowError("non-finite extended mantissa");
    int e = 0;
    std::frexp(mag, &e);
    mantissa_ = scale(mantissa_, -e);
    exponent_ += e;
  }

  Scalar mantissa_{0};
  long exponent_ = 0;
};

using ExtendedReal = Extended<double>;
using ExtendedComplex = Extended<std::complex<double>>;

/// re + i*im on a common exponent; the smaller part may flush to zero.
inline ExtendedComplex make_complex(const ExtendedReal& re, const ExtendedReal& im) {
  if (re.is_zero()) return ExtendedComplex({0.0, im.mantissa()}, im.exponent());
  if (im.is_zero()) return ExtendedComplex({re.mantissa(), 0.0}, re.exponent());
  const long e = std::max(re.exponent(), im.exponent());
  const auto shift = [e](const ExtendedReal& v) {
    const long d = v.exponent() - e;
    return d < -1100 ? 0.0 : std::ldexp(v.mantissa(), static_cast<int>(d));
  };
  return ExtendedComplex({shift(re), shift(im)}, e);
}

}  // namespace mem
