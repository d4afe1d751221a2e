#include "mem/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mem/errors.hpp"

namespace mem {
namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
// Below this argument Miller's step factor 2n/x gets uncomfortably large; the
// ascending series converges in three terms there anyway.
constexpr double kSeriesThreshold = 1e-5;
constexpr int kRescaleBits = 600;
const double kRescaleLimit = std::ldexp(1.0, kRescaleBits);

void check_order(int m) {
  if (m > kMaxOrder || m < -kMaxOrder)
    throw CapabilityError("Bessel order " + std::to_string(m) + " exceeds the cap of " +
                          std::to_string(kMaxOrder));
}

void check_argument(double x, bool allow_zero) {
  if (std::isnan(x)) throw DomainError("Bessel argument is NaN");
  if (x < 0.0 || (!allow_zero && x == 0.0))
    throw DomainError("Bessel argument must be " + std::string(allow_zero ? ">= 0" : "> 0") +
                      ", got " + std::to_string(x));
  if (x > kMaxArgument)
    throw CapabilityError("Bessel argument " + std::to_string(x) + " exceeds the cap of " +
                          std::to_string(kMaxArgument));
}

int miller_start(int max_order, double x) {
  const double base = std::max(static_cast<double>(max_order), std::ceil(x));
  int start = static_cast<int>(base) + 30 + static_cast<int>(std::ceil(8.0 * std::cbrt(std::max(x, 1.0))));
  return start + (start % 2);
}

template <typename T>
T parity_sign(int m, const T& v) {
  return (m % 2 == 0) ? v : -v;
}

}  // namespace

CylinderTable::CylinderTable(int max_order, double x, bool with_y)
    : max_order_(max_order), x_(x) {
  if (max_order < 0) throw DomainError("max_order must be non-negative");
  check_order(max_order);
  check_argument(x, !with_y);
  compute_j();
  if (with_y) compute_y();
}

void CylinderTable::compute_j() {
  if (x_ == 0.0) {
    j_.assign(static_cast<std::size_t>(max_order_) + 1, ExtendedReal());
    j_[0] = ExtendedReal(1.0);
    return;
  }

  if (x_ < kSeriesThreshold) {
    const int top = std::max(max_order_, 20);
    j_.resize(static_cast<std::size_t>(top) + 1);
    const double half = 0.5 * x_;
    const double q = half * half;
    ExtendedReal lead(1.0);  // (x/2)^m / m!
    for (int m = 0; m <= top; ++m) {
      if (m > 0) lead = lead * ExtendedReal(half / m);
      double corr = 1.0;
      double term = 1.0;
      for (int k = 1; k <= 3; ++k) {
        term *= -q / (static_cast<double>(k) * (m + k));
        corr += term;
      }
      j_[static_cast<std::size_t>(m)] = lead * ExtendedReal(corr);
    }
    return;
  }

  const int top = miller_start(max_order_, x_);
  j_.resize(static_cast<std::size_t>(top) + 1);
  double next = 0.0;  // J_{n+1}, unnormalised
  double cur = 1.0;   // J_n
  double sum = 0.0;   // J_0 + 2 sum J_2k in the running scale
  long scale = 0;
  for (int n = top; n >= 0; --n) {
    j_[static_cast<std::size_t>(n)] = ExtendedReal(cur, scale);
    if (n % 2 == 0) sum += (n == 0 ? cur : 2.0 * cur);
    if (n == 0) break;
    const double prev = (2.0 * n / x_) * cur - next;
    next = cur;
    cur = prev;
    if (std::abs(cur) > kRescaleLimit) {
      cur = std::ldexp(cur, -kRescaleBits);
      next = std::ldexp(next, -kRescaleBits);
      sum = std::ldexp(sum, -kRescaleBits);
      scale += kRescaleBits;
    }
  }
  const ExtendedReal norm(sum, scale);
  for (auto& v : j_) v = v / norm;
}

void CylinderTable::compute_y() {
  const auto jv = [this](std::size_t n) { return n < j_.size() ? j_[n].value() : 0.0; };
  const double log_half = std::log(0.5 * x_);
  const std::size_t top = j_.size() - 1;

  double s0 = 0.0;
  for (std::size_t k = 1; 2 * k <= top; ++k) {
    const double t = jv(2 * k) / static_cast<double>(k);
    s0 += (k % 2 == 0) ? t : -t;
  }
  double s1 = 0.0;
  for (std::size_t k = 1; 2 * k + 1 <= top; ++k) {
    const double t = static_cast<double>(2 * k + 1) * jv(2 * k + 1) /
                     (static_cast<double>(k) * static_cast<double>(k + 1));
    s1 += (k % 2 == 0) ? t : -t;
  }
  using std::numbers::pi;
  const double y0 = (2.0 / pi) * (log_half + kEulerGamma) * jv(0) - (4.0 / pi) * s0;
  const double y1 = -2.0 / (pi * x_) * jv(0) +
                    (2.0 / pi) * (log_half - 1.0 + kEulerGamma) * jv(1) - (2.0 / pi) * s1;

  y_.resize(static_cast<std::size_t>(max_order_) + 1);
  y_[0] = ExtendedReal(y0);
  if (max_order_ == 0) return;
  y_[1] = ExtendedReal(y1);

  double prev = y0;
  double cur = y1;
  long scale = 0;
  for (int m = 1; m < max_order_; ++m) {
    const double nxt = (2.0 * m / x_) * cur - prev;
    prev = cur;
    cur = nxt;
    if (std::abs(cur) > kRescaleLimit) {
      cur = std::ldexp(cur, -kRescaleBits);
      prev = std::ldexp(prev, -kRescaleBits);
      scale += kRescaleBits;
    }
    y_[static_cast<std::size_t>(m) + 1] = ExtendedReal(cur, scale);
  }
}

std::size_t CylinderTable::slot(int m) const {
  const int a = m < 0 ? -m : m;
  if (a > max_order_)
    throw CapabilityError("order " + std::to_string(m) + " outside table of max order " +
                          std::to_string(max_order_));
  return static_cast<std::size_t>(a);
}

ExtendedReal CylinderTable::j(int m) const {
  const auto& v = j_[slot(m)];
  return m < 0 ? parity_sign(m, v) : v;
}

ExtendedReal CylinderTable::y(int m) const {
  if (y_.empty()) throw DomainError("table was built without Y values");
  const auto& v = y_[slot(m)];
  return m < 0 ? parity_sign(m, v) : v;
}

ExtendedComplex CylinderTable::h(int m) const { return make_complex(j(m), y(m)); }

double bessel_j(int m, double x) {
  check_order(m);
  check_argument(x, true);
  return CylinderTable(m < 0 ? -m : m, x, false).j(m).value();
}

double bessel_y(int m, double x) {
  check_order(m);
  check_argument(x, false);
  return CylinderTable(m < 0 ? -m : m, x).y(m).value();
}

std::complex<double> hankel1(int m, double x) {
  check_order(m);
  check_argument(x, false);
  return CylinderTable(m < 0 ? -m : m, x).h(m).value();
}

std::vector<std::complex<double>> hankel1_seq(int m_max, double x) {
  if (m_max < 0) throw DomainError("m_max must be non-negative");
  const CylinderTable table(m_max, x);
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) out.push_back(table.h(m).value());
  return out;
}

CylFunTriple cylinder_functions(int m, double x) {
  const CylinderTable table(m < 0 ? -m : m, x);
  CylFunTriple t;
  t.order = m;
  t.argument = x;
  t.j = table.j(m).value();
  t.y = table.y(m).value();
  t.h = {t.j, t.y};
  return t;
}

double hyp2f1_peaked(int m, double z) {
  if (m < 0) throw DomainError("hyp2f1_peaked needs m >= 0");
  if (!(z >= 0.0 && z < 1.0)) throw DomainError("hyp2f1_peaked needs z in [0, 1)");
  const double w = z / (z - 1.0);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < m; ++n) {
    term *= static_cast<double>(m + 1 + n) * static_cast<double>(n - m) /
            (static_cast<double>(n + 1) * static_cast<double>(n + 1)) * w;
    sum += term;
  }
  const double log_value = -(m + 1.0) * std::log1p(-z) + std::log(sum);
  if (!std::isfinite(sum) || log_value > std::log(std::numeric_limits<double>::max()))
    throw OverflowError("2F1(m+1, m+1; 1; z) exceeds double range");
  return std::exp(log_value);
}

double hyp0f3_ones(double x) {
  if (!(x >= 0.0)) throw DomainError("hyp0f3_ones needs x >= 0");
  const double peak = std::pow(x, 0.25);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 100000; ++n) {
    const double dn = n;
    term *= x / (dn * dn * dn * dn);
    sum += term;
    if (!std::isfinite(sum)) throw OverflowError("0F3(;1,1,1;x) exceeds double range");
    if (dn > peak && term < 1e-16 * sum) break;
  }
  return sum;
}

}  // namespace mem
