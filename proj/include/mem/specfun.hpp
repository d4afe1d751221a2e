#pragma once

#include <complex>
#include <vector>

#include "mem/extended.hpp"

/// Real-argument, integer-order Bessel and Hankel functions plus the two
/// hypergeometric evaluators used by the convergence diagnostics.
///
/// All functions are pure. Orders are capped at |m| <= kMaxOrder and arguments
/// at x <= kMaxArgument; requests beyond throw CapabilityError.
namespace mem {

inline constexpr int kMaxOrder = 200;
inline constexpr double kMaxArgument = 1000.0;

struct CylFunTriple {
  int order = 0;
  double argument = 0.0;
  double j = 0.0;
  double y = 0.0;
  std::complex<double> h;  // j + i*y
};

/// J_m, Y_m and H_m = J_m + i Y_m for orders 0..max_order at one argument,
/// computed in a single pass and kept in extended range.
///
/// J comes from Miller's downward recurrence normalised by
/// J_0 + 2 sum J_2k = 1. Y_0 and Y_1 come from Neumann series over those J
/// values, higher orders from upward recurrence (stable for Y).
class CylinderTable {
 public:
  /// x == 0 is accepted only when with_y is false.
  CylinderTable(int max_order, double x, bool with_y = true);

  int max_order() const { return max_order_; }
  double argument() const { return x_; }
  bool has_y() const { return !y_.empty(); }

  /// Negative orders use J_{-m} = (-1)^m J_m and likewise for Y, H.
  ExtendedReal j(int m) const;
  ExtendedReal y(int m) const;
  ExtendedComplex h(int m) const;

 private:
  void compute_j();
  void compute_y();
  std::size_t slot(int m) const;

  int max_order_;
  double x_;
  std::vector<ExtendedReal> j_;  // orders 0..max(max_order, start order)
  std::vector<ExtendedReal> y_;  // orders 0..max_order
};

double bessel_j(int m, double x);
double bessel_y(int m, double x);
std::complex<double> hankel1(int m, double x);

/// H_0(x) .. H_{m_max}(x). Throws OverflowError when H_{m_max}(x) leaves the
/// double range (m_max well above x); callers needing larger orders should
/// work with CylinderTable and ratios.
std::vector<std::complex<double>> hankel1_seq(int m_max, double x);

CylFunTriple cylinder_functions(int m, double x);

/// 2F1(m+1, m+1; 1; z) through the terminating form
/// (1-z)^-(m+1) 2F1(m+1, -m; 1; z/(z-1)); every term of the finite sum is
/// positive, so there is no cancellation.
double hyp2f1_peaked(int m, double z);

/// 0F3(; 1, 1, 1; x) = sum x^n / (n!)^4.
double hyp0f3_ones(double x);

}  // namespace mem
