// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "mem/analysis.hpp"
#include "mem/assembly.hpp"
#include "mem/field.hpp"
#include "mem/presets.hpp"
#include "mem/solver.hpp"
#include "mem/specfun.hpp"

using namespace mem;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

// 1 ---------------------------------------------------------------------------
Outcome rate_agreement_far() {
  const auto t0 = Clock::now();
  const ConvergenceReport rep = convergence_sweep(preset_scene(Preset::far, 0.6), range(1, 25));
  const ReportRates r = report_rates(rep);
  const double secs = seconds_since(t0);
  const double dev = std::abs(r.error.slope - r.gamma1.slope);
  const double lim = 0.10 * std::abs(r.gamma1.slope);
  std::ostringstream os;
  os << "N_ref " << rep.n_ref << ", slope E " << r.error.slope << ", slope gamma1 " << r.gamma1.slope
     << ", |diff| " << dev << " (limit " << lim << "), " << secs << " s";
  return {rep.n_ref == 30 && dev <= lim && secs < 10.0, os.str()};
}

// 2 ---------------------------------------------------------------------------
Outcome gamma2_superiority_close() {
  const auto t0 = Clock::now();
  const Scene s = preset_scene(Preset::close, 0.6);
  const BreakdownReport br = breakdown_check(s, pairwise_geometry(s));
  const ConvergenceReport rep = convergence_sweep(s, range(1, 25));
  const ReportRates r = report_rates(rep);
  const double secs = seconds_since(t0);
  const double d2 = std::abs(r.error.slope - r.gamma2.slope);
  const double d1 = std::abs(r.error.slope - r.gamma1.slope);
  std::ostringstream os;
  os << "gap " << br.gap << ", slope E " << r.error.slope << ", |E-gamma2| " << d2 << " vs |E-gamma1| " << d1
     << ", " << secs << " s";
  return {br.gap < 1.25 && d2 < d1 && secs < 10.0, os.str()};
}

// 3 ---------------------------------------------------------------------------
Outcome bound_validity_all() {
  bool ok = true;
  std::ostringstream os;
  for (Preset p : kAllPresets) {
    const ConvergenceReport rep = convergence_sweep(preset_scene(p, 0.6), range(1, 25));
    const BoundCheck b = bound_validity(rep, 0.05);
    ok = ok && b.holds;
    os << preset_name(p) << ": C " << b.constant << ", excess slope " << b.excess_slope << "; ";
  }
  return {ok, os.str()};
}

// 4 ---------------------------------------------------------------------------
Outcome single_cylinder() {
  double worst_solve = 0.0;
  double worst_tail = 0.0;
  for (const IncidentField inc : {IncidentField(PointSource{Point2(4.0, 3.0)}), IncidentField(PlaneWave{0.4})}) {
    Scene s;
    s.wavenumber = 1.3;
    s.cylinders = {{Point2(0.5, -0.25), 1.5}};
    s.incident = inc;
    const std::vector<int> ns = range(1, 15);
    const ConvergenceReport rep = convergence_sweep(s, ns);
    const MemSystem ref = assemble_system(s, rep.n_ref);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const int n = ns[i];
      const MemSystem sys = assemble_system(s, n);
      const SolveResult sol = solve_dense(sys);
      worst_solve = std::max(worst_solve, (sol.solution.values() - ref.rhs.truncated(n).values()).norm());
      double tail = 0.0;
      for (int m = n + 1; m <= rep.n_ref; ++m) tail += std::norm(ref.rhs(0, m)) + std::norm(ref.rhs(0, -m));
      worst_tail = std::max(worst_tail, std::abs(std::sqrt(tail) - rep.error[i]));
    }
  }
  std::ostringstream os;
  os << "max |Phi - G(N)| " << worst_solve << ", max |E - tail| " << worst_tail;
  return {worst_solve < 1e-12 && worst_tail < 1e-12, os.str()};
}

// 5 ---------------------------------------------------------------------------
Outcome assembly_certification() {
  double off = 0.0;
  double diag = 0.0;
  for (double k : {0.6, 3.0}) {
    const Scene s = preset_scene(Preset::moderate, k);
    const PairGeometry g = pairwise_geometry(s);
    for (int p = 0; p < s.size(); ++p)
      for (int q = 0; q < s.size(); ++q) {
        const bool self = p == q;
        const Eigen::MatrixXcd quad =
            single_layer_block_quadrature(s, p, q, 10, 512, self ? SingularRule::kress : SingularRule::refuse);
        const double dev = (v_block(s, g, p, q, 10) - quad).cwiseAbs().maxCoeff();
        (self ? diag : off) = std::max(self ? diag : off, dev);
      }
  }
  std::ostringstream os;
  os << "off-diagonal max deviation " << off << " (limit 1e-8), diagonal " << diag << " (limit 1e-6)";
  return {off < 1e-8 && diag < 1e-6, os.str()};
}

// 6 ---------------------------------------------------------------------------
Outcome backend_agreement() {
  bool ok = true;
  std::ostringstream os;
  for (Preset p : kAllPresets) {
    const MemSystem sys = assemble_system(preset_scene(p, 0.6), 15);
    const SolveResult dense = solve_dense(sys);
    const SolveResult it = solve_gmres(sys, 1e-12);
    const SolveResult refl = solve_reflections(sys, 2000, 1e-12);
    const double scale = dense.solution.values().norm();
    const double d_gmres = (it.solution.values() - dense.solution.values()).norm() / scale;
    double d_refl = 0.0;
    if (refl.converged) d_refl = (refl.solution.values() - dense.solution.values()).norm() / scale;
    ok = ok && it.converged && d_gmres <= 1e-9 && refl.converged && d_refl <= 1e-9;
    os << preset_name(p) << ": gmres " << d_gmres << ", reflections " << d_refl << " (" << refl.iterations
       << " it); ";
  }
  Scene touching;
  touching.wavenumber = 0.3;
  touching.cylinders = {{Point2(0.0, 0.0), 1.0}, {Point2(2.01, 0.0), 1.0}};
  touching.incident = PlaneWave{0.0};
  bool flagged = false;
  try {
    const SolveResult r = solve_reflections(assemble_system(touching, 20), 1000, 1e-12);
    flagged = r.diverged && !r.converged;
    os << "almost-touching: diverged=" << r.diverged << " after " << r.iterations << " it";
  } catch (const std::exception& e) {
    os << "almost-touching threw: " << e.what();
  }
  return {ok && flagged, os.str()};
}

// 7 ---------------------------------------------------------------------------
Outcome sigma_rate() {
  const Scene s = preset_scene(Preset::moderate, 0.6);
  const PairGeometry g = pairwise_geometry(s);
  const int p = 0, q = 1;
  const double ap = s.cylinders[0].radius;
  const double aq = s.cylinders[1].radius;
  const double d = g.distance(p, q);
  const int m = 40;
  const double root = std::pow(sigma_series(s, g, p, q, m, SigmaKernel::standard), 1.0 / (2.0 * m));
  const double ratio = root / (ap / (d - aq));

  const int m2 = 60;
  const double z = (aq / d) * (aq / d);
  const double bound = std::pow(d * d / (d * d - aq * aq), m2) * std::pow((d + aq) / (d - aq), m2);
  const double hyp_ratio = std::pow(hyp2f1_peaked(m2, z) / bound, 1.0 / m2);
  std::ostringstream os;
  os << "sigma root ratio at m=40 " << ratio << ", 2F1 bound ratio at m=60 " << hyp_ratio;
  return {std::abs(ratio - 1.0) <= 0.05 && hyp_ratio <= 1.01, os.str()};
}

// 8 ---------------------------------------------------------------------------
double series_j0(double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= -(x * x / 4.0) / (static_cast<double>(k) * k);
    sum += term;
  }
  return sum;
}

double series_y0(double x) {
  constexpr double euler = 0.57721566490153286061;
  double term = 1.0, harmonic = 0.0, sum = 0.0;
  for (int k = 1; k < 60; ++k) {
    term *= -(x * x / 4.0) / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    sum -= term * harmonic;
  }
  return (2.0 / pi) * ((std::log(x / 2.0) + euler) * series_j0(x) + sum);
}

Outcome special_functions() {
  std::ostringstream os;
  bool ok = true;

  double wr = 0.0;
  for (double x : {0.5, 1.0, 2.0, 10.0, 50.0}) {
    const CylinderTable t(51, x);
    const double target = 2.0 / (pi * x);
    for (int m = 0; m <= 50; ++m) {
      const double w = (t.j(m) * t.y(m + 1)).value() - (t.j(m + 1) * t.y(m)).value();
      wr = std::max(wr, std::abs(w + target) / target);
    }
  }
  ok = ok && wr < 1e-10;
  os << "Wronskian " << wr;

  double rec = 0.0;
  for (double x : {0.5, 2.0, 10.0, 50.0}) {
    const auto h = hankel1_seq(std::max(30, static_cast<int>(x) + 20), x);
    for (std::size_t m = 1; m + 1 < h.size(); ++m) {
      const auto c = h[m - 1] + h[m + 1] - (2.0 * static_cast<double>(m) / x) * h[m];
      rec = std::max(rec, std::abs(c) / std::abs(h[m + 1]));
      const double cj = bessel_j(static_cast<int>(m) - 1, x) + bessel_j(static_cast<int>(m) + 1, x) -
                        (2.0 * static_cast<double>(m) / x) * bessel_j(static_cast<int>(m), x);
      const double scale = std::max({std::abs(bessel_j(static_cast<int>(m) - 1, x)),
                                     std::abs(bessel_j(static_cast<int>(m) + 1, x)),
                                     2.0 * static_cast<double>(m) / x * std::abs(bessel_j(static_cast<int>(m), x))});
      rec = std::max(rec, std::abs(cj) / scale);
    }
  }
  ok = ok && rec < 1e-10;
  os << ", recurrence " << rec;

  bool symmetric = true;
  for (int m = 0; m <= 60; ++m)
    for (double x : {0.3, 2.0, 17.0}) {
      const double sgn = (m % 2) ? -1.0 : 1.0;
      symmetric = symmetric && bessel_j(-m, x) == sgn * bessel_j(m, x) && hankel1(-m, x) == sgn * hankel1(m, x);
    }
  ok = ok && symmetric;
  os << ", negative orders " << (symmetric ? "exact" : "broken");

  double env_spread = 0.0;
  for (double x : {0.5, 2.0, 10.0}) {
    const CylinderTable t(100, x);
    double lj_lo = 1e300, lj_hi = -1e300, lh_lo = 1e300, lh_hi = -1e300;
    for (int m = static_cast<int>(std::ceil(x)) + 5; m <= 100; ++m) {
      const double lm = std::log(static_cast<double>(m));
      const double base = m * std::log(2.0 * m / (std::numbers::e * x));
      const double lj = t.j(m).log2_abs() * std::numbers::ln2 + 0.5 * lm + base;
      const double lh = t.h(m).log2_abs() * std::numbers::ln2 + 0.5 * lm - base;
      lj_lo = std::min(lj_lo, lj);
      lj_hi = std::max(lj_hi, lj);
      lh_lo = std::min(lh_lo, lh);
      lh_hi = std::max(lh_hi, lh);
    }
    env_spread = std::max({env_spread, std::exp(lj_hi - lj_lo), std::exp(lh_hi - lh_lo)});
  }
  ok = ok && env_spread < 100.0;
  os << ", envelope C/c " << env_spread;

  bool mono = true;
  for (double x : {0.5, 2.0, 10.0}) {
    const CylinderTable t(60, x);
    for (int m = 0; m <= 30; ++m)
      for (int n = 0; n <= 30; ++n) mono = mono && t.h(std::abs(m - n)).log2_abs() <= t.h(m + n).log2_abs();
  }
  ok = ok && mono;
  os << ", Hankel monotonicity " << (mono ? "holds" : "violated");

  const double ej = std::abs(bessel_j(0, 1.0) - series_j0(1.0));
  const double ey = std::abs(bessel_y(0, 1.0) - series_y0(1.0));
  ok = ok && ej < 1e-10 && ey < 1e-10;
  os << ", J0(1) dev " << ej << ", Y0(1) dev " << ey;
  return {ok, os.str()};
}

// 9 ---------------------------------------------------------------------------
Outcome field_physics() {
  const Scene s = preset_scene(Preset::far, 0.6);
  std::ostringstream os;

  // The 1e-6 a_p sampling offset leaves a floor near 1e-7; start well above it.
  const double r_lo = boundary_residual(s, solve_dense(assemble_system(s, 2)).solution, 64);
  const double r_hi = boundary_residual(s, solve_dense(assemble_system(s, 12)).solution, 64);
  const double shrink = r_lo / r_hi;
  os << "residual N=2 " << r_lo << ", N=12 " << r_hi << " (x" << shrink << ")";

  const CoefficientVector sol = solve_dense(assemble_system(s, 20)).solution;
  Point2 centroid = Point2::Zero();
  double a_max = 0.0;
  for (const auto& c : s.cylinders) {
    centroid += c.center;
    a_max = std::max(a_max, c.radius);
  }
  centroid /= static_cast<double>(s.size());
  double best = -1.0;
  Point2 dir(1.0, 0.0);
  for (int i = 0; i < 720; ++i) {
    const Point2 e(std::cos(pi * i / 360.0), std::sin(pi * i / 360.0));
    const double v = std::abs(scattered_field(s, sol, centroid + 400.0 * a_max * e));
    if (v > best) {
      best = v;
      dir = e;
    }
  }
  double lo = 1e300, hi = 0.0;
  for (int i = 0; i <= 30; ++i) {
    const double r = a_max * (100.0 + 300.0 * i / 30.0);
    const double v = std::abs(scattered_field(s, sol, centroid + r * dir)) * std::sqrt(r);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  // Best constant is the midpoint; every sample lies within `spread` of it.
  const double spread = (hi - lo) / (hi + lo);
  os << ", far-field |u|sqrt(r) within " << spread << " of a constant (max/min - 1 = " << (hi - lo) / lo << ")";

  double oracle = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double ang = 2.0 * pi * i / 20.0;
    const double rad = 8.0 + 1.5 * i;
    const Point2 x = Point2(5.0, 5.0) + rad * Point2(std::cos(ang), std::sin(ang));
    if (is_inside(s, x)) continue;
    oracle = std::max(oracle, std::abs(scattered_field(s, sol, x) - single_layer_field_quadrature(s, sol, x, 512)));
  }
  os << ", multipole vs quadrature " << oracle;
  return {shrink >= 100.0 && spread <= 0.01 && oracle <= 1e-8, os.str()};
}

// 10 --------------------------------------------------------------------------
int onset(const ConvergenceReport& rep) {
  const double e0 = rep.error.front();
  for (std::size_t i = 0; i < rep.n_values.size(); ++i)
    if (rep.error[i] < e0 / 10.0) return rep.n_values[i];
  return -1;
}

Outcome k_dependence() {
  const std::vector<int> ns = range(0, 25);
  const int low = onset(convergence_sweep(preset_scene(Preset::moderate, 0.6), ns));
  const int high = onset(convergence_sweep(preset_scene(Preset::moderate, 3.0), ns));
  std::ostringstream os;
  os << "onset N at k=0.6: " << low << ", at k=3: " << high;
  return {low >= 0 && high > low, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"rate agreement, far preset", rate_agreement_far},
      {"gamma2 tracks E better, close preset", gamma2_superiority_close},
      {"gamma1 bound validity, all presets", bound_validity_all},
      {"single-cylinder exactness", single_cylinder},
      {"assembly vs quadrature oracle", assembly_certification},
      {"cross-backend agreement and divergence flag", backend_agreement},
      {"sigma-series rate and 2F1 bound", sigma_rate},
      {"special-function identities", special_functions},
      {"field physics", field_physics},
      {"k-dependence of the onset N", k_dependence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " | "
              << out.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
