#include "mem/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mem/assembly.hpp"
#include "mem/parallel.hpp"

namespace mem {
namespace {

double radius(const Scene& scene, int p) { return scene.cylinders[static_cast<std::size_t>(p)].radius; }

template <typename PairTerm>
GammaBase envelope_base(const Scene& scene, const PairGeometry& geom, PairTerm pair_term) {
  GammaBase best;
  if (scene.has_point_source()) {
    for (int p = 0; p < scene.size(); ++p) {
      const double v = radius(scene, p) / geom.source_distance(p);
      if (v > best.value) best = {v, p, -1};
    }
  }
  for (int p = 0; p < scene.size(); ++p)
    for (int q = 0; q < scene.size(); ++q) {
      if (p == q) continue;
      const double v = pair_term(p, q);
      if (v > best.value) best = {v, p, q};
    }
  return best;
}

double power(double base, int n) { return n == 0 ? 1.0 : std::pow(base, n); }

std::vector<int> checked_list(const std::vector<int>& n_list) {
  if (n_list.empty()) throw DimensionError("sweep needs at least one N");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 0) throw DimensionError("sweep N values must be non-negative");
    if (i && n_list[i] <= n_list[i - 1]) throw DimensionError("sweep N values must be ascending");
  }
  return n_list;
}

ConvergenceReport sweep_impl(const Scene& scene, const std::vector<int>& n_list, SequenceNorm norm,
                             bool with_surrogate) {
  require_valid(scene);
  const std::vector<int> ns = checked_list(n_list);
  const int n_max = ns.back();
  const SolveResult ref = reference_solution(scene, n_max);
  const PairGeometry geom = pairwise_geometry(scene);

  ConvergenceReport rep;
  rep.scene_id = scene.name;
  rep.norm = norm;
  rep.n_ref = n_max + 5;
  rep.n_values = ns;
  rep.error.assign(ns.size(), 0.0);
  rep.gamma1.resize(ns.size());
  rep.gamma2.resize(ns.size());

  MemSystem ref_system;
  Eigen::VectorXcd ag_ref;
  if (with_surrogate) {
    rep.e1_surrogate.assign(ns.size(), 0.0);
    ref_system = assemble_system(scene, rep.n_ref);
    ag_ref = ref_system.op.apply_coupling(ref_system.rhs.values());
  }

  parallel_for(static_cast<int>(ns.size()), [&](int i) {
    const int n = ns[static_cast<std::size_t>(i)];
    const MemSystem sys = assemble_system(scene, n);
    const SolveResult sol = solve_dense(sys);
    rep.error[static_cast<std::size_t>(i)] = approximation_error(ref.solution, sol.solution, norm);
    if (with_surrogate) {
      const CoefficientVector& g_ref = ref_system.rhs;
      const double tail = approximation_error(g_ref, g_ref.truncated(n), norm);
      const CoefficientVector g_n = g_ref.truncated(n);
      const CoefficientVector ag_n(sys.cylinders(), n, sys.op.apply_coupling(g_n.values()));
      const CoefficientVector ag_full(sys.cylinders(), rep.n_ref, ag_ref);
      rep.e1_surrogate[static_cast<std::size_t>(i)] = tail + approximation_error(ag_full, ag_n, norm);
    }
  });

  const GammaBase b1 = gamma1_base(scene, geom);
  const GammaBase b2 = gamma2_base(scene, geom);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    rep.gamma1[i] = power(b1.value, ns[i]);
    rep.gamma2[i] = power(b2.value, ns[i]);
  }
  return rep;
}

}  // namespace

GammaBase gamma1_base(const Scene& scene, const PairGeometry& geom) {
  return envelope_base(scene, geom, [&](int p, int q) {
    return radius(scene, p) / (geom.distance(p, q) - radius(scene, q));
  });
}

GammaBase gamma2_base(const Scene& scene, const PairGeometry& geom) {
  if (!scene.has_point_source())
    return envelope_base(scene, geom, [&](int p, int q) { return radius(scene, p) / geom.distance(p, q); });
  return envelope_base(scene, geom, [&](int p, int q) {
    const double aq = radius(scene, q);
    const double dq = geom.source_distance(q);
    return radius(scene, p) * dq / (geom.distance(p, q) * dq - aq * aq);
  });
}

double gamma1(const Scene& scene, const PairGeometry& geom, int n) {
  return power(gamma1_base(scene, geom).value, n);
}

double gamma2(const Scene& scene, const PairGeometry& geom, int n) {
  return power(gamma2_base(scene, geom).value, n);
}

SolveResult reference_solution(const Scene& scene, int n_max) {
  if (n_max < 0) throw DimensionError("reference needs N_max >= 0");
  return solve_dense(assemble_system(scene, n_max + 5));
}

double approximation_error(const CoefficientVector& reference, const CoefficientVector& candidate,
                           SequenceNorm norm) {
  if (reference.cylinders() != candidate.cylinders())
    throw DimensionError("approximation_error: cylinder counts differ");
  if (candidate.truncation() > reference.truncation())
    throw DimensionError("approximation_error: candidate truncation exceeds the reference");
  const CoefficientVector padded = candidate.padded(reference.truncation());
  const CoefficientVector diff(reference.cylinders(), reference.truncation(),
                               reference.values() - padded.values());
  return diff.norm(norm);
}

ConvergenceReport convergence_sweep(const Scene& scene, const std::vector<int>& n_list,
                                    SequenceNorm norm) {
  return sweep_impl(scene, n_list, norm, false);
}

ConvergenceReport first_order_error_sweep(const Scene& scene, const std::vector<int>& n_list,
                                          SequenceNorm norm) {
  return sweep_impl(scene, n_list, norm, true);
}

ReportRates report_rates(const ConvergenceReport& report) {
  const std::span<const int> n(report.n_values);
  ReportRates r;
  r.error = fit_rate<double>(n, report.error, kFitTailFraction, kFitFloor, kFitCeiling);
  r.gamma1 = fit_rate<double>(n, report.gamma1, 1.0, 0.0);
  r.gamma2 = fit_rate<double>(n, report.gamma2, 1.0, 0.0);
  return r;
}

BoundCheck bound_validity(const ConvergenceReport& report, double slack) {
  const RateFit tail =
      fit_rate<double>(std::span<const int>(report.n_values), report.error, kFitTailFraction, kFitFloor,
                       kFitCeiling);
  BoundCheck out;
  out.constant = -std::numeric_limits<double>::infinity();
  std::vector<int> n;
  std::vector<double> ratio;
  for (std::size_t i : tail.indices) {
    const double excess = std::log(report.error[i]) - std::log(report.gamma1[i]);
    out.constant = std::max(out.constant, excess - slack * report.n_values[i]);
    n.push_back(report.n_values[i]);
    ratio.push_back(report.error[i] / report.gamma1[i]);
  }
  out.excess_slope =
      fit_rate<double>(std::span<const int>(n), std::span<const double>(ratio), 1.0, 0.0).slope;
  out.holds = std::isfinite(out.constant) && out.excess_slope <= slack;
  return out;
}

double sigma_series(const Scene& scene, const PairGeometry& geom, int p, int q, int m, SigmaKernel kind,
                    int n_max) {
  if (p == q) throw DomainError("sigma_series needs p != q");
  if (m < 1) throw DomainError("sigma_series needs m >= 1");
  if (n_max < 1) throw DomainError("sigma_series needs n_max >= 1");
  const double d = geom.distance(p, q);
  const double ap = radius(scene, p);
  const double aq = radius(scene, q);

  double log_q_base = 0.0;  // log of the base raised to 2n
  switch (kind) {
    case SigmaKernel::standard:
      log_q_base = std::log(aq / d);
      break;
    case SigmaKernel::point_source:
      if (!scene.has_point_source()) throw DomainError("point-source sigma kernel needs a point source");
      log_q_base = std::log(aq * aq / (d * geom.source_distance(q)));
      break;
    case SigmaKernel::plane_wave:
      log_q_base = std::log(std::numbers::e * scene.wavenumber * aq * aq / (2.0 * d));
      break;
  }
  const double mm = m;
  auto log_term = [&](int n) {
    const double nn = n;
    double v = 2.0 * mm * std::log((mm + nn) / mm) + 2.0 * nn * std::log((mm + nn) / nn) +
               2.0 * mm * std::log(ap / d) + 2.0 * nn * log_q_base;
    if (kind == SigmaKernel::plane_wave) v -= 2.0 * nn * std::log(nn);
    return v;
  };

  // Sum in a scaled frame anchored at the largest term seen so far.
  double anchor = log_term(1);
  double scaled = 1.0;
  double previous = anchor;
  for (int n = 2; n <= n_max; ++n) {
    const double lt = log_term(n);
    if (lt > anchor) {
      scaled = scaled * std::exp(anchor - lt) + 1.0;
      anchor = lt;
    } else {
      scaled += std::exp(lt - anchor);
    }
    const bool decreasing = lt < previous;
    previous = lt;
    if (decreasing && std::exp(lt - anchor) < kSigmaRelativeCutoff * scaled) return scaled * std::exp(anchor);
    if (n == n_max && !decreasing)
      throw DomainError("sigma_series: terms still growing at n_max (a_q too close to d_pq)");
  }
  return scaled * std::exp(anchor);
}

BreakdownReport breakdown_check(const Scene& scene, const PairGeometry& geom) {
  if (scene.size() < 2) throw DomainError("breakdown_check needs at least two cylinders");
  std::vector<int> order(static_cast<std::size_t>(scene.size()));
  for (int p = 0; p < scene.size(); ++p) order[static_cast<std::size_t>(p)] = p;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return radius(scene, a) > radius(scene, b); });
  BreakdownReport r;
  r.largest = order[0];
  r.mid = order[1];
  r.gap = geom.distance(r.largest, r.mid) - radius(scene, r.largest) - radius(scene, r.mid);
  r.threshold = 1.25 * radius(scene, r.mid);
  r.classification = r.gap > r.threshold ? Breakdown::first_order_valid : Breakdown::first_order_suspect;
  return r;
}

}  // namespace mem
