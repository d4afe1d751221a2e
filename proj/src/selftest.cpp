#include "mem/selftest.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>

#include "mem/assembly.hpp"
#include "mem/field.hpp"
#include "mem/presets.hpp"
#include "mem/solver.hpp"
#include "mem/specfun.hpp"

namespace mem {
namespace {

struct Check {
  std::string name;
  std::function<double()> measure;  // returns the deviation
  double tolerance;
};

double assembly_deviation() {
  double worst = 0.0;
  for (double k : {0.6, 3.0}) {
    const Scene s = preset_scene(Preset::moderate, k);
    const PairGeometry g = pairwise_geometry(s);
    for (int p = 0; p < s.size(); ++p)
      for (int q = 0; q < s.size(); ++q) {
        const auto rule = p == q ? SingularRule::kress : SingularRule::refuse;
        const Eigen::MatrixXcd diff = v_block(s, g, p, q, 6) - single_layer_block_quadrature(s, p, q, 6, 256, rule);
        worst = std::max(worst, diff.cwiseAbs().maxCoeff());
      }
  }
  return worst;
}

double incident_deviation() {
  double worst = 0.0;
  Scene s = preset_scene(Preset::moderate, 3.0);
  for (int kind = 0; kind < 2; ++kind) {
    if (kind == 1) s.incident = PlaneWave{0.7};
    const PairGeometry g = pairwise_geometry(s);
    for (int p = 0; p < s.size(); ++p)
      worst = std::max(worst, (incident_coeffs(s, g, p, 6) - incident_trace_quadrature(s, p, 6, 256))
                                  .cwiseAbs()
                                  .maxCoeff());
  }
  return worst;
}

double backend_deviation() {
  const MemSystem sys = assemble_system(preset_scene(Preset::far), 12);
  const auto dense = solve_dense(sys);
  const auto it = solve_gmres(sys, 1e-12);
  const auto refl = solve_reflections(sys, 500, 1e-13);
  const double scale = dense.solution.values().norm();
  double worst = (it.solution.values() - dense.solution.values()).norm() / scale;
  if (!refl.converged) return std::numeric_limits<double>::infinity();
  return std::max(worst, (refl.solution.values() - dense.solution.values()).norm() / scale);
}

double wronskian_deviation() {
  double worst = 0.0;
  for (double x : {0.5, 1.0, 2.0, 10.0, 50.0}) {
    const CylinderTable t(51, x);
    const double target = 2.0 / (std::numbers::pi * x);
    for (int m = 0; m <= 50; ++m) {
      const double w = (t.j(m) * t.y(m + 1)).value() - (t.j(m + 1) * t.y(m)).value();
      worst = std::max(worst, std::abs(w + target) / target);
    }
  }
  return worst;
}

double field_deviation() {
  const Scene s = preset_scene(Preset::moderate);
  const MemSystem sys = assemble_system(s, 10);
  const auto sol = solve_dense(sys);
  double worst = 0.0;
  for (const Point2& x : {Point2(3.5, 4.0), Point2(-5.0, -3.0), Point2(10.0, 2.0), Point2(2.0, 15.0)})
    worst = std::max(worst, std::abs(scattered_field(s, sol.solution, x) -
                                     single_layer_field_quadrature(s, sol.solution, x, 512)));
  return worst;
}

}  // namespace

bool run_selftest(std::ostream& log) {
  const Check checks[] = {
      {"single-layer blocks vs quadrature", assembly_deviation, 1e-8},
      {"incident coefficients vs trace quadrature", incident_deviation, 1e-8},
      {"dense / gmres / reflections agreement", backend_deviation, 1e-9},
      {"Wronskian J_m Y_{m+1} - J_{m+1} Y_m", wronskian_deviation, 1e-10},
      {"multipole field vs quadrature", field_deviation, 1e-8},
  };
  bool all = true;
  for (const auto& c : checks) {
    double dev = 0.0;
    bool ok = false;
    try {
      dev = c.measure();
      ok = dev <= c.tolerance;
    } catch (const std::exception& e) {
      log << "FAIL " << c.name << ": " << e.what() << "\n";
      all = false;
      continue;
    }
    log << (ok ? "PASS " : "FAIL ") << c.name << ": deviation " << dev << " (tolerance " << c.tolerance << ")\n";
    all = all && ok;
  }
  return all;
}

}  // namespace mem
