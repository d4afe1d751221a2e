#include "mem/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mem/errors.hpp"
#include "mem/specfun.hpp"

namespace mem {

bool ValidationReport::has_violation(const std::string& code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Issue& i) { return i.code == code; });
}

bool ValidationReport::has_warning(const std::string& code) const {
  return std::any_of(warnings.begin(), warnings.end(),
                     [&](const Issue& i) { return i.code == code; });
}

double polar_angle(const Point2& v) {
  double a = std::atan2(v.y(), v.x());
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  if (a >= 2.0 * std::numbers::pi) a = 0.0;
  return a;
}

ValidationReport validate_scene(const Scene& scene) {
  ValidationReport report;
  auto violation = [&](std::string code, std::string msg) {
    report.violations.push_back({std::move(code), std::move(msg)});
  };

  if (scene.cylinders.empty()) violation("empty", "scene has no cylinders");
  if (!std::isfinite(scene.wavenumber))
    violation("non-finite", "wavenumber is not finite");
  else if (scene.wavenumber <= 0.0)
    violation("nonpositive-wavenumber", "wavenumber must be positive");

  bool geometry_ok = true;
  for (int p = 0; p < scene.size(); ++p) {
    const auto& c = scene.cylinders[static_cast<std::size_t>(p)];
    if (!c.center.allFinite() || !std::isfinite(c.radius)) {
      violation("non-finite", "cylinder " + std::to_string(p) + " has non-finite data");
      geometry_ok = false;
    } else if (c.radius <= 0.0) {
      violation("nonpositive-radius", "cylinder " + std::to_string(p) + " radius must be positive");
      geometry_ok = false;
    }
  }

  if (geometry_ok) {
    for (int p = 0; p < scene.size(); ++p) {
      for (int q = p + 1; q < scene.size(); ++q) {
        const auto& a = scene.cylinders[static_cast<std::size_t>(p)];
        const auto& b = scene.cylinders[static_cast<std::size_t>(q)];
        const double d = (a.center - b.center).norm();
        if (!(d > a.radius + b.radius + kDisjointSlack)) {
          std::ostringstream os;
          os << "cylinders " << p << " and " << q << " are not disjoint (d = " << d
             << ", a_p + a_q = " << a.radius + b.radius << ")";
          violation("overlap", os.str());
        }
      }
    }
  }

  if (const auto* pw = std::get_if<PlaneWave>(&scene.incident)) {
    if (!std::isfinite(pw->angle) || pw->angle < 0.0 || pw->angle >= 2.0 * std::numbers::pi)
      violation("angle-range", "plane wave angle must lie in [0, 2 pi)");
  } else if (const auto* ps = std::get_if<PointSource>(&scene.incident)) {
    if (!ps->location.allFinite()) {
      violation("non-finite", "point source location is not finite");
    } else if (geometry_ok) {
      for (int p = 0; p < scene.size(); ++p) {
        const auto& c = scene.cylinders[static_cast<std::size_t>(p)];
        if (!((ps->location - c.center).norm() > c.radius + kDisjointSlack))
          violation("source-inside",
                    "point source lies in closed cylinder " + std::to_string(p));
      }
    }
  }

  const bool k_ok = std::isfinite(scene.wavenumber) && scene.wavenumber > 0.0;
  if (geometry_ok && k_ok) {
    for (int p = 0; p < scene.size(); ++p) {
      const double ka = scene.wavenumber * scene.cylinders[static_cast<std::size_t>(p)].radius;
      if (ka > kMaxArgument) continue;
      // Zeros of J_m(x) need x > m, so orders above ceil(ka) only carry the
      // monotone decay and are left out.
      const int top = std::min(kMaxOrder, static_cast<int>(std::ceil(ka)));
      const CylinderTable table(top, ka, false);
      double smallest = 1.0;
      int where = 0;
      for (int m = 0; m <= top; ++m) {
        const double v = std::abs(table.j(m).value());
        if (v < smallest) {
          smallest = v;
          where = m;
        }
      }
      if (smallest < kEigenvalueWarning) {
        std::ostringstream os;
        os << "k a_" << p << " = " << ka << " is close to a zero of J_" << where
           << " (|J| = " << smallest << "); interior Dirichlet eigenvalue";
        report.warnings.push_back({"near-eigenvalue", os.str()});
      }
    }
  }
  return report;
}

void require_valid(const Scene& scene) {
  const auto report = validate_scene(scene);
  if (report.ok()) return;
  std::string msg = "invalid scene";
  for (const auto& v : report.violations) msg += "; " + v.code + ": " + v.message;
  throw ValidationError(msg);
}

PairGeometry pairwise_geometry(const Scene& scene) {
  const int m = scene.size();
  PairGeometry g;
  g.distance = Eigen::MatrixXd::Zero(m, m);
  g.angle = Eigen::MatrixXd::Zero(m, m);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      if (p == q) continue;
      const Point2 v = scene.cylinders[static_cast<std::size_t>(q)].center -
                       scene.cylinders[static_cast<std::size_t>(p)].center;
      g.distance(p, q) = v.norm();
      g.angle(p, q) = polar_angle(v);
    }
  }
  if (const auto* ps = std::get_if<PointSource>(&scene.incident)) {
    g.source_distance.resize(m);
    g.source_angle.resize(m);
    for (int p = 0; p < m; ++p) {
      const Point2 v = ps->location - scene.cylinders[static_cast<std::size_t>(p)].center;
      g.source_distance(p) = v.norm();
      g.source_angle(p) = polar_angle(v);
    }
  }
  return g;
}

}  // namespace mem
