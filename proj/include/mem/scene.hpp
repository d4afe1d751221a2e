#pragma once

#include <Eigen/Core>
#include <string>
#include <variant>
#include <vector>

namespace mem {

using Point2 = Eigen::Vector2d;

struct Cylinder {
  Point2 center = Point2::Zero();
  double radius = 1.0;

  bool operator==(const Cylinder& o) const { return center == o.center && radius == o.radius; }
};

/// e^{ik beta.x}, beta = (cos angle, sin angle).
struct PlaneWave {
  double angle = 0.0;
  bool operator==(const PlaneWave&) const = default;
};

/// (i/4) H_0(k |x - location|).
struct PointSource {
  Point2 location = Point2::Zero();
  bool operator==(const PointSource& o) const { return location == o.location; }
};

using IncidentField = std::variant<PlaneWave, PointSource>;

struct Scene {
  std::string name;
  std::vector<Cylinder> cylinders;
  double wavenumber = 1.0;
  IncidentField incident = PlaneWave{};

  int size() const { return static_cast<int>(cylinders.size()); }
  bool has_point_source() const { return std::holds_alternative<PointSource>(incident); }
  bool operator==(const Scene&) const = default;
};

struct Issue {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> violations;
  std::vector<Issue> warnings;

  bool ok() const { return violations.empty(); }
  bool has_violation(const std::string& code) const;
  bool has_warning(const std::string& code) const;
};

/// Absolute slack on the strict disjointness test d_pq > a_p + a_q.
inline constexpr double kDisjointSlack = 1e-12;
/// Warn when min_m |J_m(k a_p)| over m in [0, ceil(k a_p) + 10] drops below this.
inline constexpr double kEigenvalueWarning = 1e-6;

/// Violation codes: "empty", "nonpositive-radius", "nonpositive-wavenumber",
/// "non-finite", "angle-range", "overlap", "source-inside".
/// Warning codes: "near-eigenvalue".
ValidationReport validate_scene(const Scene& scene);

/// Throws ValidationError listing every violation.
void require_valid(const Scene& scene);

/// Centre distances and angles. angle(p, q) is the polar angle of O_q - O_p
/// in [0, 2 pi); the source entries are filled for point sources only.
struct PairGeometry {
  Eigen::MatrixXd distance;
  Eigen::MatrixXd angle;
  Eigen::VectorXd source_distance;
  Eigen::VectorXd source_angle;  // polar angle of x0 about O_p
};

PairGeometry pairwise_geometry(const Scene& scene);

/// Polar angle of v in [0, 2 pi).
double polar_angle(const Point2& v);

}  // namespace mem
