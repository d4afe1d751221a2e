#include "mem/assembly.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "mem/errors.hpp"
#include "mem/parallel.hpp"
#include "mem/specfun.hpp"

namespace mem {
namespace {

using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

void check_truncation(int n) {
  if (n < 0) throw DimensionError("truncation N must be non-negative");
  if (n > kMaxTruncation)
    throw CapabilityError("truncation N = " + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(kMaxTruncation));
}

void check_cylinder(const Scene& scene, int p) {
  if (p < 0 || p >= scene.size())
    throw DimensionError("cylinder index " + std::to_string(p) + " out of range");
}

const Cylinder& cyl(const Scene& scene, int p) { return scene.cylinders[static_cast<std::size_t>(p)]; }

Complex unit_phase(double angle) { return std::polar(1.0, angle); }

/// J_m(k a_p) and H_m(k a_p) for |m| <= N.
CylinderTable self_table(const Scene& scene, int p, int n) {
  return CylinderTable(n, scene.wavenumber * cyl(scene, p).radius);
}

void check_preconditioner(const Scene& scene, int p, const CylinderTable& table) {
  const double ka = table.argument();
  const int top = std::min(table.max_order(), static_cast<int>(std::ceil(ka)));
  for (int m = 0; m <= top; ++m) {
    if (std::abs(table.j(m).value()) < kPreconditionerFloor) {
      throw SingularError("self block of cylinder " + std::to_string(p) + " is singular: J_" +
                          std::to_string(m) + "(" + std::to_string(ka) +
                          ") vanishes (interior Dirichlet eigenvalue)");
    }
  }
  (void)scene;
}

Eigen::MatrixXcd coupling_block(const Scene& scene, const PairGeometry& geom, int p, int q, int n,
                                const CylinderTable& tp, const CylinderTable& tq, bool preconditioned) {
  const int modes = 2 * n + 1;
  const double ap = cyl(scene, p).radius;
  const double aq = cyl(scene, q).radius;
  const CylinderTable td(2 * n, scene.wavenumber * geom.distance(p, q));
  const double theta = geom.angle(p, q);

  // Phase e^{-i(m-n) theta} depends on m - n only.
  std::vector<Complex> phase(static_cast<std::size_t>(4 * n + 1));
  for (int s = -2 * n; s <= 2 * n; ++s) phase[static_cast<std::size_t>(s + 2 * n)] = unit_phase(-s * theta);

  Eigen::MatrixXcd out(modes, modes);
  if (preconditioned) {
    const double scale = std::sqrt(aq / ap);
    for (int m = -n; m <= n; ++m) {
      const ExtendedComplex hp = tp.h(m);
      for (int k = -n; k <= n; ++k) {
        const auto v = (td.h(m - k) * tq.j(k)) / hp;
        out(m + n, k + n) = scale * v.value() * phase[static_cast<std::size_t>(m - k + 2 * n)];
      }
    }
  } else {
    const Complex scale = kI * pi * std::sqrt(ap * aq) / 2.0;
    for (int m = -n; m <= n; ++m) {
      const ExtendedReal jp = tp.j(m);
      for (int k = -n; k <= n; ++k) {
        const auto v = (jp * td.h(m - k)) * tq.j(k);
        out(m + n, k + n) = scale * v.value() * phase[static_cast<std::size_t>(m - k + 2 * n)];
      }
    }
  }
  return out;
}

Eigen::VectorXcd incident_from_table(const Scene& scene, const PairGeometry& geom, int p, int n,
                                     const CylinderTable& tp) {
  const double a = cyl(scene, p).radius;
  const double k = scene.wavenumber;
  Eigen::VectorXcd f(2 * n + 1);
  if (const auto* pw = std::get_if<PlaneWave>(&scene.incident)) {
    const Point2 beta(std::cos(pw->angle), std::sin(pw->angle));
    const Complex origin_phase = unit_phase(k * beta.dot(cyl(scene, p).center));
    const double amp = -std::sqrt(2.0 * pi * a);
    for (int m = -n; m <= n; ++m)
      f(m + n) = amp * origin_phase * unit_phase(m * (pi / 2.0 - pw->angle)) * tp.j(m).value();
  } else {
    const CylinderTable ts(n, k * geom.source_distance(p));
    const Complex amp = -kI * pi * a / 2.0 / std::sqrt(2.0 * pi * a);
    for (int m = -n; m <= n; ++m)
      f(m + n) = amp * (tp.j(m) * ts.h(m)).value() * unit_phase(-m * geom.source_angle(p));
  }
  return f;
}

Eigen::VectorXcd g_from_table(const Scene& scene, const PairGeometry& geom, int p, int n,
                              const CylinderTable& tp) {
  const double a = cyl(scene, p).radius;
  const double k = scene.wavenumber;
  Eigen::VectorXcd g(2 * n + 1);
  if (const auto* pw = std::get_if<PlaneWave>(&scene.incident)) {
    const Point2 beta(std::cos(pw->angle), std::sin(pw->angle));
    const Complex origin_phase = unit_phase(k * beta.dot(cyl(scene, p).center));
    const Complex amp = -2.0 * std::sqrt(2.0) / (kI * std::sqrt(pi * a));
    const ExtendedReal one(1.0);
    for (int m = -n; m <= n; ++m)
      g(m + n) = amp * origin_phase * unit_phase(m * (pi / 2.0 - pw->angle)) * (one / tp.h(m)).value();
  } else {
    const CylinderTable ts(n, k * geom.source_distance(p));
    const double norm = 1.0 / std::sqrt(2.0 * pi * a);
    for (int m = -n; m <= n; ++m)
      g(m + n) = -(ts.h(m) / tp.h(m)).value() * norm * unit_phase(-m * geom.source_angle(p));
  }
  return g;
}

void write_number(std::ostream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  out << buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// BlockOperator

BlockOperator::BlockOperator(int cylinders, int truncation)
    : cylinders_(cylinders),
      truncation_(truncation),
      kinds_(static_cast<std::size_t>(cylinders) * static_cast<std::size_t>(cylinders), BlockKind::zero),
      blocks_(kinds_.size()) {}

void BlockOperator::set(int p, int q, BlockKind kind, Eigen::MatrixXcd data) {
  const auto s = slot(p, q);
  if (kind == BlockKind::dense && (data.rows() != modes() || data.cols() != modes()))
    throw DimensionError("dense block must be (2N+1) x (2N+1)");
  if (kind == BlockKind::diagonal && (data.rows() != modes() || data.cols() != 1))
    throw DimensionError("diagonal block must be stored as a (2N+1) column");
  kinds_[s] = kind;
  blocks_[s] = (kind == BlockKind::dense || kind == BlockKind::diagonal) ? std::move(data)
                                                                         : Eigen::MatrixXcd();
}

Eigen::MatrixXcd BlockOperator::block(int p, int q) const {
  switch (kind(p, q)) {
    case BlockKind::zero:
      return Eigen::MatrixXcd::Zero(modes(), modes());
    case BlockKind::identity:
      return Eigen::MatrixXcd::Identity(modes(), modes());
    case BlockKind::diagonal:
      return stored(p, q).col(0).asDiagonal();
    case BlockKind::dense:
      return stored(p, q);
  }
  return {};
}

Eigen::MatrixXcd BlockOperator::dense() const {
  const int w = modes();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dimension(), dimension());
  for (int p = 0; p < cylinders_; ++p)
    for (int q = 0; q < cylinders_; ++q)
      if (kind(p, q) != BlockKind::zero) out.block(p * w, q * w, w, w) = block(p, q);
  return out;
}

Eigen::VectorXcd BlockOperator::apply_impl(const Eigen::VectorXcd& x, bool include_diagonal) const {
  if (x.size() != dimension()) throw DimensionError("operand size does not match operator");
  const int w = modes();
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(dimension());
  parallel_for(cylinders_, [&](int p) {
    auto row = y.segment(static_cast<Eigen::Index>(p) * w, w);
    for (int q = 0; q < cylinders_; ++q) {
      if (q == p && !include_diagonal) continue;
      const auto xs = x.segment(static_cast<Eigen::Index>(q) * w, w);
      switch (kind(p, q)) {
        case BlockKind::zero:
          break;
        case BlockKind::identity:
          row += xs;
          break;
        case BlockKind::diagonal:
          row += stored(p, q).col(0).cwiseProduct(xs);
          break;
        case BlockKind::dense:
          row.noalias() += stored(p, q) * xs;
          break;
      }
    }
  });
  return y;
}

Eigen::VectorXcd BlockOperator::apply(const Eigen::VectorXcd& x) const { return apply_impl(x, true); }

Eigen::VectorXcd BlockOperator::apply_coupling(const Eigen::VectorXcd& x) const {
  return apply_impl(x, false);
}

// ---------------------------------------------------------------------------
// Closed forms

Eigen::MatrixXcd v_block(const Scene& scene, const PairGeometry& geom, int p, int q, int n) {
  check_truncation(n);
  check_cylinder(scene, p);
  check_cylinder(scene, q);
  const CylinderTable tp = self_table(scene, p, n);
  if (p == q) {
    const double a = cyl(scene, p).radius;
    const Complex scale = kI * pi * a / 2.0;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2 * n + 1, 2 * n + 1);
    for (int m = -n; m <= n; ++m) out(m + n, m + n) = scale * (tp.j(m) * tp.h(m)).value();
    return out;
  }
  const CylinderTable tq = self_table(scene, q, n);
  return coupling_block(scene, geom, p, q, n, tp, tq, false);
}

Eigen::VectorXcd incident_coeffs(const Scene& scene, const PairGeometry& geom, int p, int n) {
  check_truncation(n);
  check_cylinder(scene, p);
  return incident_from_table(scene, geom, p, n, self_table(scene, p, n));
}

Eigen::VectorXcd precond_diag(const Scene& scene, int p, int n) {
  check_truncation(n);
  check_cylinder(scene, p);
  const CylinderTable tp = self_table(scene, p, n);
  check_preconditioner(scene, p, tp);
  const double a = cyl(scene, p).radius;
  const Complex scale = 1.0 / (kI * pi * a / 2.0);
  const ExtendedReal one(1.0);
  Eigen::VectorXcd b(2 * n + 1);
  for (int m = -n; m <= n; ++m) b(m + n) = scale * (one / (tp.j(m) * tp.h(m))).value();
  return b;
}

Eigen::MatrixXcd a_block(const Scene& scene, const PairGeometry& geom, int p, int q, int n) {
  check_truncation(n);
  check_cylinder(scene, p);
  check_cylinder(scene, q);
  if (p == q) return Eigen::MatrixXcd::Zero(2 * n + 1, 2 * n + 1);
  const CylinderTable tp = self_table(scene, p, n);
  check_preconditioner(scene, p, tp);
  const CylinderTable tq = self_table(scene, q, n);
  return coupling_block(scene, geom, p, q, n, tp, tq, true);
}

Eigen::VectorXcd g_vector(const Scene& scene, const PairGeometry& geom, int p, int n) {
  check_truncation(n);
  check_cylinder(scene, p);
  const CylinderTable tp = self_table(scene, p, n);
  check_preconditioner(scene, p, tp);
  return g_from_table(scene, geom, p, n, tp);
}

MemSystem assemble_system(const Scene& scene, int n) {
  require_valid(scene);
  check_truncation(n);
  const int count = scene.size();
  const PairGeometry geom = pairwise_geometry(scene);

  std::vector<CylinderTable> tables;
  tables.reserve(static_cast<std::size_t>(count));
  for (int p = 0; p < count; ++p) {
    tables.push_back(self_table(scene, p, n));
    check_preconditioner(scene, p, tables.back());
  }

  MemSystem sys{BlockOperator(count, n), CoefficientVector(count, n), scene.wavenumber};
  std::vector<Eigen::MatrixXcd> blocks(static_cast<std::size_t>(count) * static_cast<std::size_t>(count));
  parallel_for(count * count, [&](int idx) {
    const int p = idx / count;
    const int q = idx % count;
    if (p != q)
      blocks[static_cast<std::size_t>(idx)] =
          coupling_block(scene, geom, p, q, n, tables[static_cast<std::size_t>(p)],
                         tables[static_cast<std::size_t>(q)], true);
  });
  for (int p = 0; p < count; ++p) {
    for (int q = 0; q < count; ++q) {
      if (p == q)
        sys.op.set(p, q, BlockKind::identity);
      else
        sys.op.set(p, q, BlockKind::dense, std::move(blocks[static_cast<std::size_t>(p * count + q)]));
    }
    sys.rhs.segment(p) = g_from_table(scene, geom, p, n, tables[static_cast<std::size_t>(p)]);
  }
  return sys;
}

BlockOperator assemble_single_layer(const Scene& scene, int n) {
  require_valid(scene);
  check_truncation(n);
  const PairGeometry geom = pairwise_geometry(scene);
  BlockOperator op(scene.size(), n);
  for (int p = 0; p < scene.size(); ++p) {
    for (int q = 0; q < scene.size(); ++q) {
      const Eigen::MatrixXcd v = v_block(scene, geom, p, q, n);
      if (p == q)
        op.set(p, q, BlockKind::diagonal, v.diagonal());
      else
        op.set(p, q, BlockKind::dense, v);
    }
  }
  return op;
}

// ---------------------------------------------------------------------------
// Dump format

void write_system_dump(std::ostream& out, const MemSystem& system) {
  const Eigen::MatrixXcd w = system.op.dense();
  out << "# multipole system dump v1\n";
  out << "M " << system.cylinders() << "\n";
  out << "N " << system.truncation() << "\n";
  out << "k ";
  write_number(out, system.wavenumber);
  out << "\n";
  out << "dim " << w.rows() << "\n";
  out << "operator\n";
  for (Eigen::Index r = 0; r < w.rows(); ++r) {
    for (Eigen::Index c = 0; c < w.cols(); ++c) {
      if (c) out << ' ';
      write_number(out, w(r, c).real());
      out << ' ';
      write_number(out, w(r, c).imag());
    }
    out << "\n";
  }
  out << "rhs\n";
  for (Eigen::Index r = 0; r < system.rhs.size(); ++r) {
    write_number(out, system.rhs.values()(r).real());
    out << ' ';
    write_number(out, system.rhs.values()(r).imag());
    out << "\n";
  }
}

MemSystem read_system_dump(std::istream& in) {
  std::string line;
  std::getline(in, line);
  if (line.rfind("# multipole system dump", 0) != 0) throw FormatError("not a system dump");
  std::string key;
  int m = 0;
  int n = 0;
  double k = 0.0;
  Eigen::Index dim = 0;
  if (!(in >> key >> m) || key != "M") throw FormatError("dump: expected M");
  if (!(in >> key >> n) || key != "N") throw FormatError("dump: expected N");
  if (!(in >> key >> k) || key != "k") throw FormatError("dump: expected k");
  if (!(in >> key >> dim) || key != "dim") throw FormatError("dump: expected dim");
  if (dim != static_cast<Eigen::Index>(m) * (2 * n + 1)) throw FormatError("dump: inconsistent dim");
  if (!(in >> key) || key != "operator") throw FormatError("dump: expected operator");
  Eigen::MatrixXcd w(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) {
      double re = 0.0, im = 0.0;
      if (!(in >> re >> im)) throw FormatError("dump: truncated operator");
      w(r, c) = {re, im};
    }
  if (!(in >> key) || key != "rhs") throw FormatError("dump: expected rhs");
  Eigen::VectorXcd g(dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    double re = 0.0, im = 0.0;
    if (!(in >> re >> im)) throw FormatError("dump: truncated rhs");
    g(r) = {re, im};
  }
  MemSystem sys{BlockOperator(m, n), CoefficientVector(m, n, g), k};
  const int width = 2 * n + 1;
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      if (p == q)
        sys.op.set(p, q, BlockKind::identity);
      else
        sys.op.set(p, q, BlockKind::dense, w.block(p * width, q * width, width, width));
    }
  return sys;
}

}  // namespace mem
