#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <vector>

#include "mem/coefficients.hpp"
#include "mem/scene.hpp"
#include "mem/specfun.hpp"

/// Closed-form multipole blocks for the single-layer formulation of Dirichlet
/// scattering by disjoint disks, with the Fourier basis
/// b_m^p = e^{i m theta_p} / sqrt(2 pi a_p) on each boundary circle.
///
/// Angles are counter-clockwise polar angles (theta_pq = arg(O_q - O_p)). With
/// that convention the coupling phase is e^{-i(m-n) theta_pq} and the plane
/// wave phase is e^{i k beta.O_p} e^{i m (pi/2 - beta)}; both are pinned by the
/// quadrature oracles below.
namespace mem {

/// Largest truncation the assembly accepts: coupling blocks need Hankel orders
/// up to 2N and the special-function tables stop at kMaxOrder.
inline constexpr int kMaxTruncation = kMaxOrder / 2;
/// |J_m(k a_p)| below this for |m| <= ceil(k a_p) means k a_p sits on an
/// interior Dirichlet eigenvalue and the self block cannot be inverted.
inline constexpr double kPreconditionerFloor = 1e-13;

enum class BlockKind { zero, identity, diagonal, dense };

/// M x M blocks of size (2N+1) x (2N+1). Identity and zero blocks carry no
/// storage; diagonal blocks store a (2N+1) x 1 column.
class BlockOperator {
 public:
  BlockOperator() = default;
  BlockOperator(int cylinders, int truncation);

  int cylinders() const { return cylinders_; }
  int truncation() const { return truncation_; }
  int modes() const { return 2 * truncation_ + 1; }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(cylinders_) * modes(); }

  BlockKind kind(int p, int q) const { return kinds_[slot(p, q)]; }
  const Eigen::MatrixXcd& stored(int p, int q) const { return blocks_[slot(p, q)]; }
  void set(int p, int q, BlockKind kind, Eigen::MatrixXcd data = {});

  /// Block (p, q) expanded to a dense (2N+1) x (2N+1) matrix.
  Eigen::MatrixXcd block(int p, int q) const;
  Eigen::MatrixXcd dense() const;

  /// y = W x, one block row per task; the summation order within a row is
  /// fixed, so the result is independent of the thread count.
  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
  /// y = (W - I) x restricted to off-diagonal blocks.
  Eigen::VectorXcd apply_coupling(const Eigen::VectorXcd& x) const;

 private:
  std::size_t slot(int p, int q) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(cylinders_) +
           static_cast<std::size_t>(q);
  }
  Eigen::VectorXcd apply_impl(const Eigen::VectorXcd& x, bool include_diagonal) const;

  int cylinders_ = 0;
  int truncation_ = 0;
  std::vector<BlockKind> kinds_;
  std::vector<Eigen::MatrixXcd> blocks_;
};

/// The preconditioned truncated system (I + A) Phi = G.
struct MemSystem {
  BlockOperator op;
  CoefficientVector rhs;
  double wavenumber = 0.0;

  int cylinders() const { return op.cylinders(); }
  int truncation() const { return op.truncation(); }
};

/// <V b_n^q, b_m^p>, rows m = -N..N, columns n = -N..N.
Eigen::MatrixXcd v_block(const Scene& scene, const PairGeometry& geom, int p, int q, int n);

/// f_m^p = -<u_inc, b_m^p>, modes -N..N.
Eigen::VectorXcd incident_coeffs(const Scene& scene, const PairGeometry& geom, int p, int n);

/// Diagonal of B^pp = (V^pp)^-1. Throws SingularError at interior eigenvalues.
Eigen::VectorXcd precond_diag(const Scene& scene, int p, int n);

/// A^pq = B^pp V^pq, evaluated through Hankel ratios so that no
/// intermediate overflows; zero block for p == q.
Eigen::MatrixXcd a_block(const Scene& scene, const PairGeometry& geom, int p, int q, int n);

/// g^p = B^pp f^p.
Eigen::VectorXcd g_vector(const Scene& scene, const PairGeometry& geom, int p, int n);

/// Validates the scene and builds I + A and G at truncation n.
MemSystem assemble_system(const Scene& scene, int n);

/// Unpreconditioned V assembled block-wise (diagonal self blocks, dense couplings).
BlockOperator assemble_single_layer(const Scene& scene, int n);

// ---------------------------------------------------------------------------
// Quadrature oracles. These use the C++ standard library's cyl_bessel_j and
// cyl_neumann for the kernel, independent of the in-repo special functions.

enum class SingularRule {
  refuse,  ///< p == q throws DomainError
  kress,   ///< log-singular periodic product quadrature on the self block
};

/// <V b_n^q, b_m^p> by tensor trapezoid quadrature with n_quad nodes per circle.
Complex single_layer_pairing_quadrature(const Scene& scene, int p, int q, int m, int n, int n_quad,
                                        SingularRule rule = SingularRule::refuse);

/// Whole block by the same rule; one kernel evaluation per node pair.
Eigen::MatrixXcd single_layer_block_quadrature(const Scene& scene, int p, int q, int n, int n_quad,
                                               SingularRule rule = SingularRule::refuse);

/// -int u_inc conj(b_m^p) dsigma over Gamma_p, modes -N..N.
Eigen::VectorXcd incident_trace_quadrature(const Scene& scene, int p, int n, int n_quad);

/// Incident field value u_inc(x), kernel from the standard library.
Complex incident_field_reference(const Scene& scene, const Point2& x);

// ---------------------------------------------------------------------------
// Block-matrix dump: text header (M, N, k, dim) followed by the dense operator,
// one row per line as "re im" pairs, then the right-hand side; every number in
// scientific notation with 17 significant digits.

void write_system_dump(std::ostream& out, const MemSystem& system);
MemSystem read_system_dump(std::istream& in);

}  // namespace mem
