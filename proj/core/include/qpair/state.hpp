#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace qpair {

using complexd = std::complex<double>;
using Vec4 = Eigen::Vector4cd;
using Mat4 = Eigen::Matrix4cd;
using Mat2 = Eigen::Matrix2cd;

inline constexpr complexd iu{0.0, 1.0};  // imaginary unit

// Plain algebraic identities should hold to ~machine precision; anything that
// routes through an eigensolver or SVD gets a little more slack.
inline constexpr double tol_algebra = 1e-12;
inline constexpr double tol_eigen = 1e-10;

enum class BasisKind { Computational, Bell, Rotated };

// Coordinate system tag carried by states and operators.
//
// Computational amplitudes are stored in the conventional order
// |00>,|01>,|10>,|11>.  Bell order is beta_00, beta_01, beta_10, beta_11 with
// beta_ij = (|0 j> + (-1)^i |1 !j>)/sqrt(2).  Rotated is the theta-dependent
// basis rho_00 = beta_00, rho_01 = sin(t)b01 - cos(t)b10,
// rho_10 = -cos(t)b01 - sin(t)b10, rho_11 = beta_11.
struct Basis {
  BasisKind kind = BasisKind::Bell;
  double theta = 0.0;  // meaningful only for Rotated

  static Basis computational() { return {BasisKind::Computational, 0.0}; }
  static Basis bell() { return {BasisKind::Bell, 0.0}; }
  static Basis rotated(double theta);

  friend bool operator==(const Basis& a, const Basis& b) {
    if (a.kind != b.kind) return false;
    return a.kind != BasisKind::Rotated || a.theta == b.theta;
  }
  friend bool operator!=(const Basis& a, const Basis& b) { return !(a == b); }
};

// The k-th Bell element pairs with the k-th entry of the computational listing
// 00,01,11,10 (not the storage order): a CNOT-H-CNOT readout maps exactly along
// this correspondence, so keep the permutation explicit instead of implied.
inline constexpr int correspondence_order[4] = {0, 1, 3, 2};

// Bell element measured as computational |b1 b2> through the CNOT-H-CNOT
// readout circuit; returns the Bell index 0..3 for beta_00..beta_11.
int bell_outcome_for_readout(int b1, int b2);

struct PureState {
  Vec4 amps = Vec4::Zero();
  Basis basis = Basis::bell();
};

struct DensityMatrix {
  Mat4 rho = Mat4::Zero();
  Basis basis = Basis::bell();
};

struct Unitary4 {
  Mat4 u = Mat4::Identity();
  Basis basis = Basis::bell();
};

// Validating constructors.  make_state / make_density / make_unitary throw
// std::invalid_argument when the numeric invariants are broken.
PureState make_state(const Vec4& amps, const Basis& basis);
DensityMatrix make_density(const Mat4& rho, const Basis& basis);
Unitary4 make_unitary(const Mat4& u, const Basis& basis);

// |beta_1> = |beta_00>, |beta_2> = sin(theta)|beta_01> - cos(theta)|beta_10>.
// which must be 1 or 2, theta in [0, pi/2].
PureState make_initial(int which, double theta);

PureState change_basis(const PureState& s, const Basis& target);
DensityMatrix change_basis(const DensityMatrix& r, const Basis& target);
Unitary4 change_basis(const Unitary4& u, const Basis& target);

DensityMatrix to_density(const PureState& s);

// |<a|b>|^2; both states must carry the same basis tag (convert first).
double fidelity_pure(const PureState& a, const PureState& b);

// Standard trace distance (1/2)sum of singular values of rho_a - rho_b.
// Basis-invariant; operands must be expressed in the same basis.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// Statistical distance of the readout distributions in the given basis:
// (1/2)sum_i |<i|rho_a - rho_b|i>|.  Unlike trace_distance this depends on
// the basis; for the computational basis it is the quantity that separates
// the two initial pairs by sin^2(theta).
double readout_distance(const DensityMatrix& a, const DensityMatrix& b,
                        const Basis& basis);

// Two-qubit pure-state concurrence |<psi|sigma_y x sigma_y|psi*>|.
double concurrence(const PureState& s);

// Coordinate matrices (Bell column vectors in computational coordinates and
// the rotated-basis columns in Bell coordinates).  Exposed for tests.
const Mat4& bell_to_computational();
Mat4 rotated_to_bell(double theta);

// Matrix M such that coords_to = M coords_from; operators transform as
// E_to = M E_from M^dagger.
Mat4 basis_transfer(const Basis& from, const Basis& to);

}  // namespace qpair
