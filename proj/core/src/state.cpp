#include "qpair/state.hpp"

#include <cmath>

namespace qpair {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Coordinate change A -> Bell for amplitudes expressed in basis A.
Vec4 to_bell_coords(const Vec4& a, const Basis& from) {
  switch (from.kind) {
    case BasisKind::Bell:
      return a;
    case BasisKind::Computational:
      // Bell-to-comp matrix is real orthogonal, so its transpose inverts it.
      return bell_to_computational().transpose() * a;
    case BasisKind::Rotated:
      // rotated_to_bell is symmetric and self-inverse.
      return rotated_to_bell(from.theta) * a;
  }
  throw std::logic_error("unreachable basis kind");
}

Vec4 from_bell_coords(const Vec4& a, const Basis& to) {
  switch (to.kind) {
    case BasisKind::Bell:
      return a;
    case BasisKind::Computational:
      return bell_to_computational() * a;
    case BasisKind::Rotated:
      return rotated_to_bell(to.theta) * a;
  }
  throw std::logic_error("unreachable basis kind");
}

// Full transfer matrix target <- source, composed through the Bell hub.
Mat4 transfer(const Basis& from, const Basis& to) {
  Mat4 m = Mat4::Identity();
  for (int c = 0; c < 4; ++c) {
    Vec4 e = Vec4::Zero();
    e(c) = 1.0;
    m.col(c) = from_bell_coords(to_bell_coords(e, from), to);
  }
  return m;
}

}  // namespace

Basis Basis::rotated(double theta) {
  if (!(theta >= 0.0 && theta <= M_PI / 2 + tol_algebra))
    throw std::invalid_argument("rotated basis needs theta in [0, pi/2]");
  return {BasisKind::Rotated, theta};
}

int bell_outcome_for_readout(int b1, int b2) {
  require(b1 == 0 || b1 == 1, "readout bit b1 must be 0 or 1");
  require(b2 == 0 || b2 == 1, "readout bit b2 must be 0 or 1");
  const int comp_index = 2 * b1 + b2;
  for (int k = 0; k < 4; ++k)
    if (correspondence_order[k] == comp_index) return k;
  throw std::logic_error("correspondence table is not a permutation");
}

const Mat4& bell_to_computational() {
  static const Mat4 m = [] {
    const double r = 1.0 / std::sqrt(2.0);
    Mat4 t = Mat4::Zero();
    // columns: beta_00, beta_01, beta_10, beta_11 in |00>,|01>,|10>,|11> rows
    t(0, 0) = r;  t(3, 0) = r;
    t(1, 1) = r;  t(2, 1) = r;
    t(0, 2) = r;  t(3, 2) = -r;
    t(1, 3) = r;  t(2, 3) = -r;
    return t;
  }();
  return m;
}

Mat4 rotated_to_bell(double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = s;   m(2, 1) = -c;
  m(1, 2) = -c;  m(2, 2) = -s;
  m(3, 3) = 1.0;
  return m;
}

PureState make_state(const Vec4& amps, const Basis& basis) {
  const double norm = amps.norm();
  require(std::abs(norm - 1.0) < 1e-9, "state amplitudes are not normalized");
  return {amps / norm, basis};
}

DensityMatrix make_density(const Mat4& rho, const Basis& basis) {
  require((rho - rho.adjoint()).cwiseAbs().maxCoeff() < tol_eigen,
          "density matrix is not hermitian");
  require(std::abs(rho.trace().real() - 1.0) < tol_eigen &&
              std::abs(rho.trace().imag()) < tol_eigen,
          "density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Mat4> es(0.5 * (rho + rho.adjoint()),
                                         Eigen::EigenvaluesOnly);
  require(es.eigenvalues().minCoeff() > -tol_eigen,
          "density matrix has a negative eigenvalue");
  return {rho, basis};
}

Unitary4 make_unitary(const Mat4& u, const Basis& basis) {
  require((u * u.adjoint() - Mat4::Identity()).cwiseAbs().maxCoeff() < tol_eigen,
          "matrix is not unitary");
  return {u, basis};
}

PureState make_initial(int which, double theta) {
  require(which == 1 || which == 2, "initial state index must be 1 or 2");
  require(theta >= 0.0 && theta <= M_PI / 2 + tol_algebra,
          "theta must lie in [0, pi/2]");
  Vec4 a = Vec4::Zero();
  if (which == 1) {
    a(0) = 1.0;
  } else {
    a(1) = std::sin(theta);
    a(2) = -std::cos(theta);
  }
  return {a, Basis::bell()};
}

PureState change_basis(const PureState& s, const Basis& target) {
  if (s.basis == target) return s;
  return {from_bell_coords(to_bell_coords(s.amps, s.basis), target), target};
}

DensityMatrix change_basis(const DensityMatrix& r, const Basis& target) {
  if (r.basis == target) return r;
  const Mat4 m = transfer(r.basis, target);
  return {m * r.rho * m.adjoint(), target};
}

Unitary4 change_basis(const Unitary4& u, const Basis& target) {
  if (u.basis == target) return u;
  const Mat4 m = transfer(u.basis, target);
  return {m * u.u * m.adjoint(), target};
}

DensityMatrix to_density(const PureState& s) {
  return {s.amps * s.amps.adjoint(), s.basis};
}

Mat4 basis_transfer(const Basis& from, const Basis& to) {
  return transfer(from, to);
}

double fidelity_pure(const PureState& a, const PureState& b) {
  require(a.basis == b.basis, "fidelity needs a common basis; convert first");
  return std::norm(a.amps.dot(b.amps));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  require(a.basis == b.basis,
          "trace_distance needs a common basis; convert first");
  const Mat4 d = a.rho - b.rho;
  Eigen::SelfAdjointEigenSolver<Mat4> es(0.5 * (d + d.adjoint()),
                                         Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double readout_distance(const DensityMatrix& a, const DensityMatrix& b,
                        const Basis& basis) {
  const Mat4 da = change_basis(a, basis).rho;
  const Mat4 db = change_basis(b, basis).rho;
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += std::abs(da(i, i) - db(i, i));
  return 0.5 * acc;
}

double concurrence(const PureState& s) {
  const Vec4 a = change_basis(s, Basis::computational()).amps;
  const double c = 2.0 * std::abs(a(0) * a(3) - a(1) * a(2));
  return std::min(c, 1.0);
}

}  // namespace qpair
