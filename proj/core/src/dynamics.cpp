#include "qpair/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qpair::dynamics {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Real symmetric H in computational coordinates.
Eigen::Matrix4d hamiltonian_real(const HamiltonianParams& p) {
  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
  h(0, 0) = -p.J + p.B1 + p.B2;
  h(1, 1) = p.J + p.B1 - p.B2;
  h(2, 2) = p.J - p.B1 + p.B2;
  h(3, 3) = -p.J - p.B1 - p.B2;
  h(1, 2) = h(2, 1) = -2.0 * p.J;
  return h;
}

}  // namespace

HamiltonianParams HamiltonianParams::make(double J, double B1, double B2) {
  require(std::isfinite(J) && std::isfinite(B1) && std::isfinite(B2),
          "couplings must be finite");
  HamiltonianParams p;
  p.J = J;
  p.B1 = B1;
  p.B2 = B2;
  const double d = B1 - B2;
  p.R = std::sqrt(d * d + 4.0 * J * J);
  require(p.R > 0.0, "R must be positive (need J != 0 or B1 != B2)");
  p.j = J / p.R;
  p.b_plus = (B1 + B2) / p.R;
  p.b_minus = d / p.R;
  return p;
}

HamiltonianParams HamiltonianParams::from_dimensionless(double j,
                                                        double b_plus) {
  require(std::abs(j) <= 0.5, "|j| <= 1/2 is required");
  const double b_minus = std::sqrt(1.0 - 4.0 * j * j);
  return make(j, 0.5 * (b_plus + b_minus), 0.5 * (b_plus - b_minus));
}

DimensionlessTime::DimensionlessTime(double v) : t_prime(v) {
  require(std::isfinite(v) && v >= 0.0, "time must be finite and nonnegative");
}

ControlParams make_control(const HamiltonianParams& p, int n, int m,
                           long long s, double t) {
  require(n >= 1, "n must be a positive integer");
  const double period = n * M_PI;
  require(t >= 0.0 && t < period, "need 0 <= t < n*pi so the pulse length is positive");
  ControlParams c;
  c.n = n;
  c.m = m;
  c.s = s;
  c.t = t;
  c.T = period - t;
  c.delta_b_plus =
      M_PI * (2.0 * m - n * (p.b_plus - 2.0 * p.j + 1.0)) / c.T;
  c.Q = static_cast<double>(s) / (2.0 * n);
  c.delta = p.j - c.Q;
  return c;
}

ControlParams make_control_auto_m(const HamiltonianParams& p, int n,
                                  long long s, double t) {
  require(n >= 1, "n must be a positive integer");
  const int m =
      static_cast<int>(std::llround(n * (p.b_plus - 2.0 * p.j + 1.0) / 2.0));
  return make_control(p, n, m, s, t);
}

Mat4 hamiltonian_matrix(const HamiltonianParams& p) {
  return hamiltonian_real(p).cast<complexd>();
}

Unitary4 propagator(const HamiltonianParams& p, double t_prime) {
  require(std::isfinite(t_prime), "time must be finite");
  const double t_phys = t_prime / p.R;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(hamiltonian_real(p));
  require(es.info() == Eigen::Success, "eigendecomposition failed");
  Vec4 phases;
  for (int k = 0; k < 4; ++k)
    phases(k) = std::exp(-iu * es.eigenvalues()(k) * t_phys);
  const Mat4 v = es.eigenvectors().cast<complexd>();
  return make_unitary(v * phases.asDiagonal() * v.adjoint(),
                      Basis::computational());
}

PureState evolve_oracle(const HamiltonianParams& p, DimensionlessTime t,
                        const PureState& s) {
  const Unitary4 u = propagator(p, t.t_prime);
  PureState comp = change_basis(s, Basis::computational());
  comp.amps = u.u * comp.amps;
  return change_basis(comp, s.basis);
}

PureState distort_analytic(const HamiltonianParams& p, DimensionlessTime t,
                           int which, double theta) {
  require(which == 1 || which == 2, "which must be 1 or 2");
  require(theta >= 0.0 && theta <= M_PI_2, "theta must lie in [0, pi/2]");
  const double tp = t.t_prime;
  const complexd ejt = std::exp(iu * p.j * tp);   // {b00,b10} block phase
  const complexd emjt = std::exp(-iu * p.j * tp); // {b01,b11} block phase
  Vec4 amps;
  if (which == 1) {
    amps << ejt * std::cos(p.b_plus * tp), 0.0,
        -iu * ejt * std::sin(p.b_plus * tp), 0.0;
  } else {
    amps << iu * ejt * std::cos(theta) * std::sin(p.b_plus * tp),
        emjt * (std::cos(tp) + 2.0 * iu * p.j * std::sin(tp)) *
            std::sin(theta),
        -ejt * std::cos(theta) * std::cos(p.b_plus * tp),
        -iu * p.b_minus * emjt * std::sin(theta) * std::sin(tp);
  }
  return make_state(amps, Basis::bell());
}

Unitary4 reconstruction_pulse(const HamiltonianParams& p,
                              const ControlParams& c) {
  // Shift the homogeneous field so b+ -> b+ + delta_b_plus while R, j and
  // b- stay untouched.
  HamiltonianParams shifted = p;
  shifted.b_plus += c.delta_b_plus;
  shifted.B1 += 0.5 * c.delta_b_plus * p.R;
  shifted.B2 += 0.5 * c.delta_b_plus * p.R;
  const Unitary4 u1 = propagator(p, c.t);
  const Unitary4 u2 = propagator(shifted, c.T);
  return make_unitary(u2.u * u1.u, Basis::computational());
}

PureState reconstruct(const HamiltonianParams& p, const ControlParams& c,
                      int which, double theta) {
  const Unitary4 u = reconstruction_pulse(p, c);
  PureState comp =
      change_basis(make_initial(which, theta), Basis::computational());
  comp.amps = u.u * comp.amps;
  return change_basis(comp, Basis::bell());
}

double fidelity_do_nothing(double theta, int n, double delta) {
  require(n >= 1, "n must be a positive integer");
  const double s = std::sin(2.0 * n * M_PI * delta);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  return 1.0 - 0.5 * s * s * (1.0 + c2 * (1.0 + s2));
}

}  // namespace qpair::dynamics
