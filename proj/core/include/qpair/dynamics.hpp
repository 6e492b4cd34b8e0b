#pragma once

#include "qpair/state.hpp"

namespace qpair::dynamics {

// Couplings of H = -J sigma1.sigma2 + B1 sigma1z + B2 sigma2z together with
// the derived dimensionless quantities.  R = sqrt((B1-B2)^2 + 4J^2) sets the
// time scale, j = J/R, b_pm = (B1 +- B2)/R; by construction b_minus^2 + 4j^2
// = 1 and |j| <= 1/2.
struct HamiltonianParams {
  double J = 0.0, B1 = 0.0, B2 = 0.0;
  double R = 0.0, j = 0.0, b_plus = 0.0, b_minus = 0.0;

  static HamiltonianParams make(double J, double B1, double B2);
  // Convenience for tests/sweeps: pick R = 1 and b_minus >= 0. |j| <= 1/2.
  static HamiltonianParams from_dimensionless(double j, double b_plus);
};

// Dimensionless time t' = R t; evolution below always consumes t'.
struct DimensionlessTime {
  double t_prime = 0.0;
  explicit DimensionlessTime(double v);
};

// Loop control: wait t, then pulse for T = n*pi - t with the homogeneous
// field offset delta_b_plus.  Q = s/(2n) is the rational approximant of j and
// delta = j - Q the reconstruction defect.
struct ControlParams {
  int n = 1;
  int m = 0;
  long long s = 0;
  double t = 0.0;
  double T = 0.0;
  double delta_b_plus = 0.0;
  double Q = 0.0;
  double delta = 0.0;
};

ControlParams make_control(const HamiltonianParams& p, int n, int m,
                           long long s, double t);
// Same, with m chosen as the integer minimizing |delta_b_plus|.
ControlParams make_control_auto_m(const HamiltonianParams& p, int n,
                                  long long s, double t);

// H in computational coordinates (conventional 00,01,10,11 layout).
Mat4 hamiltonian_matrix(const HamiltonianParams& p);

// exp(-i H t') by exact eigendecomposition; computational coordinates.
Unitary4 propagator(const HamiltonianParams& p, double t_prime);

// Reference evolution: applies the eigendecomposed propagator to any state,
// returning it in the state's original basis.
PureState evolve_oracle(const HamiltonianParams& p, DimensionlessTime t,
                        const PureState& s);

// Closed-form distorted pair |beta'_which(t')>, expressed in the Bell basis
// with every phase written in t'.  Agrees with evolve_oracle exactly.
PureState distort_analytic(const HamiltonianParams& p, DimensionlessTime t,
                           int which, double theta);

// Composite U_{b+ + db+}(T) U_{b+}(t) in computational coordinates.  Up to a
// global phase it is the identity when delta = 0 and
// diag(1, 1, 1, e^{4 i n pi delta}) otherwise.
Unitary4 reconstruction_pulse(const HamiltonianParams& p,
                              const ControlParams& c);

// Composite applied to |beta_which(theta)>; Bell basis.
PureState reconstruct(const HamiltonianParams& p, const ControlParams& c,
                      int which, double theta);

// Average fidelity of keeping the reconstructed pair as-is,
// (1/2)(|<b1|b1''>|^2 + |<b2|b2''>|^2), evaluated in closed form:
// 1 - (1/2)sin^2(2 n pi delta) (1 + cos^2(theta)(1 + sin^2(theta))).
double fidelity_do_nothing(double theta, int n, double delta);

}  // namespace qpair::dynamics
