#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qpair/state.hpp"

namespace qpair::measurement {

enum class SetLabel { MC, MB, MBPrime, MR, Custom };

// Two-outcome discrimination partition {e1, e2, e_inc}; e1 + e2 + e_inc = I,
// every element positive semidefinite.  Operators are expressed in the
// coordinates of `basis`.
struct MeasurementSet {
  SetLabel label = SetLabel::Custom;
  Basis basis = Basis::bell();
  Mat4 e1 = Mat4::Zero();
  Mat4 e2 = Mat4::Zero();
  Mat4 e_inc = Mat4::Zero();
};

struct DiscriminationResult {
  double p_h1 = 0.0;           // Tr(rho_1 e1)
  double p_h2 = 0.0;           // Tr(rho_2 e2)
  double p_inconclusive = 0.0; // mean of Tr(rho_k e_inc)
  double avg_fidelity = 0.0;   // (p_h1 + p_h2)/2, perfect repreparation
};

// The four projective partitions; theta is consumed only by MR.
// MC partitions the computational basis {00,11}|{01,10}; MB the Bell basis
// {b00,b10}|{b01,b11}; MBPrime {b00,b11}|{b01,b10}; MR the rotated basis
// {r00,r11}|{r01,r10}.
MeasurementSet builtin_set(SetLabel label, double theta = 0.0);

// Express the same partition in another coordinate system.
MeasurementSet change_basis(const MeasurementSet& ms, const Basis& target);

// Helstrom probabilities for two candidate premeasured states.  States must
// already be expressed in the set's basis.
DiscriminationResult helstrom(const MeasurementSet& ms, const PureState& s1,
                              const PureState& s2);

// Phase-normalized reconstructed pair (Bell basis) for defect delta after n
// loop periods; x = 2 n pi delta:
//   |b1''> = e^{ix} cos x |b00> - i e^{ix} sin x |b10>
//   |b2''> = i e^{ix} cos(theta) sin x |b00> + sin(theta) |b01>
//            - e^{ix} cos(theta) cos x |b10>
std::pair<PureState, PureState> reconstructed_states(double theta, int n,
                                                     double delta);

// Average fidelity of discriminate-then-reprepare using set ms on the
// reconstructed pair.  With repreparation_perfect the identified target is
// reprepared exactly; otherwise the post-measurement (projected) state is
// kept as-is.
double average_fidelity(const MeasurementSet& ms, double theta, int n,
                        double delta, bool repreparation_perfect = true);

// Closed forms for the two fidelity families.
double fidelity_computational(double theta);                      // F_C = F_B
double fidelity_bell_prime(double theta, int n, double delta);    // F_B' = F_R

// Probability table: squared overlap of each element of the three bases with
// each reconstructed state, computed from states.
struct TableEntry {
  std::string label;  // "00","01","10","11","b00",...,"r00",...
  double p1 = 0.0;    // |<phi|b1''>|^2
  double p2 = 0.0;    // |<phi|b2''>|^2
};
std::array<TableEntry, 12> table_one(double theta, int n, double delta);

// Member of the fidelity-invariance subgroup: acts block-wise on the
// partition subspaces span{e0,e3} and span{e1,e2} of the given basis.  Each
// block (a_i1, b_i1; b_i2, a_i2) must itself be unitary.
Unitary4 commutant_member(complexd a11, complexd a12, complexd a21,
                          complexd a22, complexd b11, complexd b12,
                          complexd b21, complexd b22, const Basis& basis);

// Basis-change gates: U_CB = C12 H1 C12 (computational coordinates,
// self-adjoint) maps the computational readout onto the Bell partition;
// U_BR (Bell coordinates, self-adjoint) maps M_B' onto M_R.
Unitary4 u_cb();
Unitary4 u_br(double theta);

// Unambiguous-discrimination POVM for two pure states restricted to their
// span: E_k = (P_span - |b_k'><b_k'|)/(1 + v) with v = |<b1|b2>|, and
// e_inc = I - E_1 - E_2.  Orthogonal inputs reduce to projectors onto the
// states themselves.
MeasurementSet optimal_povm(const PureState& b1, const PureState& b2);

// Critical single-projector discrimination probabilities over Bell-diagonal
// measurement operators, computed from the reconstructed states and checked
// against their closed forms.
struct CriticalProbability {
  int k = 1;             // which reconstructed state is discriminated
  std::string projector; // "b00", "b10", "b01"
  double value = 0.0;
};
std::vector<CriticalProbability> bell_diagonal_optima(double theta, int n,
                                                      double delta);

// |b3''>, |b4''> completing {b1'', b2''} to an orthonormal basis.
std::pair<PureState, PureState> extended_orthogonal_set(double theta, int n,
                                                        double delta);

}  // namespace qpair::measurement
