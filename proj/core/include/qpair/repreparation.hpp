#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpair/state.hpp"

namespace qpair::repreparation {

enum class Axis { X, Y, Z };

// Magnetic pulse of integrated area B*tau acting on one qubit.
struct PulseSpec {
  Axis axis = Axis::Z;
  double area = 0.0;
};

// I cos(area) - i Sigma_axis sin(area).
Mat2 pulse_gate(const PulseSpec& p);

// Gate alphabet of the repreparation words.  Single-qubit gates act on
// qubit 1 (the high bit of |b1 b2>); Cnot12 is controlled on qubit 1.
enum class GateKind { X1, Y1, Z1, S1, H1, UTheta1, Cnot12 };

struct GateLabel {
  GateKind kind = GateKind::H1;
  double theta = 0.0;  // UTheta1 only
  // pulse integers of the area selections; any choice moves only a global
  // phase, kept configurable so tests can assert exactly that
  int p = 0;
  int q = 0;
};

using GateWord = std::vector<GateLabel>;

// Pulse-realized single-qubit gate (equals the textbook gate up to a global
// phase).  Throws for Cnot12, which has no single-qubit matrix.
Mat2 single_qubit_gate(GateKind kind, double theta = 0.0, int p = 0,
                       int q = 0);

// 4x4 action of one gate on the pair, computational coordinates.
Mat4 realize_gate(const GateLabel& label);

// Parse "X1","Y1","Z1","S1","H1","Utheta1","C12"; unknown names throw.
GateLabel gate_from_name(const std::string& name, double theta = 0.0);
std::string gate_name(const GateLabel& label);

// Product of a word as written: the rightmost gate is applied first.
Mat4 word_matrix(const GateWord& word);

// Readout records that have a repreparation word.  |10> is deliberately
// absent: no word is defined for it (it occurs with probability
// sin^2(2 n pi delta) from the first reconstructed state).
enum class Outcome { O00, O01, O11 };

// Maps measured bits to an Outcome; (1,0) throws.
Outcome outcome_from_bits(int b1, int b2);

// The repreparation word for a measured record and the state it produces
// from the freshly initialized register |ij>, expressed in the Bell basis.
// The result has fidelity 1 with |beta_1> (from |00>) or |beta_2(theta)>
// (from |01> and |11>).
std::pair<GateWord, PureState> reprepare(Outcome measured, double theta);

// Verifies H U_theta H |j> = cos(theta)|j> - i sin(theta)|j xor 1> on the
// pulse-realized gates, up to their global phases.
bool kernel_identity_check(double theta, int j);

}  // namespace qpair::repreparation
