#include "qpair/repreparation.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace qpair::repreparation {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Mat2 pauli(Axis axis) {
  Mat2 s = Mat2::Zero();
  switch (axis) {
    case Axis::X:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case Axis::Y:
      s(0, 1) = -iu;
      s(1, 0) = iu;
      break;
    case Axis::Z:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
  }
  return s;
}

// gate on qubit 1 (high bit) acting trivially on qubit 2
Mat4 embed_qubit1(const Mat2& g) {
  Mat4 m = Mat4::Zero();
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      for (int b = 0; b < 2; ++b) m(2 * a + b, 2 * c + b) = g(a, c);
  return m;
}

const Mat4& cnot12() {
  static const Mat4 m = [] {
    Mat4 t = Mat4::Identity();
    t(2, 2) = t(3, 3) = 0.0;
    t(2, 3) = t(3, 2) = 1.0;
    return t;
  }();
  return m;
}

}  // namespace

Mat2 pulse_gate(const PulseSpec& p) {
  require(std::isfinite(p.area), "pulse area must be finite");
  return std::cos(p.area) * Mat2::Identity() -
         iu * std::sin(p.area) * pauli(p.axis);
}

Mat2 single_qubit_gate(GateKind kind, double theta, int p, int q) {
  const double half = (2.0 * p + 1.0) * M_PI_2;     // Pauli pulses
  const double quarter = (4.0 * p + 1.0) * M_PI_4;  // S pulse
  switch (kind) {
    case GateKind::X1:
      return pulse_gate({Axis::X, half});
    case GateKind::Y1:
      return pulse_gate({Axis::Y, half});
    case GateKind::Z1:
      return pulse_gate({Axis::Z, half});
    case GateKind::S1:
      return pulse_gate({Axis::Z, quarter});
    case GateKind::H1:
      return pulse_gate({Axis::X, half}) *
             pulse_gate({Axis::Y, (4.0 * q + 1.0) * M_PI_4});
    case GateKind::UTheta1:
      return pulse_gate({Axis::Z, theta});
    case GateKind::Cnot12:
      break;
  }
  throw std::invalid_argument("Cnot12 is not a single-qubit gate");
}

Mat4 realize_gate(const GateLabel& label) {
  if (label.kind == GateKind::Cnot12) return cnot12();
  return embed_qubit1(
      single_qubit_gate(label.kind, label.theta, label.p, label.q));
}

GateLabel gate_from_name(const std::string& name, double theta) {
  if (name == "X1") return {GateKind::X1};
  if (name == "Y1") return {GateKind::Y1};
  if (name == "Z1") return {GateKind::Z1};
  if (name == "S1") return {GateKind::S1};
  if (name == "H1") return {GateKind::H1};
  if (name == "Utheta1") return {GateKind::UTheta1, theta};
  if (name == "C12") return {GateKind::Cnot12};
  throw std::invalid_argument("unknown gate name: " + name);
}

std::string gate_name(const GateLabel& label) {
  switch (label.kind) {
    case GateKind::X1:
      return "X1";
    case GateKind::Y1:
      return "Y1";
    case GateKind::Z1:
      return "Z1";
    case GateKind::S1:
      return "S1";
    case GateKind::H1:
      return "H1";
    case GateKind::UTheta1:
      return "Utheta1";
    case GateKind::Cnot12:
      return "C12";
  }
  throw std::logic_error("unreachable gate kind");
}

Mat4 word_matrix(const GateWord& word) {
  require(!word.empty(), "gate word must be non-empty");
  Mat4 m = Mat4::Identity();
  for (const GateLabel& g : word) m *= realize_gate(g);
  return m;
}

Outcome outcome_from_bits(int b1, int b2) {
  require(b1 == 0 || b1 == 1, "readout bit b1 must be 0 or 1");
  require(b2 == 0 || b2 == 1, "readout bit b2 must be 0 or 1");
  if (b1 == 0) return b2 == 0 ? Outcome::O00 : Outcome::O01;
  if (b2 == 1) return Outcome::O11;
  throw std::invalid_argument(
      "no repreparation word is defined for the |10> record");
}

std::pair<GateWord, PureState> reprepare(Outcome measured, double theta) {
  require(theta >= 0.0 && theta <= M_PI_2 + tol_algebra,
          "theta must lie in [0, pi/2]");
  const GateWord ucb = {{GateKind::Cnot12}, {GateKind::H1},
                        {GateKind::Cnot12}};
  const GateWord kernel = {{GateKind::H1},
                           {GateKind::UTheta1, theta},
                           {GateKind::H1}};
  GateWord word = ucb;
  int reg = 0;
  switch (measured) {
    case Outcome::O00:
      break;
    case Outcome::O01:
      word.push_back({GateKind::Y1});
      word.push_back({GateKind::S1});
      word.insert(word.end(), kernel.begin(), kernel.end());
      reg = 1;
      break;
    case Outcome::O11:
      word.push_back({GateKind::Y1});
      word.push_back({GateKind::S1});
      word.push_back({GateKind::X1});
      word.insert(word.end(), kernel.begin(), kernel.end());
      reg = 3;
      break;
  }
  Vec4 e = Vec4::Zero();
  e(reg) = 1.0;
  const PureState produced =
      make_state(word_matrix(word) * e, Basis::computational());
  return {word, change_basis(produced, Basis::bell())};
}

bool kernel_identity_check(double theta, int j) {
  require(j == 0 || j == 1, "j must be 0 or 1");
  const Mat2 h = single_qubit_gate(GateKind::H1);
  const Mat2 k = h * single_qubit_gate(GateKind::UTheta1, theta) * h;
  Eigen::Vector2cd in = Eigen::Vector2cd::Zero(), want;
  in(j) = 1.0;
  want = std::cos(theta) * in;
  want(1 - j) += -iu * std::sin(theta);
  const Eigen::Vector2cd got = k * in;
  return std::abs(std::norm(want.dot(got)) - 1.0) < 1e-12 &&
         std::abs(got.norm() - 1.0) < 1e-12;
}

}  // namespace qpair::repreparation
