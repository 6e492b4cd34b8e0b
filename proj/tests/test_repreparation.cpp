#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qpair/measurement.hpp"
#include "qpair/repreparation.hpp"

using namespace qpair;
namespace rp = qpair::repreparation;

namespace {

// true when a = phase * b with |phase| = 1
bool equal_up_to_phase2(const Mat2& a, const Mat2& b, double tol) {
  Mat2 m = a.adjoint() * b;
  complexd ph = m(0, 0);
  if (std::abs(std::abs(ph) - 1.0) > tol) return false;
  return (m - ph * Mat2::Identity()).cwiseAbs().maxCoeff() < tol;
}

bool equal_up_to_phase4(const Mat4& a, const Mat4& b, double tol) {
  Mat4 m = a.adjoint() * b;
  complexd ph = m(0, 0);
  if (std::abs(std::abs(ph) - 1.0) > tol) return false;
  return (m - ph * Mat4::Identity()).cwiseAbs().maxCoeff() < tol;
}

}  // namespace

TEST_CASE("pulse gates") {
  Mat2 z = rp::pulse_gate({rp::Axis::Z, 0.7});
  CHECK(std::abs(z(0, 0) - std::exp(-iu * 0.7)) < tol_algebra);
  CHECK(std::abs(z(1, 1) - std::exp(iu * 0.7)) < tol_algebra);
  CHECK(std::abs(z(0, 1)) < tol_algebra);

  Mat2 x = rp::pulse_gate({rp::Axis::X, M_PI});
  CHECK((x + Mat2::Identity()).cwiseAbs().maxCoeff() < tol_algebra);

  for (auto axis : {rp::Axis::X, rp::Axis::Y, rp::Axis::Z}) {
    Mat2 u = rp::pulse_gate({axis, 1.234});
    CHECK((u * u.adjoint() - Mat2::Identity()).cwiseAbs().maxCoeff() <
          tol_algebra);
  }
}

TEST_CASE("pulse-realized gates equal the textbook ones up to phase") {
  Mat2 X, Y, Z, S, H;
  X << 0, 1, 1, 0;
  Y << 0, -iu, iu, 0;
  Z << 1, 0, 0, -1;
  S << 1, 0, 0, iu;
  H << 1, 1, 1, -1;
  H /= std::sqrt(2.0);

  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      CHECK(equal_up_to_phase2(rp::single_qubit_gate(rp::GateKind::X1, 0, p),
                               X, 1e-12));
      CHECK(equal_up_to_phase2(rp::single_qubit_gate(rp::GateKind::Y1, 0, p),
                               Y, 1e-12));
      CHECK(equal_up_to_phase2(rp::single_qubit_gate(rp::GateKind::Z1, 0, p),
                               Z, 1e-12));
      CHECK(equal_up_to_phase2(rp::single_qubit_gate(rp::GateKind::S1, 0, p),
                               S, 1e-12));
      CHECK(equal_up_to_phase2(
          rp::single_qubit_gate(rp::GateKind::H1, 0, p, q), H, 1e-12));
    }

  // the pulse integers move only the global phase
  Mat2 h00 = rp::single_qubit_gate(rp::GateKind::H1, 0, 0, 0);
  Mat2 h21 = rp::single_qubit_gate(rp::GateKind::H1, 0, 2, 1);
  CHECK(equal_up_to_phase2(h00, h21, 1e-12));

  // U_theta is the bare z pulse
  const double theta = 0.9;
  Mat2 ut = rp::single_qubit_gate(rp::GateKind::UTheta1, theta);
  CHECK(std::abs(ut(0, 0) - std::exp(-iu * theta)) < tol_algebra);

  CHECK_THROWS_AS(rp::single_qubit_gate(rp::GateKind::Cnot12),
                  std::invalid_argument);
}

TEST_CASE("two-qubit realization") {
  // qubit 1 is the high bit: C12 swaps |10> and |11>
  Mat4 c = rp::realize_gate({rp::GateKind::Cnot12, 0.0, 0, 0});
  Mat4 want = Mat4::Zero();
  want(0, 0) = want(1, 1) = want(2, 3) = want(3, 2) = 1.0;
  CHECK((c - want).cwiseAbs().maxCoeff() < tol_algebra);

  // X1 acts on the high bit only
  Mat4 x1 = rp::realize_gate({rp::GateKind::X1, 0.0, 0, 0});
  Vec4 e0 = Vec4::Zero();
  e0(0) = 1.0;
  Vec4 mapped = x1 * e0;  // |00> -> |10> up to the pulse phase
  CHECK(std::abs(std::abs(mapped(2)) - 1.0) < tol_algebra);

  for (auto kind : {rp::GateKind::X1, rp::GateKind::Y1, rp::GateKind::Z1,
                    rp::GateKind::S1, rp::GateKind::H1, rp::GateKind::UTheta1,
                    rp::GateKind::Cnot12}) {
    Mat4 u = rp::realize_gate({kind, 0.4, 1, 1});
    CHECK((u * u.adjoint() - Mat4::Identity()).cwiseAbs().maxCoeff() <
          tol_algebra);
  }
}

TEST_CASE("gate name round trip") {
  for (const char* name : {"X1", "Y1", "Z1", "S1", "H1", "Utheta1", "C12"}) {
    rp::GateLabel g = rp::gate_from_name(name, 0.3);
    CHECK(rp::gate_name(g) == name);
  }
  CHECK_THROWS_AS(rp::gate_from_name("Q7"), std::invalid_argument);
}

TEST_CASE("word product order and the readout word") {
  CHECK_THROWS_AS(rp::word_matrix({}), std::invalid_argument);

  rp::GateWord ucb_word = {rp::gate_from_name("C12"), rp::gate_from_name("H1"),
                           rp::gate_from_name("C12")};
  Mat4 w = rp::word_matrix(ucb_word);
  CHECK(equal_up_to_phase4(w, measurement::u_cb().u, 1e-12));
}

TEST_CASE("outcome mapping") {
  CHECK(rp::outcome_from_bits(0, 0) == rp::Outcome::O00);
  CHECK(rp::outcome_from_bits(0, 1) == rp::Outcome::O01);
  CHECK(rp::outcome_from_bits(1, 1) == rp::Outcome::O11);
  CHECK_THROWS_AS(rp::outcome_from_bits(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(rp::outcome_from_bits(2, 0), std::invalid_argument);
}

TEST_CASE("repreparation words rebuild the pair exactly") {
  for (double theta : {0.0, 0.3, M_PI / 4, 1.0, 1.4, M_PI / 2}) {
    auto [w00, s00] = rp::reprepare(rp::Outcome::O00, theta);
    CHECK(s00.basis == Basis::bell());
    CHECK(fidelity_pure(s00, make_initial(1, theta)) >= 1.0 - 1e-10);
    CHECK(w00.size() == 3);

    auto [w01, s01] = rp::reprepare(rp::Outcome::O01, theta);
    CHECK(fidelity_pure(s01, make_initial(2, theta)) >= 1.0 - 1e-10);
    CHECK(w01.size() == 8);

    auto [w11, s11] = rp::reprepare(rp::Outcome::O11, theta);
    CHECK(fidelity_pure(s11, make_initial(2, theta)) >= 1.0 - 1e-10);
    CHECK(w11.size() == 9);
  }

  // spot checks of the degenerate angles
  auto [w, s] = rp::reprepare(rp::Outcome::O01, M_PI / 2);
  (void)w;
  CHECK(std::abs(std::abs(s.amps(1)) - 1.0) < 1e-10);  // beta_01

  auto [w2, s2] = rp::reprepare(rp::Outcome::O11, M_PI / 3);
  (void)w2;
  CHECK(std::abs(std::abs(s2.amps(1)) - std::sin(M_PI / 3)) < 1e-10);
  CHECK(std::abs(std::abs(s2.amps(2)) - std::cos(M_PI / 3)) < 1e-10);
}

TEST_CASE("word structure matches the published sequences") {
  auto [w01, s01] = rp::reprepare(rp::Outcome::O01, 0.5);
  (void)s01;
  std::vector<std::string> got;
  for (const auto& g : w01) got.push_back(rp::gate_name(g));
  std::vector<std::string> want = {"C12", "H1", "C12",      "Y1",
                                   "S1",  "H1", "Utheta1", "H1"};
  CHECK(got == want);

  auto [w11, s11] = rp::reprepare(rp::Outcome::O11, 0.5);
  (void)s11;
  got.clear();
  for (const auto& g : w11) got.push_back(rp::gate_name(g));
  want = {"C12", "H1", "C12", "Y1", "S1", "X1", "H1", "Utheta1", "H1"};
  CHECK(got == want);
}

TEST_CASE("kernel identity") {
  for (double theta : {0.0, 0.2, M_PI / 4, 1.0, M_PI / 2}) {
    CHECK(rp::kernel_identity_check(theta, 0));
    CHECK(rp::kernel_identity_check(theta, 1));
  }
}
