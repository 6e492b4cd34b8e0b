#include "qpair/measurement.hpp"

#include <cmath>
#include <stdexcept>

namespace qpair::measurement {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Mat4 diag4(double a, double b, double c, double d) {
  Mat4 m = Mat4::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return m;
}

double expectation(const PureState& s, const Mat4& e) {
  const complexd v = s.amps.dot(e * s.amps);
  return v.real();
}

void check_angles(double theta, int n) {
  require(theta >= 0.0 && theta <= M_PI_2 + tol_algebra,
          "theta must lie in [0, pi/2]");
  require(n >= 1, "n must be a positive integer");
}

}  // namespace

MeasurementSet builtin_set(SetLabel label, double theta) {
  MeasurementSet ms;
  ms.label = label;
  switch (label) {
    case SetLabel::MC:
      ms.basis = Basis::computational();
      break;
    case SetLabel::MB:
      ms.basis = Basis::bell();
      // partition {b00, b10} | {b01, b11}
      ms.e1 = diag4(1, 0, 1, 0);
      ms.e2 = diag4(0, 1, 0, 1);
      return ms;
    case SetLabel::MBPrime:
      ms.basis = Basis::bell();
      break;
    case SetLabel::MR:
      ms.basis = Basis::rotated(theta);
      break;
    case SetLabel::Custom:
      throw std::invalid_argument("no builtin Custom set");
  }
  // the remaining three all pair positions {0,3} against {1,2}
  ms.e1 = diag4(1, 0, 0, 1);
  ms.e2 = diag4(0, 1, 1, 0);
  return ms;
}

MeasurementSet change_basis(const MeasurementSet& ms, const Basis& target) {
  if (ms.basis == target) return ms;
  const Mat4 m = basis_transfer(ms.basis, target);
  MeasurementSet out;
  out.label = ms.label;
  out.basis = target;
  out.e1 = m * ms.e1 * m.adjoint();
  out.e2 = m * ms.e2 * m.adjoint();
  out.e_inc = m * ms.e_inc * m.adjoint();
  return out;
}

DiscriminationResult helstrom(const MeasurementSet& ms, const PureState& s1,
                              const PureState& s2) {
  require(s1.basis == ms.basis && s2.basis == ms.basis,
          "helstrom needs states in the set's basis; convert first");
  auto clamp01 = [](double p) { return std::min(1.0, std::max(0.0, p)); };
  DiscriminationResult r;
  r.p_h1 = clamp01(expectation(s1, ms.e1));
  r.p_h2 = clamp01(expectation(s2, ms.e2));
  r.p_inconclusive = clamp01(
      0.5 * (expectation(s1, ms.e_inc) + expectation(s2, ms.e_inc)));
  r.avg_fidelity = 0.5 * (r.p_h1 + r.p_h2);
  return r;
}

std::pair<PureState, PureState> reconstructed_states(double theta, int n,
                                                     double delta) {
  check_angles(theta, n);
  const double x = 2.0 * n * M_PI * delta;
  const complexd ph = std::exp(iu * x);
  const double cx = std::cos(x), sx = std::sin(x);
  const double ct = std::cos(theta), st = std::sin(theta);
  Vec4 a1, a2;
  a1 << ph * cx, 0.0, -iu * ph * sx, 0.0;
  a2 << iu * ph * ct * sx, st, -ph * ct * cx, 0.0;
  return {make_state(a1, Basis::bell()), make_state(a2, Basis::bell())};
}

double average_fidelity(const MeasurementSet& ms, double theta, int n,
                        double delta, bool repreparation_perfect) {
  auto [r1, r2] = reconstructed_states(theta, n, delta);
  const PureState premeasured[2] = {qpair::change_basis(r1, ms.basis),
                                    qpair::change_basis(r2, ms.basis)};
  const PureState target[2] = {
      qpair::change_basis(make_initial(1, theta), ms.basis),
      qpair::change_basis(make_initial(2, theta), ms.basis)};
  const Mat4* ops[3] = {&ms.e1, &ms.e2, &ms.e_inc};
  double total = 0.0;
  for (int j = 0; j < 2; ++j) {
    if (repreparation_perfect) {
      // identified outcome k is reprepared exactly as target[k];
      // inconclusive rounds keep the premeasured state untouched
      for (int k = 0; k < 2; ++k)
        total += expectation(premeasured[j], *ops[k]) *
                 fidelity_pure(target[j], target[k]);
      total += expectation(premeasured[j], ms.e_inc) *
               fidelity_pure(target[j], premeasured[j]);
    } else {
      // no repreparation: keep the collapsed state E_k|psi>/sqrt(p)
      for (const Mat4* e : ops)
        total += std::norm(target[j].amps.dot(*e * premeasured[j].amps));
    }
  }
  return 0.5 * total;
}

double fidelity_computational(double theta) {
  const double c = std::cos(theta);
  return 1.0 - 0.5 * c * c;
}

double fidelity_bell_prime(double theta, int n, double delta) {
  check_angles(theta, n);
  const double s = std::sin(2.0 * n * M_PI * delta);
  const double c = std::cos(theta);
  return 1.0 - 0.5 * s * s * (1.0 + c * c);
}

std::array<TableEntry, 12> table_one(double theta, int n, double delta) {
  auto [r1, r2] = reconstructed_states(theta, n, delta);
  const Basis bases[3] = {Basis::computational(), Basis::bell(),
                          Basis::rotated(theta)};
  static const char* const labels[12] = {"00", "01", "10", "11",
                                         "b00", "b01", "b10", "b11",
                                         "r00", "r01", "r10", "r11"};
  std::array<TableEntry, 12> table;
  for (int b = 0; b < 3; ++b) {
    const Vec4 a1 = qpair::change_basis(r1, bases[b]).amps;
    const Vec4 a2 = qpair::change_basis(r2, bases[b]).amps;
    for (int i = 0; i < 4; ++i) {
      TableEntry& e = table[4 * b + i];
      e.label = labels[4 * b + i];
      e.p1 = std::norm(a1(i));
      e.p2 = std::norm(a2(i));
    }
  }
  return table;
}

Unitary4 commutant_member(complexd a11, complexd a12, complexd a21,
                          complexd a22, complexd b11, complexd b12,
                          complexd b21, complexd b22, const Basis& basis) {
  const Mat2 blocks[2] = {(Mat2() << a11, b11, b12, a12).finished(),
                          (Mat2() << a21, b21, b22, a22).finished()};
  for (const Mat2& blk : blocks)
    require((blk * blk.adjoint() - Mat2::Identity()).cwiseAbs().maxCoeff() <
                tol_eigen,
            "commutant blocks must be unitary");
  Mat4 m = Mat4::Zero();
  m(0, 0) = a11;
  m(0, 3) = b11;
  m(3, 0) = b12;
  m(3, 3) = a12;
  m(1, 1) = a21;
  m(1, 2) = b21;
  m(2, 1) = b22;
  m(2, 2) = a22;
  return make_unitary(m, basis);
}

Unitary4 u_cb() {
  static const Mat4 m = [] {
    const double r = 1.0 / std::sqrt(2.0);
    Mat4 t = Mat4::Zero();
    t(0, 0) = r;  t(0, 3) = r;
    t(1, 1) = r;  t(1, 2) = r;
    t(2, 1) = r;  t(2, 2) = -r;
    t(3, 0) = r;  t(3, 3) = -r;
    return t;
  }();
  return make_unitary(m, Basis::computational());
}

Unitary4 u_br(double theta) {
  return make_unitary(rotated_to_bell(theta), Basis::bell());
}

MeasurementSet optimal_povm(const PureState& b1, const PureState& b2) {
  const Vec4 v1 = b1.amps;
  const Vec4 v2 = qpair::change_basis(b2, b1.basis).amps;
  const double v = std::abs(v1.dot(v2));
  const Mat4 p1 = v1 * v1.adjoint();
  const Mat4 p2 = v2 * v2.adjoint();
  // projector onto span{v1, v2}; rank drops to 1 for (anti)parallel inputs
  Mat4 span = p1;
  const Vec4 resid = v2 - v1 * v1.dot(v2);
  if (resid.norm() > 1e-9) {
    const Vec4 u2 = resid.normalized();
    span += u2 * u2.adjoint();
  }
  MeasurementSet ms;
  ms.label = SetLabel::Custom;
  ms.basis = b1.basis;
  ms.e1 = (span - p2) / (1.0 + v);
  ms.e2 = (span - p1) / (1.0 + v);
  ms.e_inc = Mat4::Identity() - ms.e1 - ms.e2;
  return ms;
}

std::vector<CriticalProbability> bell_diagonal_optima(double theta, int n,
                                                      double delta) {
  auto [r1, r2] = reconstructed_states(theta, n, delta);
  const double x = 2.0 * n * M_PI * delta;
  const double cx2 = std::cos(x) * std::cos(x);
  const double sx2 = std::sin(x) * std::sin(x);
  const double ct2 = std::cos(theta) * std::cos(theta);
  const double st2 = std::sin(theta) * std::sin(theta);
  const std::vector<CriticalProbability> out = {
      {1, "b00", std::norm(r1.amps(0))},
      {1, "b10", std::norm(r1.amps(2))},
      {2, "b00", std::norm(r2.amps(0))},
      {2, "b10", std::norm(r2.amps(2))},
      {2, "b01", std::norm(r2.amps(1))},
  };
  const double closed[5] = {cx2, sx2, sx2 * ct2, cx2 * ct2, st2};
  for (int i = 0; i < 5; ++i)
    if (std::abs(out[i].value - closed[i]) > 1e-9)
      throw std::logic_error("critical probability drifted from closed form");
  return out;
}

std::pair<PureState, PureState> extended_orthogonal_set(double theta, int n,
                                                        double delta) {
  check_angles(theta, n);
  const double x = 2.0 * n * M_PI * delta;
  const complexd mph = std::exp(-iu * x);
  const double cx = std::cos(x), sx = std::sin(x);
  const double ct = std::cos(theta), st = std::sin(theta);
  Vec4 a3, a4;
  a3 << iu * mph * st * sx, -mph * mph * ct, -mph * st * cx, 0.0;
  a4 << 0.0, 0.0, 0.0, 1.0;
  return {make_state(a3, Basis::bell()), make_state(a4, Basis::bell())};
}

}  // namespace qpair::measurement
