#include "qpair/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "qpair/dynamics.hpp"
#include "qpair/measurement.hpp"
#include "qpair/ratapprox.hpp"
#include "qpair/repreparation.hpp"

namespace qpair::cli {
namespace {

namespace dyn = qpair::dynamics;
namespace msr = qpair::measurement;
namespace rep = qpair::repreparation;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

dyn::HamiltonianParams physics(const ExperimentConfig& c) {
  return dyn::HamiltonianParams::make(c.j, c.b1, c.b2);
}

dyn::ControlParams control(const ExperimentConfig& c,
                           const dyn::HamiltonianParams& p) {
  if (c.m == ExperimentConfig::m_auto)
    return dyn::make_control_auto_m(p, c.n, c.s, c.t);
  return dyn::make_control(p, c.n, c.m, c.s, c.t);
}

struct PipelineBreakdown {
  double prob[2][4] = {};  // readout record 00,01,10,11 per input state
  double fid[2][4] = {};   // fidelity recovered from that record
  double average = 0.0;
};

// U_CB + computational readout + Table II repreparation on both inputs.
PipelineBreakdown breakdown(const PureState& b1pp, const PureState& b2pp,
                            double theta) {
  const PureState originals[2] = {make_initial(1, theta),
                                  make_initial(2, theta)};
  const PureState premeasured[2] = {b1pp, b2pp};
  const Mat4& ucb = msr::u_cb().u;
  // repreparation result per readout record; |10> has no word
  PureState reprepared[4];
  bool has_word[4] = {};
  for (int idx : {0, 1, 3}) {
    const auto out = rep::outcome_from_bits(idx / 2, idx % 2);
    reprepared[idx] = rep::reprepare(out, theta).second;
    has_word[idx] = true;
  }
  PipelineBreakdown b;
  for (int j = 0; j < 2; ++j) {
    const Vec4 w =
        ucb * change_basis(premeasured[j], Basis::computational()).amps;
    for (int idx = 0; idx < 4; ++idx) {
      b.prob[j][idx] = std::norm(w(idx));
      b.fid[j][idx] =
          has_word[idx] ? fidelity_pure(originals[j], reprepared[idx]) : 0.0;
      b.average += 0.5 * b.prob[j][idx] * b.fid[j][idx];
    }
  }
  return b;
}

void push_state(RunReport& r, const std::string& name, const PureState& s) {
  r.states.emplace_back(name, change_basis(s, Basis::bell()).amps);
}

void push(RunReport& r, const std::string& name, double v) {
  r.scalars.emplace_back(name, v);
}

RunReport run_evolve(const ExperimentConfig& c) {
  RunReport r;
  const auto p = physics(c);
  const dyn::DimensionlessTime t(c.t);
  const PureState s1 = dyn::distort_analytic(p, t, 1, c.theta);
  const PureState s2 = dyn::distort_analytic(p, t, 2, c.theta);
  push_state(r, "beta1_prime", s1);
  push_state(r, "beta2_prime", s2);
  push(r, "r", p.R);
  push(r, "j_over_r", p.j);
  push(r, "b_plus", p.b_plus);
  push(r, "b_minus", p.b_minus);
  push(r, "f1_vs_initial", fidelity_pure(make_initial(1, c.theta), s1));
  push(r, "f2_vs_initial", fidelity_pure(make_initial(2, c.theta), s2));
  push(r, "trace_distance", trace_distance(to_density(s1), to_density(s2)));
  push(r, "readout_distance_computational",
       readout_distance(to_density(s1), to_density(s2),
                        Basis::computational()));
  push(r, "concurrence_1", concurrence(s1));
  push(r, "concurrence_2", concurrence(s2));
  return r;
}

RunReport run_reconstruct(const ExperimentConfig& c) {
  RunReport r;
  const auto p = physics(c);
  const auto ctl = control(c, p);
  const PureState b1 = dyn::reconstruct(p, ctl, 1, c.theta);
  const PureState b2 = dyn::reconstruct(p, ctl, 2, c.theta);
  push_state(r, "beta1_pp", b1);
  push_state(r, "beta2_pp", b2);
  push(r, "m_used", ctl.m);
  push(r, "t_pulse", ctl.T);
  push(r, "delta_b_plus", ctl.delta_b_plus);
  push(r, "q", ctl.Q);
  push(r, "delta", ctl.delta);
  push(r, "f1_vs_initial", fidelity_pure(make_initial(1, c.theta), b1));
  push(r, "f2_vs_initial", fidelity_pure(make_initial(2, c.theta), b2));
  push(r, "f_do_nothing", dyn::fidelity_do_nothing(c.theta, c.n, ctl.delta));
  return r;
}

RunReport run_discriminate(const ExperimentConfig& c) {
  RunReport r;
  const auto p = physics(c);
  const auto ctl = control(c, p);
  const PureState b1 = dyn::reconstruct(p, ctl, 1, c.theta);
  const PureState b2 = dyn::reconstruct(p, ctl, 2, c.theta);
  msr::MeasurementSet ms;
  switch (c.measurement) {
    case MeasurementChoice::MC:
      ms = msr::builtin_set(msr::SetLabel::MC);
      break;
    case MeasurementChoice::MB:
      ms = msr::builtin_set(msr::SetLabel::MB);
      break;
    case MeasurementChoice::MBPrime:
      ms = msr::builtin_set(msr::SetLabel::MBPrime);
      break;
    case MeasurementChoice::MR:
      ms = msr::builtin_set(msr::SetLabel::MR, c.theta);
      break;
    case MeasurementChoice::Optimal:
      ms = msr::optimal_povm(b1, b2);
      break;
  }
  const auto res = msr::helstrom(ms, change_basis(b1, ms.basis),
                                 change_basis(b2, ms.basis));
  push_state(r, "beta1_pp", b1);
  push_state(r, "beta2_pp", b2);
  push(r, "delta", ctl.delta);
  push(r, "p_h1", res.p_h1);
  push(r, "p_h2", res.p_h2);
  push(r, "p_inconclusive", res.p_inconclusive);
  push(r, "avg_fidelity", res.avg_fidelity);
  switch (c.measurement) {
    case MeasurementChoice::MC:
    case MeasurementChoice::MB:
      push(r, "f_closed", msr::fidelity_computational(c.theta));
      break;
    case MeasurementChoice::MBPrime:
    case MeasurementChoice::MR:
      push(r, "f_closed", msr::fidelity_bell_prime(c.theta, c.n, ctl.delta));
      break;
    case MeasurementChoice::Optimal:
      break;
  }
  return r;
}

RunReport run_pipeline(const ExperimentConfig& c) {
  RunReport r;
  const auto p = physics(c);
  const auto ctl = control(c, p);
  const PureState b1 = dyn::reconstruct(p, ctl, 1, c.theta);
  const PureState b2 = dyn::reconstruct(p, ctl, 2, c.theta);
  const PipelineBreakdown b = breakdown(b1, b2, c.theta);
  push_state(r, "beta1_pp", b1);
  push_state(r, "beta2_pp", b2);
  push(r, "delta", ctl.delta);
  static const char* const record[4] = {"00", "01", "10", "11"};
  for (int j = 0; j < 2; ++j)
    for (int idx = 0; idx < 4; ++idx)
      push(r, std::string("p") + record[idx] + "_" + std::to_string(j + 1),
           b.prob[j][idx]);
  push(r, "avg_fidelity", b.average);
  push(r, "f_bprime_closed",
       msr::fidelity_bell_prime(c.theta, c.n, ctl.delta));
  return r;
}

RunReport run_sweep_theta_delta(const ExperimentConfig& c) {
  RunReport r;
  r.columns = {"theta", "n", "delta", "f_c", "f_bprime", "f_n"};
  const double dmax = 1.0 / (4.0 * c.n);
  for (int i = 0; i < c.theta_points; ++i) {
    const double theta = M_PI_2 * i / (c.theta_points - 1);
    for (int l = 0; l < c.delta_points; ++l) {
      const double delta = dmax * l / (c.delta_points - 1);
      r.rows.push_back({theta, static_cast<double>(c.n), delta,
                        msr::fidelity_computational(theta),
                        msr::fidelity_bell_prime(theta, c.n, delta),
                        dyn::fidelity_do_nothing(theta, c.n, delta)});
    }
  }
  return r;
}

RunReport run_sweep_j(const ExperimentConfig& c) {
  RunReport r;
  r.columns = {"j_true", "j_known", "n",
               "s",      "delta",   "one_minus_f_max",
               "omega"};
  const auto res = qpair::ratapprox::sweep(c.samples, c.k_digits, c.n_max,
                                           c.seed, c.threads);
  for (const auto& rec : res.records)
    r.rows.push_back({rec.j_true, rec.j_known,
                      static_cast<double>(rec.best.n),
                      static_cast<double>(rec.best.s), rec.best.delta,
                      rec.one_minus_f_max, rec.omega});
  return r;
}

nlohmann::ordered_json config_json(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = command_name(c.command);
  j["j"] = c.j;
  j["b1"] = c.b1;
  j["b2"] = c.b2;
  j["theta"] = c.theta;
  j["t"] = c.t;
  j["n"] = c.n;
  if (c.m == ExperimentConfig::m_auto)
    j["m"] = "auto";
  else
    j["m"] = c.m;
  j["s"] = c.s;
  j["k_digits"] = c.k_digits;
  j["n_max"] = c.n_max;
  j["measurement"] = measurement_name(c.measurement);
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["theta_points"] = c.theta_points;
  j["delta_points"] = c.delta_points;
  j["threads"] = c.threads;
  j["format"] = format_name(c.format);
  return j;
}

}  // namespace

Command command_from_name(const std::string& name) {
  if (name == "evolve") return Command::Evolve;
  if (name == "reconstruct") return Command::Reconstruct;
  if (name == "discriminate") return Command::Discriminate;
  if (name == "pipeline") return Command::Pipeline;
  if (name == "sweep-theta-delta") return Command::SweepThetaDelta;
  if (name == "sweep-j") return Command::SweepJ;
  throw std::invalid_argument("unknown command: " + name);
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Evolve:
      return "evolve";
    case Command::Reconstruct:
      return "reconstruct";
    case Command::Discriminate:
      return "discriminate";
    case Command::Pipeline:
      return "pipeline";
    case Command::SweepThetaDelta:
      return "sweep-theta-delta";
    case Command::SweepJ:
      return "sweep-j";
  }
  throw std::logic_error("unreachable command");
}

MeasurementChoice measurement_from_name(const std::string& name) {
  if (name == "mc") return MeasurementChoice::MC;
  if (name == "mb") return MeasurementChoice::MB;
  if (name == "mbprime") return MeasurementChoice::MBPrime;
  if (name == "mr") return MeasurementChoice::MR;
  if (name == "optimal") return MeasurementChoice::Optimal;
  throw std::invalid_argument("unknown measurement set: " + name);
}

std::string measurement_name(MeasurementChoice m) {
  switch (m) {
    case MeasurementChoice::MC:
      return "mc";
    case MeasurementChoice::MB:
      return "mb";
    case MeasurementChoice::MBPrime:
      return "mbprime";
    case MeasurementChoice::MR:
      return "mr";
    case MeasurementChoice::Optimal:
      return "optimal";
  }
  throw std::logic_error("unreachable measurement choice");
}

std::string format_name(Format f) {
  return f == Format::Csv ? "csv" : "json";
}

void ExperimentConfig::validate() const {
  std::vector<std::string> problems;
  auto bad = [&](const std::string& msg) { problems.push_back(msg); };
  const bool uses_physics = command != Command::SweepJ;
  const bool uses_control = command == Command::Reconstruct ||
                            command == Command::Discriminate ||
                            command == Command::Pipeline;
  if (uses_physics) {
    if (!(std::isfinite(j) && std::isfinite(b1) && std::isfinite(b2)))
      bad("couplings j, b1, b2 must be finite");
    else if ((b1 - b2) * (b1 - b2) + 4.0 * j * j <= 0.0)
      bad("R = sqrt((b1-b2)^2 + 4 j^2) must be positive");
    if (!(theta >= 0.0 && theta <= M_PI_2 + 1e-12))
      bad("theta must lie in [0, pi/2] radians");
  }
  if (command == Command::Evolve || uses_control)
    if (!(std::isfinite(t) && t >= 0.0)) bad("t must be finite and >= 0");
  if (uses_control || command == Command::SweepThetaDelta)
    if (n < 1) bad("n must be a positive integer");
  if (uses_control && n >= 1 && !(t < n * M_PI))
    bad("t must be smaller than n*pi so the pulse stage has positive length");
  if (command == Command::Pipeline &&
      measurement != MeasurementChoice::MBPrime)
    bad("pipeline supports only the mbprime measurement");
  if (command == Command::SweepThetaDelta) {
    if (theta_points < 2) bad("theta_points must be at least 2");
    if (delta_points < 2) bad("delta_points must be at least 2");
  }
  if (command == Command::SweepJ) {
    if (samples < 100) bad("samples must be at least 100");
    if (k_digits < 1 || k_digits > 12) bad("k-digits must lie in [1, 12]");
    if (n_max < 1) bad("n-max must be a positive integer");
  }
  if (threads < 1) bad("threads must be a positive integer");
  if (!problems.empty()) {
    std::string msg = "invalid configuration:";
    for (const std::string& p : problems) msg += "\n  - " + p;
    throw config_error(msg);
  }
}

RunReport run(const ExperimentConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  switch (config.command) {
    case Command::Evolve:
      r = run_evolve(config);
      break;
    case Command::Reconstruct:
      r = run_reconstruct(config);
      break;
    case Command::Discriminate:
      r = run_discriminate(config);
      break;
    case Command::Pipeline:
      r = run_pipeline(config);
      break;
    case Command::SweepThetaDelta:
      r = run_sweep_theta_delta(config);
      break;
    case Command::SweepJ:
      r = run_sweep_j(config);
      break;
  }
  r.command = config.command;
  r.config = config;
  r.duration_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return r;
}

std::string to_csv(const RunReport& report) {
  std::string out;
  if (!report.columns.empty()) {
    for (size_t i = 0; i < report.columns.size(); ++i) {
      if (i) out += ',';
      out += report.columns[i];
    }
    out += '\n';
    for (const auto& row : report.rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += fmt(row[i]);
      }
      out += '\n';
    }
    return out;
  }
  out += "key,value\n";
  const auto cfg = config_json(report.config);
  for (const auto& [key, value] : cfg.items()) {
    out += key;
    out += ',';
    out += value.is_string() ? value.get<std::string>() : value.dump();
    out += '\n';
  }
  for (const auto& [name, value] : report.scalars)
    out += name + ',' + fmt(value) + '\n';
  if (!report.states.empty()) {
    out += "\nstate,component,re,im\n";
    for (const auto& [name, amps] : report.states)
      for (int i = 0; i < 4; ++i)
        out += name + ',' + std::to_string(i) + ',' + fmt(amps(i).real()) +
               ',' + fmt(amps(i).imag()) + '\n';
  }
  return out;
}

std::string to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["command"] = command_name(report.command);
  j["config"] = config_json(report.config);
  if (!report.scalars.empty()) {
    auto& s = j["scalars"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : report.scalars) s[name] = value;
  }
  if (!report.states.empty()) {
    auto& s = j["states"] = nlohmann::ordered_json::object();
    for (const auto& [name, amps] : report.states) {
      auto arr = nlohmann::ordered_json::array();
      for (int i = 0; i < 4; ++i)
        arr.push_back({amps(i).real(), amps(i).imag()});
      s[name] = std::move(arr);
    }
  }
  if (!report.columns.empty()) {
    j["columns"] = report.columns;
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) rows.push_back(row);
  }
  return j.dump(2) + "\n";
}

void write_report(const RunReport& report) {
  const std::string payload =
      report.config.format == Format::Csv ? to_csv(report) : to_json(report);
  if (report.config.out.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream f(report.config.out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output file: " +
                                   report.config.out);
  f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  f.flush();
  if (!f) throw std::runtime_error("cannot write output file: " +
                                   report.config.out);
}

double pipeline_average(double theta, int n, double delta) {
  const auto [b1, b2] = msr::reconstructed_states(theta, n, delta);
  return breakdown(b1, b2, theta).average;
}

}  // namespace qpair::cli
