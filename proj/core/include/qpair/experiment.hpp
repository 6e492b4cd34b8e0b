#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpair/state.hpp"

namespace qpair::cli {

// Invalid configuration (reported with exit code 3 by the CLI, as opposed to
// usage errors (2) and runtime failures such as unwritable paths (4)).
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Command {
  Evolve,
  Reconstruct,
  Discriminate,
  Pipeline,
  SweepThetaDelta,
  SweepJ,
};

enum class MeasurementChoice { MC, MB, MBPrime, MR, Optimal };

enum class Format { Csv, Json };

Command command_from_name(const std::string& name);
std::string command_name(Command c);
MeasurementChoice measurement_from_name(const std::string& name);
std::string measurement_name(MeasurementChoice m);
std::string format_name(Format f);

struct ExperimentConfig {
  static constexpr int m_auto = std::numeric_limits<int>::min();

  Command command = Command::Pipeline;
  // physics (the coupling is exposed as --j on the command line)
  double j = 1.0;
  double b1 = 2.0;
  double b2 = 1.0;
  double theta = M_PI / 4;
  double t = 1.0;  // dimensionless elapsed distortion time
  // control integers
  int n = 2;
  int m = m_auto;  // auto: minimize |delta_b_plus|
  long long s = 2;
  // rational-approximation search
  int k_digits = 5;
  long long n_max = 100000;
  // discrimination
  MeasurementChoice measurement = MeasurementChoice::MBPrime;
  // sweeps
  int samples = 10000;
  std::uint64_t seed = 12345;
  int theta_points = 50;
  int delta_points = 50;
  int threads = 1;
  // output
  std::string out;  // empty: stdout
  Format format = Format::Csv;

  // Checks every field the chosen command consumes; throws config_error with
  // one aggregated message listing all problems.
  void validate() const;
};

struct RunReport {
  Command command = Command::Pipeline;
  ExperimentConfig config;  // echo
  // named state vectors (Bell-basis amplitudes) and named scalars, in
  // emission order
  std::vector<std::pair<std::string, Vec4>> states;
  std::vector<std::pair<std::string, double>> scalars;
  // tabular payload of the sweep commands
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  // wall clock, never serialized (outputs must be byte-identical)
  double duration_ms = 0.0;
};

// Validates, dispatches and times the requested command.
RunReport run(const ExperimentConfig& config);

std::string to_csv(const RunReport& report);
std::string to_json(const RunReport& report);

// Serializes to config.out (stdout when empty); throws std::runtime_error
// when the path cannot be written.
void write_report(const RunReport& report);

// Exact average fidelity of the full chain at defect delta: reconstructed
// pair -> U_CB + computational readout -> repreparation word per record.
// Records without a word contribute zero fidelity.
double pipeline_average(double theta, int n, double delta);

}  // namespace qpair::cli
