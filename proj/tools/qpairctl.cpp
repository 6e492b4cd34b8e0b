// command-line front end for the entangled-pair control pipeline
#include <cmath>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "qpair/experiment.hpp"

int main(int argc, char** argv) {
  namespace qc = qpair::cli;
  CLI::App app{"two-qubit entangled-pair distortion, reconstruction, "
               "discrimination and repreparation pipeline"};
  app.set_config("--config", "", "flat key=value config file");

  qc::ExperimentConfig cfg;
  std::string command;
  std::string measurement = "mbprime";
  std::string format = "csv";
  bool degrees = false;

  app.add_option("--command", command,
                 "evolve | reconstruct | discriminate | pipeline | "
                 "sweep-theta-delta | sweep-j")
      ->required()
      ->check(CLI::IsMember({"evolve", "reconstruct", "discriminate",
                             "pipeline", "sweep-theta-delta", "sweep-j"}))
      ->envname("QPAIR_COMMAND");
  app.add_option("--j", cfg.j, "Heisenberg coupling J")
      ->capture_default_str()
      ->envname("QPAIR_J");
  app.add_option("--b1", cfg.b1, "field on qubit 1")
      ->capture_default_str()
      ->envname("QPAIR_B1");
  app.add_option("--b2", cfg.b2, "field on qubit 2")
      ->capture_default_str()
      ->envname("QPAIR_B2");
  app.add_option("--theta", cfg.theta,
                 "entanglement angle of the second state")
      ->capture_default_str()
      ->envname("QPAIR_THETA");
  app.add_option("--t", cfg.t, "dimensionless distortion time t' = R t")
      ->capture_default_str()
      ->envname("QPAIR_T");
  app.add_option("--n", cfg.n, "loop periods of the reconstruction pulse")
      ->capture_default_str()
      ->envname("QPAIR_N");
  app.add_option("--m", cfg.m,
                 "field-offset integer (default: minimize |delta_b_plus|)")
      ->envname("QPAIR_M");
  app.add_option("--s", cfg.s, "numerator of the approximant Q = s/(2n)")
      ->capture_default_str()
      ->envname("QPAIR_S");
  app.add_option("--k-digits", cfg.k_digits,
                 "known decimal digits of j for sweep-j")
      ->capture_default_str()
      ->envname("QPAIR_K_DIGITS");
  app.add_option("--n-max", cfg.n_max, "largest n scanned by sweep-j")
      ->capture_default_str()
      ->envname("QPAIR_N_MAX");
  app.add_option("--measurement", measurement, "discrimination set")
      ->check(CLI::IsMember({"mc", "mb", "mbprime", "mr", "optimal"}))
      ->capture_default_str()
      ->envname("QPAIR_MEASUREMENT");
  app.add_option("--samples", cfg.samples, "sweep-j sample count")
      ->capture_default_str()
      ->envname("QPAIR_SAMPLES");
  app.add_option("--seed", cfg.seed, "random seed for sweep-j")
      ->capture_default_str()
      ->envname("QPAIR_SEED");
  app.add_option("--theta-points", cfg.theta_points,
                 "sweep-theta-delta grid points along theta")
      ->capture_default_str()
      ->envname("QPAIR_THETA_POINTS");
  app.add_option("--delta-points", cfg.delta_points,
                 "sweep-theta-delta grid points along delta")
      ->capture_default_str()
      ->envname("QPAIR_DELTA_POINTS");
  app.add_option("--threads", cfg.threads, "worker threads for sweep-j")
      ->capture_default_str()
      ->envname("QPAIR_THREADS");
  app.add_option("--out", cfg.out, "output path (default: stdout)")
      ->envname("QPAIR_OUT");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str()
      ->envname("QPAIR_FORMAT");
  app.add_flag("--degrees", degrees, "interpret --theta in degrees")
      ->envname("QPAIR_DEGREES");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.command = qc::command_from_name(command);
  cfg.measurement = qc::measurement_from_name(measurement);
  cfg.format = format == "json" ? qc::Format::Json : qc::Format::Csv;
  if (degrees) cfg.theta *= M_PI / 180.0;

  try {
    qc::write_report(qc::run(cfg));
  } catch (const qc::config_error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
  return 0;
}
