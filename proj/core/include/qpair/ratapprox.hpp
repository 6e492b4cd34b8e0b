#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qpair::ratapprox {

// First k decimal digits of j: floor(j*10^k)/10^k.  j in (0,1], k in [1,12].
double truncate_digits(double j, int k);

// Rational approximant Q = s/(2n) of the coupling ratio j together with the
// defect it leaves and the discrimination cost it implies.
struct ApproxCandidate {
  long long n = 1;
  long long s = 0;
  long long p = 0, q = 2;  // s/(2n) in lowest terms p/q
  double Q = 0.0;          // s/(2n)
  double delta = 0.0;      // j_true - Q
  double cost = 0.0;       // sin^2(2 n pi delta)
};

// Best candidate under k-digit knowledge of j_true.  Candidates: every
// decimal truncation of length 1..k reduced to lowest terms (denominator
// doubled when odd so Q keeps the s/(2n) shape), plus the scan n = 1..n_max
// with s = round(2 n j_known).  Cost is evaluated against the true j; ties
// prefer smaller n.
ApproxCandidate search_best(double j_true, int k, long long n_max);

struct SweepRecord {
  double j_true = 0.0;
  double j_known = 0.0;
  ApproxCandidate best;
  double one_minus_f_max = 0.0;  // best.cost (theta = 0 worst case)
  double omega = 0.0;            // empirical CDF of one_minus_f_max
};

struct SweepResult {
  std::vector<SweepRecord> records;  // ordered by j_true
  // cumulative distribution: (cost, fraction of samples <= cost), sorted
  std::vector<std::pair<double, double>> omega;
};

// Draws j_samples values of j_true uniformly on (0,1] from the seeded
// generator, searches each one, and reports the 1-F landscape with its
// cumulative distribution.  Bit-exact for a fixed seed; threads only split
// the per-sample searches.
SweepResult sweep(int j_samples, int k, long long n_max, std::uint64_t seed,
                  int threads = 1);

}  // namespace qpair::ratapprox
