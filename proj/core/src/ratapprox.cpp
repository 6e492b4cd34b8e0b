#include "qpair/ratapprox.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace qpair::ratapprox {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

double pow10(int k) {
  double v = 1.0;
  while (k-- > 0) v *= 10.0;  // exact in double up to 10^22
  return v;
}

ApproxCandidate finish(long long n, long long s, double j_true) {
  ApproxCandidate c;
  c.n = n;
  c.s = s;
  const long long g = std::gcd(std::llabs(s), 2 * n);
  c.p = s / (g ? g : 1);
  c.q = 2 * n / (g ? g : 1);
  c.Q = static_cast<double>(s) / static_cast<double>(2 * n);
  c.delta = j_true - c.Q;
  const double arg = 2.0 * n * M_PI * c.delta;
  c.cost = std::sin(arg) * std::sin(arg);
  return c;
}

// distance of 2n*j to the nearest integer; strictly monotone with the cost
// sin^2(pi * 2n*j - pi*s), which does not depend on s at all
double integer_distance(long long n, double j_true) {
  const double y = 2.0 * static_cast<double>(n) * j_true;
  return std::abs(y - std::nearbyint(y));
}

}  // namespace

double truncate_digits(double j, int k) {
  require(j > 0.0 && j <= 1.0, "j must lie in (0, 1]");
  require(k >= 1 && k <= 12, "k must lie in [1, 12]");
  const double scale = pow10(k);
  return std::floor(j * scale) / scale;
}

ApproxCandidate search_best(double j_true, int k, long long n_max) {
  require(n_max >= 1, "n_max must be positive");
  const double j_known = truncate_digits(j_true, k);
  bool have_best = false;
  ApproxCandidate best;
  double best_dist = 0.0;
  auto consider = [&](long long n, long long s) {
    const double dist = integer_distance(n, j_true);
    if (!have_best || dist < best_dist ||
        (dist == best_dist && n < best.n)) {
      have_best = true;
      best = finish(n, s, j_true);
      best_dist = dist;
    }
  };
  // decimal truncations reduced to lowest terms
  for (int kp = 1; kp <= k; ++kp) {
    const double scale = pow10(kp);
    const long long d = static_cast<long long>(std::floor(j_true * scale));
    const long long den = static_cast<long long>(scale);
    const long long g = std::gcd(d, den);
    const long long p = g ? d / g : 0;
    const long long q = g ? den / g : 1;
    if (q % 2 == 0)
      consider(q / 2, p);
    else
      consider(q, 2 * p);
  }
  // direct scan with the rounded numerator
  for (long long n = 1; n <= n_max; ++n) {
    if (best_dist == 0.0 && n >= best.n) break;  // nothing left to win
    consider(n, std::llround(2.0 * static_cast<double>(n) * j_known));
  }
  return best;
}

SweepResult sweep(int j_samples, int k, long long n_max, std::uint64_t seed,
                  int threads) {
  require(j_samples >= 100, "need at least 100 samples");
  // draw every j first so the sequence is independent of the thread count
  std::mt19937_64 eng(seed);
  std::vector<double> draws(j_samples);
  for (double& j : draws) {
    const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;  // [0,1)
    j = 1.0 - u;                                                    // (0,1]
  }
  std::vector<SweepRecord> records(j_samples);
  auto work = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      SweepRecord& r = records[i];
      r.j_true = draws[i];
      r.j_known = truncate_digits(draws[i], k);
      // tail beyond the known digits stays below one period of the pulse
      if (pow10(k) * (r.j_true - r.j_known) >= 1.0)
        throw std::logic_error("truncation tail bound violated");
      r.best = search_best(draws[i], k, n_max);
      r.one_minus_f_max = r.best.cost;
    }
  };
  const int nthreads = std::max(1, std::min(threads, j_samples));
  if (nthreads == 1) {
    work(0, j_samples);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (j_samples + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      const int begin = t * chunk;
      const int end = std::min(j_samples, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }
  std::sort(records.begin(), records.end(),
            [](const SweepRecord& a, const SweepRecord& b) {
              return a.j_true < b.j_true;
            });
  std::vector<double> costs(j_samples);
  for (int i = 0; i < j_samples; ++i) costs[i] = records[i].one_minus_f_max;
  std::sort(costs.begin(), costs.end());
  SweepResult out;
  for (SweepRecord& r : records) {
    const auto up =
        std::upper_bound(costs.begin(), costs.end(), r.one_minus_f_max);
    r.omega = static_cast<double>(up - costs.begin()) / j_samples;
  }
  out.records = std::move(records);
  out.omega.reserve(j_samples);
  for (int i = 0; i < j_samples; ++i)
    out.omega.emplace_back(costs[i], static_cast<double>(i + 1) / j_samples);
  return out;
}

}  // namespace qpair::ratapprox
