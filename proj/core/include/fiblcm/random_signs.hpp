#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fiblcm/sign_patterns.hpp"

namespace fiblcm {

std::uint64_t splitmix64(std::uint64_t x);

// Deterministic stream of fair +-1 signs.  The generator is std::mt19937_64
// (bit-exact across platforms); sign k is the low bit of the k-th draw,
// one draw per sign.
class RandomSignSource {
 public:
  explicit RandomSignSource(std::uint64_t seed) : gen_(seed) {}

  Sign next() { return (gen_() & 1u) ? Sign::plus : Sign::minus; }
  std::vector<Sign> take(std::size_t count);

  // Sub-seed for one trial: splitmix64(master ^ (golden-gamma * (trial+1))).
  // Trials are reproducible individually and in any order.
  static std::uint64_t trial_seed(std::uint64_t master_seed,
                                  std::uint64_t trial_index);

 private:
  std::mt19937_64 gen_;
};

// 16^(-floor(n * gcd(2, d) / (2d))): probability that no shifted term up
// to index n picks up the primitive part Phi_d under fair random signs.
// Exact for d >= 6; applied to all d >= 1 by the closed form below, where
// the small-d contribution is O(1).
double exclusion_probability(long d, long n);

// E[log lcm(F_3 + s_3, ..., F_n + s_n)] for fair random signs:
// log(alpha) * sum_{d<=n} phi(d) (1 - 16^(-floor(n gcd(2,d) / (2d)))).
double closed_form_expectation(long n);

// 15 Li2(1/16) / 2 ~ 0.4762851: the n^2 slope of the expectation above in
// units of kLcmSlope.
double limit_constant(double eps = 1e-12);

struct MonteCarloSummary {
  long n = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> trial_logs;  // log lcm per trial, by trial index
  double mean_log_lcm = 0;
  double std_error = 0;  // sample stddev / sqrt(trials)
  double closed_form = 0;
  double limit_slope = 0;  // kLcmSlope * limit_constant()
};

// trials independent lcm runs (start index 3) with signs from
// RandomSignSource seeded per trial.  Trials may execute concurrently;
// the reduction is by trial index, so the summary never depends on
// scheduling.  Requires n >= 5 and trials >= 2.
MonteCarloSummary monte_carlo(long n, long trials, std::uint64_t seed);

}  // namespace fiblcm
