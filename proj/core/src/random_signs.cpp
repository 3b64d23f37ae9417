#include "fiblcm/random_signs.hpp"

#include <cmath>
#include <stdexcept>

#include "fiblcm/constants.hpp"
#include "fiblcm/lcm_oracle.hpp"
#include "fiblcm/totient_sums.hpp"
#include "parallel.hpp"

namespace fiblcm {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::vector<Sign> RandomSignSource::take(std::size_t count) {
  std::vector<Sign> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

std::uint64_t RandomSignSource::trial_seed(std::uint64_t master_seed,
                                           std::uint64_t trial_index) {
  return splitmix64(master_seed ^ (0x9E3779B97F4A7C15ull * (trial_index + 1)));
}

double exclusion_probability(long d, long n) {
  if (d < 1 || n < 1)
    throw std::invalid_argument("exclusion_probability: need d, n >= 1");
  long exponent = (d % 2 == 0) ? n / d : n / (2 * d);
  return std::ldexp(1.0, static_cast<int>(-4 * exponent));  // 16^-exponent
}

double closed_form_expectation(long n) {
  if (n < 1)
    throw std::invalid_argument("closed_form_expectation: need n >= 1");
  TotientSieve sieve(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (long d = 1; d <= n; ++d)
    sum += static_cast<double>(sieve.phi(d)) *
           (1.0 - exclusion_probability(d, n));
  return kLogAlpha * sum;
}

double limit_constant(double eps) { return 15.0 * dilog(1.0 / 16.0, eps) / 2.0; }

MonteCarloSummary monte_carlo(long n, long trials, std::uint64_t seed) {
  if (n < 5) throw std::invalid_argument("monte_carlo: need n >= 5");
  if (trials < 2) throw std::invalid_argument("monte_carlo: need trials >= 2");

  MonteCarloSummary summary;
  summary.n = n;
  summary.trials = trials;
  summary.seed = seed;
  summary.trial_logs.assign(trials, 0.0);

  detail::parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
    RandomSignSource source(RandomSignSource::trial_seed(seed, t));
    std::vector<Sign> signs = source.take(static_cast<std::size_t>(n));
    summary.trial_logs[t] = lcm_shifted(signs, n, 3).log_lcm;
  });

  double sum = 0.0;
  for (double v : summary.trial_logs) sum += v;
  summary.mean_log_lcm = sum / trials;
  double ss = 0.0;
  for (double v : summary.trial_logs) {
    double d = v - summary.mean_log_lcm;
    ss += d * d;
  }
  summary.std_error = std::sqrt(ss / (trials - 1)) / std::sqrt(trials);
  summary.closed_form = closed_form_expectation(n);
  summary.limit_slope = kLcmSlope * limit_constant();
  return summary;
}

}  // namespace fiblcm
