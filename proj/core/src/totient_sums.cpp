#include "fiblcm/totient_sums.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fiblcm/progression_cover.hpp"

namespace fiblcm {
namespace {

constexpr double kThreeOverPiSquared =
    3.0 / (std::numbers::pi * std::numbers::pi);

long floor_bound(double x) { return static_cast<long>(std::floor(x)); }

}  // namespace

double dilog(double z, double eps) {
  if (!(z > 0.0 && z < 1.0))
    throw std::domain_error("dilog: z must be in (0, 1)");
  if (!(eps > 0.0)) throw std::domain_error("dilog: eps must be positive");
  double sum = 0.0;
  double power = 1.0;
  for (long k = 1;; ++k) {
    power *= z;
    sum += power / (static_cast<double>(k) * k);
    // Remaining tail is below z^(k+1) / ((k+1)^2 (1-z)).
    double tail = power * z /
                  ((static_cast<double>(k + 1) * (k + 1)) * (1.0 - z));
    if (tail < eps) break;
  }
  return sum;
}

TotientSieve::TotientSieve(std::size_t limit) {
  if (limit < 1)
    throw std::invalid_argument("TotientSieve: limit must be >= 1");
  phi_.assign(limit + 1, 0);
  phi_[1] = 1;
  std::vector<std::uint32_t> primes;
  for (std::size_t i = 2; i <= limit; ++i) {
    if (phi_[i] == 0) {  // untouched = prime
      phi_[i] = static_cast<std::uint32_t>(i - 1);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > limit / i) break;
      if (i % p == 0) {
        phi_[p * i] = phi_[i] * p;
        break;
      }
      phi_[p * i] = phi_[i] * (p - 1);
    }
  }
}

std::uint64_t TotientSieve::phi(std::size_t n) const {
  if (n < 1 || n > limit())
    throw std::out_of_range("TotientSieve::phi: n outside [1, limit]");
  return phi_[n];
}

mpz_class TotientSieve::progression_sum(long r, long m, double x) const {
  if (m < 1 || r < 1 || r > m)
    throw std::invalid_argument("progression_sum: need 1 <= r <= m");
  if (!(x >= 1)) throw std::invalid_argument("progression_sum: need x >= 1");
  long bound = floor_bound(x);
  if (bound > static_cast<long>(limit()))
    throw std::out_of_range("progression_sum: x exceeds the sieve limit");
  mpz_class sum = 0;
  for (long n = r; n <= bound; n += m) sum += phi_[n];
  return sum;
}

double TotientSieve::weighted_progression_sum(long r, long m, double x,
                                              double z) const {
  if (m < 1 || r < 1 || r > m)
    throw std::invalid_argument("weighted_progression_sum: need 1 <= r <= m");
  if (!(x >= 1))
    throw std::invalid_argument("weighted_progression_sum: need x >= 1");
  if (!(z > 0.0 && z < 1.0))
    throw std::domain_error("weighted_progression_sum: z must be in (0, 1)");
  long bound = floor_bound(x);
  if (bound > static_cast<long>(limit()))
    throw std::out_of_range("weighted_progression_sum: x exceeds the sieve limit");
  double sum = 0.0;
  for (long n = r; n <= bound; n += m) {
    double k = std::floor(x / static_cast<double>(n));
    sum += static_cast<double>(phi_[n]) * (1.0 - std::pow(z, k));
  }
  return sum;
}

SumCheckReport check_progression_sum(const TotientSieve& sieve, long r, long m,
                                     double x) {
  SumCheckReport report;
  report.r = r;
  report.m = m;
  report.x = x;
  report.exact_sum = sieve.progression_sum(r, m, x);
  double c = to_double(density_constant(r, m));
  report.predicted = kThreeOverPiSquared * c * x * x;
  report.relative_error =
      std::abs(report.exact_sum.get_d() - report.predicted) / report.predicted;
  return report;
}

WeightedSumCheckReport check_weighted_progression_sum(const TotientSieve& sieve,
                                                      long r, long m, double x,
                                                      double z) {
  WeightedSumCheckReport report;
  report.r = r;
  report.m = m;
  report.x = x;
  report.z = z;
  report.exact_sum = sieve.weighted_progression_sum(r, m, x, z);
  double c = to_double(density_constant(r, m));
  report.predicted =
      kThreeOverPiSquared * c * (1.0 - z) * dilog(z) / z * x * x;
  report.relative_error =
      std::abs(report.exact_sum - report.predicted) / report.predicted;
  return report;
}

}  // namespace fiblcm
