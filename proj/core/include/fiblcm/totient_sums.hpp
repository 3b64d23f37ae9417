#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fiblcm {

// Dilogarithm sum_{k>=1} z^k / k^2 for 0 < z < 1.  The series is cut once
// the tail bound z^(K+1) / ((K+1)^2 (1 - z)) drops below eps.
double dilog(double z, double eps = 1e-12);

// Euler totients phi(1..limit) by linear sieve; immutable once built.
class TotientSieve {
 public:
  explicit TotientSieve(std::size_t limit);

  std::size_t limit() const { return phi_.size() - 1; }
  std::uint64_t phi(std::size_t n) const;

  // Exact sum of phi(n) over n <= x, n = r (mod m), with 1 <= r <= m.
  mpz_class progression_sum(long r, long m, double x) const;

  // Same sum with each term damped by (1 - z^floor(x / n)), 0 < z < 1.
  double weighted_progression_sum(long r, long m, double x, double z) const;

 private:
  std::vector<std::uint32_t> phi_;
};

// Comparison of an exact progression sum against its quadratic prediction
// (3 / pi^2) * c * x^2 with c = density_constant(r, m).
struct SumCheckReport {
  long r = 0;
  long m = 0;
  double x = 0;
  mpz_class exact_sum;
  double predicted = 0;
  double relative_error = 0;  // |exact - predicted| / predicted
};

SumCheckReport check_progression_sum(const TotientSieve& sieve, long r, long m,
                                     double x);

// Weighted variant; the prediction picks up the factor (1-z) Li2(z) / z.
struct WeightedSumCheckReport {
  long r = 0;
  long m = 0;
  double x = 0;
  double z = 0;
  double exact_sum = 0;
  double predicted = 0;
  double relative_error = 0;
};

WeightedSumCheckReport check_weighted_progression_sum(const TotientSieve& sieve,
                                                      long r, long m, double x,
                                                      double z);

}  // namespace fiblcm
