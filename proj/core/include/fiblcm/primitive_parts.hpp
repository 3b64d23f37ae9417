#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace fiblcm {

std::uint64_t euler_phi(std::uint64_t n);

// All positive divisors of n, ascending.
std::vector<long> divisors(long n);

// Divisors of 2n that do not divide n, ascending.
std::vector<long> d_prime(long n);

// Natural log of a positive big integer, computed from the bit length and
// the top 64 bits.  Relative error below 2^-50.
double log_big(const mpz_class& x);

// Primitive parts Phi_d of the Fibonacci sequence: the positive integers
// with F_n = prod_{d | n} Phi_d and L_n = prod_{d in d_prime(n)} Phi_d.
// Built by exact division of F_n by the Phi of the proper divisors of n;
// an inexact division at any step throws (it would mean the table is
// corrupt, not that the input is bad).
class PhiTable {
 public:
  explicit PhiTable(long bound);

  long bound() const { return static_cast<long>(values_.size()) - 1; }
  const mpz_class& value(long d) const;

 private:
  std::vector<mpz_class> values_;  // values_[d] = Phi_d, d in [1, bound]
};

}  // namespace fiblcm
