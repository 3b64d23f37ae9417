#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fiblcm/fibonacci.hpp"

namespace fiblcm {

// Periodic +-1 sequence s_1, s_2, ... given by one period.
class SignPattern {
 public:
  explicit SignPattern(std::vector<Sign> signs);

  long period() const { return static_cast<long>(signs_.size()); }
  Sign sign(long n) const;  // s_n for n >= 1
  int value(long n) const { return sign_value(sign(n)); }
  std::string text() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::vector<Sign> signs_;
};

inline constexpr std::size_t kDefaultMaxPeriod = 64;

// Builds a pattern from a string of '+' and '-'.  Rejects empty input,
// foreign characters (diagnostic names the 1-based position) and periods
// beyond max_period, which bounds the modulus used by the residue and
// cover machinery.
SignPattern parse_pattern(std::string_view text,
                          std::size_t max_period = kDefaultMaxPeriod);

// Indices h in [2, n/2] for which the shifted terms F_i + s_i contribute
// the factor F_h (fib_indices) or L_h (lucas_indices).  Membership of h
// depends only on the four signs s_{2h-2}, s_{2h-1}, s_{2h+1}, s_{2h+2}.
std::vector<long> fib_indices(const SignPattern& p, long n);
std::vector<long> lucas_indices(const SignPattern& p, long n);

// Union of divisors(h) over fib_indices and d_prime(h) over lucas_indices:
// the subscripts d whose primitive part Phi_d enters the lcm.
std::vector<long> phi_index_set(const SignPattern& p, long n);

// Residue classes mod 2T describing the two index sets: for every h >= 2,
// h is in fib_indices (lucas_indices) iff h mod modulus, normalized into
// [1, modulus], lies in fib_residues (lucas_residues).
struct ResidueSets {
  long modulus;  // 2 * period
  std::vector<long> fib_residues;
  std::vector<long> lucas_residues;
};

ResidueSets residue_sets(const SignPattern& p);

}  // namespace fiblcm
