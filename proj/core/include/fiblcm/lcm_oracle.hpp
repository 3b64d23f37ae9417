#pragma once

#include <gmpxx.h>

#include <span>
#include <utility>
#include <vector>

#include "fiblcm/sign_patterns.hpp"

namespace fiblcm {

// One exact lcm(F_start + s_start, ..., F_n + s_n) computation.
struct LcmRun {
  long start_index;
  long n;
  mpz_class lcm_value;
  double log_lcm;  // natural log, via log_big
};

// start must be >= 3 (F_1 + s and F_2 + s can vanish) and n >= start.
// The span overload reads signs[i - 1] as the sign of F_i + s_i.
LcmRun lcm_shifted(const SignPattern& p, long n, long start = 3);
LcmRun lcm_shifted(std::span<const Sign> signs, long n, long start = 3);

// Single pass recording a snapshot at each checkpoint (ascending, all
// >= start).  Snapshot k has n = checkpoints[k].
std::vector<LcmRun> lcm_checkpoints(const SignPattern& p,
                                    std::span<const long> checkpoints,
                                    long start = 3);

// Unshifted reference lcm(F_1, ..., F_n); log grows like kLcmSlope * n^2.
LcmRun lcm_fibonacci(long n);

// The shifted terms F_i + s_i for i in [start, n], index-ascending.
std::vector<mpz_class> shifted_terms(const SignPattern& p, long n,
                                     long start = 3);

// Left fold vs. balanced tree: both produce the identical integer; the
// tree shape only matters for speed.
mpz_class lcm_reduce_sequential(std::span<const mpz_class> terms);
mpz_class lcm_reduce_tree(std::span<const mpz_class> terms);

// log lcm_shifted(p, n, start) / (kLcmSlope * n^2); converges to the
// pattern constant as n grows.
double empirical_slope(const SignPattern& p, long n, long start = 3);

// Fibonacci and Lucas subscripts occurring when each F_i + s_i,
// i in [5, n], is written as one Fibonacci times one Lucas factor.
// Only subscripts >= 2 are reported (F_1, F_2, L_1 are units).
std::pair<std::vector<long>, std::vector<long>> factor_index_sets(
    const SignPattern& p, long n);

}  // namespace fiblcm
