#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fiblcm/rational.hpp"
#include "fiblcm/sign_patterns.hpp"

namespace fiblcm {

// The truncated arithmetic progression {d >= 1 : d = residue (mod modulus),
// d <= cutoff_coeff * n} for a scale n supplied at evaluation time.
// residue lies in [1, modulus]; residue == modulus denotes the class of 0.
struct TruncatedProgression {
  long residue;
  long modulus;
  Rational cutoff_coeff;  // in (0, 1]
};

// Finite union of truncated progressions over one common modulus, at most
// one per residue (same-residue truncations are nested, so keeping the
// largest cutoff loses nothing).
struct ProgressionCover {
  long modulus = 1;
  std::vector<TruncatedProgression> progressions;  // residue-ascending
};

// Least t >= 1 (odd t when odd_only) with s * t = r (mod m), if any.
// Solutions recur with period m / gcd(s, m), which divides m, and an odd
// solution, when one exists, appears within two periods; scanning
// t in [1, 2m] is therefore exhaustive.
std::optional<long> minimal_multiplier(long s, long r, long m, bool odd_only);

// Rewrites the union of divisor sets over truncated progressions as a
// union of truncated progressions at modulus 2m.  For input classes
// A_{r,m}(x_coeff * n) with r in `residues`, the output covers exactly
//   union of divisors(j)  over j  (prime_variant = false), or
//   union of d_prime(j)   over j  (prime_variant = true).
// Requires 0 < x_coeff <= 1/2 so every output cutoff stays in (0, 1].
std::vector<TruncatedProgression> divisor_cover(
    const std::vector<long>& residues, long m, const Rational& x_coeff,
    bool prime_variant);

// Quadratic density of totient sums over the class r (mod m): the exact
// rational c with sum of phi over A_{r,m}(x) ~ (3 / pi^2) c x^2.
Rational density_constant(long r, long m);

// Cover of phi_index_set(p, n) at modulus 4T, valid for every n up to the
// boundary elements {1, 2} contributed by the excluded index h = 1.
ProgressionCover progression_cover(const SignPattern& p);

// The asymptotic constant of the pattern: log lcm of the shifted terms
// grows like (3 log alpha / pi^2) * C * n^2 with C exactly rational.
Rational pattern_constant(const SignPattern& p);

// Constants for all 2^period patterns, ordered with '-' before '+'
// (ascending binary with '-' = 0, most significant position first).
std::vector<std::pair<SignPattern, Rational>> enumerate_pattern_constants(
    int period);

// Members of one progression, or of a whole cover, at integer scale n.
std::vector<long> progression_members(const TruncatedProgression& t, long n);
std::vector<long> cover_members(const ProgressionCover& c, long n);

}  // namespace fiblcm
