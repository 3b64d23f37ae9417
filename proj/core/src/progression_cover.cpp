#include "fiblcm/progression_cover.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "parallel.hpp"

namespace fiblcm {
namespace {

void keep_largest_cutoff(std::map<long, Rational>& best, long residue,
                         const Rational& theta) {
  auto [it, inserted] = best.try_emplace(residue, theta);
  if (!inserted && theta > it->second) it->second = theta;
}

std::vector<TruncatedProgression> to_progressions(
    const std::map<long, Rational>& best, long modulus) {
  std::vector<TruncatedProgression> out;
  out.reserve(best.size());
  for (const auto& [residue, theta] : best) {
    if (theta <= 0 || theta > 1)
      throw std::logic_error("cover cutoff left (0, 1]");
    out.push_back({residue, modulus, theta});
  }
  return out;
}

}  // namespace

std::optional<long> minimal_multiplier(long s, long r, long m, bool odd_only) {
  if (m < 1 || s < 1 || s > m || r < 1 || r > m)
    throw std::invalid_argument("minimal_multiplier: need 1 <= s, r <= m");
  // Solutions of s t = r (mod m) recur with period m / gcd(s, m), which
  // divides m; an odd solution, when one exists, shows up within two
  // periods.  Scanning t <= 2m is therefore exhaustive.
  long step = odd_only ? 2 : 1;
  for (long t = 1; t <= 2 * m; t += step)
    if ((s * t) % m == r % m) return t;
  return std::nullopt;
}

std::vector<TruncatedProgression> divisor_cover(
    const std::vector<long>& residues, long m, const Rational& x_coeff,
    bool prime_variant) {
  if (m < 1) throw std::invalid_argument("divisor_cover: modulus must be >= 1");
  if (x_coeff <= 0 || 2 * x_coeff > 1)
    throw std::invalid_argument("divisor_cover: x_coeff must be in (0, 1/2]");

  std::map<long, Rational> best;
  for (long r : residues) {
    for (long s = 1; s <= m; ++s) {
      std::optional<long> t = minimal_multiplier(s, r, m, prime_variant);
      if (!t) continue;
      if (prime_variant) {
        // Divisors of 2j not dividing j, for j = r (mod m): the even
        // numbers 2s' with s' = s (mod m), up to 2x / t.
        long residue = (2 * s - 1) % (2 * m) + 1;
        keep_largest_cutoff(best, residue, 2 * x_coeff / *t);
      } else {
        // Class s (mod m) up to x / t, lifted to modulus 2m.
        keep_largest_cutoff(best, s, x_coeff / *t);
        keep_largest_cutoff(best, s + m, x_coeff / *t);
      }
    }
  }
  return to_progressions(best, 2 * m);
}

Rational density_constant(long r, long m) {
  if (m < 1 || r < 1 || r > m)
    throw std::invalid_argument("density_constant: need 1 <= r <= m");
  Rational c = make_rational(1, m);
  long rest = m;
  for (long p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;  // remaining cofactor is prime
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    if (r % p == 0)
      c *= make_rational(p, p + 1);  // 1 / (1 + 1/p)
    else
      c *= make_rational(p * p, p * p - 1);  // 1 / (1 - 1/p^2)
  }
  return c;
}

ProgressionCover progression_cover(const SignPattern& p) {
  ResidueSets rs = residue_sets(p);
  Rational half = make_rational(1, 2);  // index sets are truncated at n / 2
  auto plain = divisor_cover(rs.fib_residues, rs.modulus, half, false);
  auto prime = divisor_cover(rs.lucas_residues, rs.modulus, half, true);

  std::map<long, Rational> best;
  for (const auto& t : plain) keep_largest_cutoff(best, t.residue, t.cutoff_coeff);
  for (const auto& t : prime) keep_largest_cutoff(best, t.residue, t.cutoff_coeff);

  ProgressionCover cover;
  cover.modulus = 2 * rs.modulus;  // 4T
  cover.progressions = to_progressions(best, cover.modulus);
  return cover;
}

Rational pattern_constant(const SignPattern& p) {
  ProgressionCover cover = progression_cover(p);
  Rational c = 0;
  for (const auto& t : cover.progressions)
    c += density_constant(t.residue, cover.modulus) * t.cutoff_coeff *
         t.cutoff_coeff;
  return c;
}

std::vector<std::pair<SignPattern, Rational>> enumerate_pattern_constants(
    int period) {
  if (period < 1 || period > 20)
    throw std::invalid_argument(
        "enumerate_pattern_constants: period must be in [1, 20]");
  std::size_t count = std::size_t{1} << period;
  std::vector<std::pair<SignPattern, Rational>> out;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Sign> signs(period);
    for (int i = 0; i < period; ++i)
      signs[i] = (mask >> (period - 1 - i)) & 1 ? Sign::plus : Sign::minus;
    out.emplace_back(SignPattern(std::move(signs)), Rational());
  }
  detail::parallel_for(count, [&](std::size_t i) {
    out[i].second = pattern_constant(out[i].first);
  });
  return out;
}

std::vector<long> progression_members(const TruncatedProgression& t, long n) {
  // Largest element: floor(cutoff_coeff * n).
  mpz_class num = t.cutoff_coeff.get_num() * n;
  mpz_class bound;
  mpz_fdiv_q(bound.get_mpz_t(), num.get_mpz_t(),
             t.cutoff_coeff.get_den().get_mpz_t());
  if (!bound.fits_slong_p())
    throw std::overflow_error("progression_members: bound overflows long");
  long limit = bound.get_si();
  std::vector<long> out;
  for (long d = t.residue; d <= limit; d += t.modulus) out.push_back(d);
  return out;
}

std::vector<long> cover_members(const ProgressionCover& c, long n) {
  std::vector<long> out;
  for (const auto& t : c.progressions) {
    auto members = progression_members(t, n);
    out.insert(out.end(), members.begin(), members.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fiblcm
