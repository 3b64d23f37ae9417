#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fiblcm/primitive_parts.hpp>
#include <fiblcm/progression_cover.hpp>

#include "golden_tables.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

using namespace fiblcm;

namespace {

std::vector<SignPattern> all_patterns(int period) {
  std::vector<SignPattern> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << period); ++mask) {
    std::vector<Sign> signs(period);
    for (int i = 0; i < period; ++i)
      signs[i] = (mask >> (period - 1 - i)) & 1 ? Sign::plus : Sign::minus;
    out.emplace_back(std::move(signs));
  }
  return out;
}

std::set<long> evaluate(const std::vector<TruncatedProgression>& cover,
                        long scale) {
  std::set<long> out;
  for (const auto& t : cover)
    for (long d : progression_members(t, scale)) out.insert(d);
  return out;
}

}  // namespace

TEST_CASE("minimal_multiplier solves the documented congruences") {
  CHECK(minimal_multiplier(1, 2, 2, false) == 2);
  CHECK(minimal_multiplier(1, 1, 1, false) == 1);
  CHECK(minimal_multiplier(2, 1, 2, false) == std::nullopt);
  CHECK(minimal_multiplier(2, 2, 2, true) == 1);
  CHECK(minimal_multiplier(1, 2, 2, true) == std::nullopt);  // odd t is odd mod 2
  CHECK_THROWS_AS(minimal_multiplier(0, 1, 2, false), std::invalid_argument);
  CHECK_THROWS_AS(minimal_multiplier(1, 3, 2, false), std::invalid_argument);
}

TEST_CASE("minimal_multiplier is minimal and exhaustive") {
  // Brute force over a generous range decides existence and minimality.
  for (long m = 1; m <= 12; ++m)
    for (long r = 1; r <= m; ++r)
      for (long s = 1; s <= m; ++s)
        for (bool odd : {false, true}) {
          std::optional<long> brute;
          for (long t = 1; t <= 8 * m && !brute; ++t)
            if (!(odd && t % 2 == 0) && (s * t) % m == r % m) brute = t;
          CHECK(minimal_multiplier(s, r, m, odd) == brute);
        }
}

TEST_CASE("divisor_cover on the modulus-2 classes") {
  auto plain = divisor_cover({1, 2}, 2, make_rational(1, 2), false);
  REQUIRE(plain.size() == 4);
  for (const auto& t : plain) {
    CHECK(t.modulus == 4);
    CHECK(t.cutoff_coeff == make_rational(1, 2));
  }
  CHECK(plain[0].residue == 1);
  CHECK(plain[3].residue == 4);

  auto prime = divisor_cover({1, 2}, 2, make_rational(1, 2), true);
  REQUIRE(prime.size() == 2);
  CHECK(prime[0].residue == 2);
  CHECK(prime[1].residue == 4);
  CHECK(prime[0].cutoff_coeff == 1);
  CHECK(prime[1].cutoff_coeff == 1);

  CHECK(divisor_cover({}, 2, make_rational(1, 2), false).empty());
  CHECK_THROWS_AS(divisor_cover({1}, 2, make_rational(1, 1), false),
                  std::invalid_argument);
}

TEST_CASE("divisor_cover equals the brute-force divisor unions") {
  // For x = x_coeff * scale, the cover evaluated at the scale must equal
  // the union of divisors (d_prime) of the class members, element for
  // element.
  for (long m = 1; m <= 12; ++m)
    for (long r = 1; r <= m; ++r)
      for (long x : {50L, 500L}) {
        std::set<long> plain_brute, prime_brute;
        for (long n = r; n <= x; n += m) {
          for (long d : divisors(n)) plain_brute.insert(d);
          for (long d : d_prime(n)) prime_brute.insert(d);
        }
        auto plain = divisor_cover({r}, m, make_rational(1, 2), false);
        auto prime = divisor_cover({r}, m, make_rational(1, 2), true);
        REQUIRE(evaluate(plain, 2 * x) == plain_brute);
        REQUIRE(evaluate(prime, 2 * x) == prime_brute);
      }
}

TEST_CASE("density_constant at the documented points") {
  CHECK(density_constant(1, 1) == 1);
  CHECK(density_constant(1, 2) == make_rational(2, 3));
  CHECK(density_constant(2, 2) == make_rational(1, 3));
  CHECK(density_constant(3, 6) == make_rational(1, 6));
  // The two modulus-2 densities recombine to 1/2.
  CHECK(density_constant(1, 2) / 4 + density_constant(2, 2) ==
        make_rational(1, 2));
  CHECK_THROWS_AS(density_constant(3, 2), std::invalid_argument);
}

TEST_CASE("density constants over a full modulus sum to 1") {
  for (long m : {1L, 2L, 3L, 4L, 6L, 12L, 20L}) {
    Rational sum = 0;
    for (long r = 1; r <= m; ++r) sum += density_constant(r, m);
    CHECK(sum == 1);
  }
}

TEST_CASE("patterns of period up to 4 give exactly 1/2") {
  Rational half = make_rational(1, 2);
  for (int period = 1; period <= 4; ++period)
    for (const SignPattern& p : all_patterns(period))
      CHECK(pattern_constant(p) == half);
}

TEST_CASE("pattern constants match the reference tables") {
  for (const auto& [text, fraction] : kPeriod5Flagged)
    CHECK(fraction_string(pattern_constant(parse_pattern(text))) == fraction);
  for (const auto& [text, fraction] : kPeriod6Flagged)
    CHECK(fraction_string(pattern_constant(parse_pattern(text))) == fraction);
}

TEST_CASE("enumerate_pattern_constants flags exactly the table rows") {
  Rational half = make_rational(1, 2);
  for (int period : {5, 6}) {
    auto results = enumerate_pattern_constants(period);
    CHECK(results.size() == (std::size_t{1} << period));
    std::vector<std::pair<std::string, std::string>> flagged;
    for (const auto& [p, c] : results)
      if (c != half) flagged.emplace_back(p.text(), fraction_string(c));
    const auto& expect = (period == 5) ? kPeriod5Flagged : kPeriod6Flagged;
    CHECK(flagged == expect);
  }

  auto tiny = enumerate_pattern_constants(1);
  REQUIRE(tiny.size() == 2);
  CHECK(tiny[0].first.text() == "-");  // canonical order: '-' first
  CHECK(tiny[0].second == half);
  CHECK(tiny[1].second == half);

  CHECK_THROWS_AS(enumerate_pattern_constants(0), std::invalid_argument);
}

TEST_CASE("doubling the period leaves the constant unchanged") {
  for (int period = 1; period <= 5; ++period)
    for (const SignPattern& p : all_patterns(period)) {
      SignPattern doubled = parse_pattern(p.text() + p.text());
      CHECK(pattern_constant(p) == pattern_constant(doubled));
    }
}

TEST_CASE("constants stay in (0, 1]") {
  for (int period = 1; period <= 6; ++period)
    for (const SignPattern& p : all_patterns(period)) {
      Rational c = pattern_constant(p);
      CHECK(c > 0);
      CHECK(c <= 1);
    }
}

TEST_CASE("covers are well-formed") {
  for (const char* text : {"-", "+-", "----+", "--+-++"}) {
    SignPattern p = parse_pattern(text);
    ProgressionCover cover = progression_cover(p);
    CHECK(cover.modulus == 4 * p.period());
    long prev = 0;
    for (const auto& t : cover.progressions) {
      CHECK(t.modulus == cover.modulus);
      CHECK(t.residue > prev);  // distinct, ascending
      CHECK(t.residue <= cover.modulus);
      CHECK(t.cutoff_coeff > 0);
      CHECK(t.cutoff_coeff <= 1);
      prev = t.residue;
    }
  }
}

TEST_CASE("cover equals the divisor index set up to boundary slack") {
  // Spot check here; the acceptance suite sweeps every pattern of period
  // <= 6 and every n in [10, 400].
  for (const char* text : {"-", "+", "+-", "----+", "-----+"}) {
    SignPattern p = parse_pattern(text);
    ProgressionCover cover = progression_cover(p);
    for (long n = 10; n <= 200; ++n) {
      auto want = phi_index_set(p, n);
      auto got = cover_members(cover, n);
      REQUIRE(std::includes(got.begin(), got.end(), want.begin(), want.end()));
      std::vector<long> extra;
      std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                          std::back_inserter(extra));
      for (long d : extra) CHECK(d <= 2);
    }
  }
}

TEST_CASE("progression_members honors the rational cutoff") {
  TruncatedProgression t{3, 5, make_rational(1, 3)};
  // Elements 3, 8, 13, ... up to floor(n / 3).
  CHECK(progression_members(t, 40) == std::vector<long>{3, 8, 13});
  CHECK(progression_members(t, 8) == std::vector<long>{});
  CHECK(progression_members(t, 9) == std::vector<long>{3});
}
