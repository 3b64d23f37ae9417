#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fiblcm/primitive_parts.hpp>
#include <fiblcm/sign_patterns.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

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

bool contains(const std::vector<long>& sorted, long v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

TEST_CASE("parse_pattern accepts the table syntax") {
  SignPattern p = parse_pattern("----+");
  CHECK(p.period() == 5);
  CHECK(p.value(1) == -1);
  CHECK(p.value(5) == 1);
  CHECK(p.text() == "----+");

  CHECK(parse_pattern("+").period() == 1);
  CHECK(parse_pattern("+-").period() == 2);
  CHECK(parse_pattern("+-").value(2) == -1);
}

TEST_CASE("parse_pattern diagnostics name the offending position") {
  CHECK_THROWS_AS(parse_pattern(""), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_pattern("xy"),
                       doctest::Contains("position 1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_pattern("++0-"),
                       doctest::Contains("position 3"), std::invalid_argument);
}

TEST_CASE("parse_pattern enforces the configurable period cap") {
  std::string long_pattern(65, '+');
  CHECK_THROWS_AS(parse_pattern(long_pattern), std::invalid_argument);
  CHECK(parse_pattern(long_pattern, 80).period() == 65);
  CHECK(parse_pattern(std::string(64, '-')).period() == 64);
}

TEST_CASE("the sign accessor is periodic") {
  SignPattern p = parse_pattern("+--");
  for (long n = 1; n <= 60; ++n) CHECK(p.sign(n + 3) == p.sign(n));
  CHECK_THROWS_AS(p.sign(0), std::out_of_range);
}

TEST_CASE("index sets for the constant patterns") {
  for (const char* text : {"-", "+"}) {
    SignPattern p = parse_pattern(text);
    CHECK(fib_indices(p, 12) == std::vector<long>{2, 3, 4, 5, 6});
    CHECK(lucas_indices(p, 12) == std::vector<long>{2, 3, 4, 5, 6});
    CHECK(phi_index_set(p, 12) ==
          std::vector<long>{1, 2, 3, 4, 5, 6, 8, 10, 12});
  }
}

TEST_CASE("index sets stay inside their ranges") {
  for (int period = 1; period <= 5; ++period)
    for (const SignPattern& p : all_patterns(period))
      for (long n : {4L, 5L, 9L, 40L, 101L}) {
        for (long h : fib_indices(p, n)) {
          CHECK(h >= 2);
          CHECK(2 * h <= n);
        }
        for (long h : lucas_indices(p, n)) {
          CHECK(h >= 2);
          CHECK(2 * h <= n);
        }
        auto ms = phi_index_set(p, n);
        for (long d : ms) {
          CHECK(d >= 1);
          CHECK(d <= n);
        }
      }
}

TEST_CASE("at n = 4 everything hinges on the membership of h = 2") {
  for (const SignPattern& p : all_patterns(2)) {
    auto fs = fib_indices(p, 4);
    auto ls = lucas_indices(p, 4);
    CHECK(fs.size() + ls.size() >= 1);  // h = 2 always lands somewhere
    std::set<long> expect;
    if (!fs.empty()) expect.insert({1, 2});  // divisors(2)
    if (!ls.empty()) expect.insert(4);       // d_prime(2)
    auto ms = phi_index_set(p, 4);
    CHECK(std::set<long>(ms.begin(), ms.end()) == expect);
  }
}

TEST_CASE("index sets grow monotonically with n") {
  for (const char* text : {"----+", "+-", "-++"}) {
    SignPattern p = parse_pattern(text);
    std::vector<long> prev_f, prev_l, prev_m;
    for (long n = 4; n <= 200; ++n) {
      auto f = fib_indices(p, n);
      auto l = lucas_indices(p, n);
      auto m = phi_index_set(p, n);
      CHECK(std::includes(f.begin(), f.end(), prev_f.begin(), prev_f.end()));
      CHECK(std::includes(l.begin(), l.end(), prev_l.begin(), prev_l.end()));
      CHECK(std::includes(m.begin(), m.end(), prev_m.begin(), prev_m.end()));
      prev_f = std::move(f);
      prev_l = std::move(l);
      prev_m = std::move(m);
    }
  }
}

TEST_CASE("residue sets for the constant patterns") {
  for (const char* text : {"-", "+"}) {
    ResidueSets rs = residue_sets(parse_pattern(text));
    CHECK(rs.modulus == 2);
    CHECK(rs.fib_residues == std::vector<long>{1, 2});
    CHECK(rs.lucas_residues == std::vector<long>{1, 2});
  }
  CHECK(residue_sets(parse_pattern("----+")).modulus == 10);
}

TEST_CASE("residue classes reproduce the enumerated sets exactly") {
  // Every pattern of period <= 6, every n <= 400: membership of h in
  // [2, n/2] must match h mod 2T against the recorded residues.
  for (int period = 1; period <= 6; ++period)
    for (const SignPattern& p : all_patterns(period)) {
      ResidueSets rs = residue_sets(p);
      for (long n = 4; n <= 400; ++n) {
        std::vector<long> f_expect, l_expect;
        for (long h = 2; 2 * h <= n; ++h) {
          long residue = (h - 1) % rs.modulus + 1;
          if (contains(rs.fib_residues, residue)) f_expect.push_back(h);
          if (contains(rs.lucas_residues, residue)) l_expect.push_back(h);
        }
        REQUIRE(fib_indices(p, n) == f_expect);
        REQUIRE(lucas_indices(p, n) == l_expect);
      }
    }
}
