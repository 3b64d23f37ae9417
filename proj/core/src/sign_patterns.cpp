#include "fiblcm/sign_patterns.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fiblcm/primitive_parts.hpp"

namespace fiblcm {
namespace {

int parity_sign(long h) { return (h % 2 == 0) ? 1 : -1; }  // (-1)^h

// h contributes a Fibonacci factor when any of the four signs around 2h
// takes the stated parity value.
bool fib_condition(const SignPattern& p, long h) {
  int ph = parity_sign(h);
  return p.value(2 * h - 2) == ph || p.value(2 * h - 1) == -ph ||
         p.value(2 * h + 1) == -ph || p.value(2 * h + 2) == -ph;
}

bool lucas_condition(const SignPattern& p, long h) {
  int ph = parity_sign(h);
  return p.value(2 * h - 2) == -ph || p.value(2 * h - 1) == ph ||
         p.value(2 * h + 1) == ph || p.value(2 * h + 2) == ph;
}

std::vector<long> collect(const SignPattern& p, long n,
                          bool (*condition)(const SignPattern&, long)) {
  std::vector<long> out;
  for (long h = 2; 2 * h <= n; ++h)
    if (condition(p, h)) out.push_back(h);
  return out;
}

}  // namespace

SignPattern::SignPattern(std::vector<Sign> signs) : signs_(std::move(signs)) {
  if (signs_.empty())
    throw std::invalid_argument("SignPattern: period must be >= 1");
}

Sign SignPattern::sign(long n) const {
  if (n < 1) throw std::out_of_range("SignPattern::sign: index must be >= 1");
  return signs_[static_cast<std::size_t>((n - 1) % period())];
}

std::string SignPattern::text() const {
  std::string out;
  out.reserve(signs_.size());
  for (Sign s : signs_) out.push_back(sign_char(s));
  return out;
}

SignPattern parse_pattern(std::string_view text, std::size_t max_period) {
  if (text.empty())
    throw std::invalid_argument("sign pattern is empty; expected '+'/'-'");
  if (text.size() > max_period)
    throw std::invalid_argument("sign pattern longer than the cap of " +
                                std::to_string(max_period) + " characters");
  std::vector<Sign> signs;
  signs.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+')
      signs.push_back(Sign::plus);
    else if (text[i] == '-')
      signs.push_back(Sign::minus);
    else
      throw std::invalid_argument("invalid character '" +
                                  std::string(1, text[i]) + "' at position " +
                                  std::to_string(i + 1) +
                                  "; expected '+' or '-'");
  }
  return SignPattern(std::move(signs));
}

std::vector<long> fib_indices(const SignPattern& p, long n) {
  return collect(p, n, fib_condition);
}

std::vector<long> lucas_indices(const SignPattern& p, long n) {
  return collect(p, n, lucas_condition);
}

std::vector<long> phi_index_set(const SignPattern& p, long n) {
  std::set<long> acc;
  for (long h : fib_indices(p, n))
    for (long d : divisors(h)) acc.insert(d);
  for (long h : lucas_indices(p, n))
    for (long d : d_prime(h)) acc.insert(d);
  return {acc.begin(), acc.end()};
}

ResidueSets residue_sets(const SignPattern& p) {
  long m = 2 * p.period();
  ResidueSets out{m, {}, {}};
  // Membership of h >= 2 depends on the parity of h and on signs at indices
  // 2h + c, both periodic in h with period dividing m, so one window of m
  // consecutive values determines everything.  The window [m+1, 2m] keeps
  // every referenced sign index positive.
  for (long h = m + 1; h <= 2 * m; ++h) {
    long residue = (h - 1) % m + 1;
    if (fib_condition(p, h)) out.fib_residues.push_back(residue);
    if (lucas_condition(p, h)) out.lucas_residues.push_back(residue);
  }
  std::sort(out.fib_residues.begin(), out.fib_residues.end());
  std::sort(out.lucas_residues.begin(), out.lucas_residues.end());
  return out;
}

}  // namespace fiblcm
