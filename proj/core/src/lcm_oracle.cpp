#include "fiblcm/lcm_oracle.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "fiblcm/constants.hpp"
#include "fiblcm/primitive_parts.hpp"

namespace fiblcm {
namespace {

void check_range(long n, long start) {
  if (start < 3)
    throw std::invalid_argument("lcm_shifted: start must be >= 3");
  if (n < start) throw std::invalid_argument("lcm_shifted: need n >= start");
}

// Walks i = start..n keeping F_i incrementally; visit(i, F_i + s_i).
template <typename SignAt, typename Visit>
void walk_shifted_terms(SignAt&& sign_at, long n, long start, Visit&& visit) {
  mpz_class prev = fib(start - 1);
  mpz_class cur = fib(start);
  for (long i = start; i <= n; ++i) {
    visit(i, mpz_class(cur + sign_at(i)));
    mpz_class next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
}

template <typename SignAt>
LcmRun run_lcm(SignAt&& sign_at, long n, long start) {
  check_range(n, start);
  mpz_class acc = 1;
  walk_shifted_terms(sign_at, n, start, [&](long, const mpz_class& term) {
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
  });
  double log_lcm = log_big(acc);
  return {start, n, std::move(acc), log_lcm};
}

}  // namespace

LcmRun lcm_shifted(const SignPattern& p, long n, long start) {
  return run_lcm([&](long i) { return p.value(i); }, n, start);
}

LcmRun lcm_shifted(std::span<const Sign> signs, long n, long start) {
  if (static_cast<long>(signs.size()) < n)
    throw std::invalid_argument("lcm_shifted: sign list shorter than n");
  return run_lcm([&](long i) { return sign_value(signs[i - 1]); }, n, start);
}

std::vector<LcmRun> lcm_checkpoints(const SignPattern& p,
                                    std::span<const long> checkpoints,
                                    long start) {
  if (checkpoints.empty()) return {};
  for (std::size_t k = 0; k < checkpoints.size(); ++k)
    if (checkpoints[k] < start ||
        (k > 0 && checkpoints[k] <= checkpoints[k - 1]))
      throw std::invalid_argument(
          "lcm_checkpoints: checkpoints must be ascending and >= start");

  std::vector<LcmRun> out;
  mpz_class acc = 1;
  std::size_t next = 0;
  walk_shifted_terms([&](long i) { return p.value(i); },
                     checkpoints.back(), start,
                     [&](long i, const mpz_class& term) {
                       mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(),
                               term.get_mpz_t());
                       if (next < checkpoints.size() &&
                           i == checkpoints[next]) {
                         out.push_back({start, i, acc, log_big(acc)});
                         ++next;
                       }
                     });
  return out;
}

LcmRun lcm_fibonacci(long n) {
  if (n < 1) throw std::invalid_argument("lcm_fibonacci: need n >= 1");
  mpz_class acc = 1;
  mpz_class prev = 0, cur = 1;  // F_0, F_1
  for (long i = 1; i <= n; ++i) {
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), cur.get_mpz_t());
    mpz_class next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  double log_lcm = log_big(acc);
  return {1, n, std::move(acc), log_lcm};
}

std::vector<mpz_class> shifted_terms(const SignPattern& p, long n, long start) {
  check_range(n, start);
  std::vector<mpz_class> terms;
  terms.reserve(n - start + 1);
  walk_shifted_terms([&](long i) { return p.value(i); }, n, start,
                     [&](long, const mpz_class& term) { terms.push_back(term); });
  return terms;
}

mpz_class lcm_reduce_sequential(std::span<const mpz_class> terms) {
  mpz_class acc = 1;
  for (const mpz_class& t : terms)
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), t.get_mpz_t());
  return acc;
}

mpz_class lcm_reduce_tree(std::span<const mpz_class> terms) {
  if (terms.empty()) return 1;
  if (terms.size() == 1) return terms[0];
  std::size_t half = terms.size() / 2;
  mpz_class left = lcm_reduce_tree(terms.first(half));
  mpz_class right = lcm_reduce_tree(terms.subspan(half));
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), left.get_mpz_t(), right.get_mpz_t());
  return out;
}

double empirical_slope(const SignPattern& p, long n, long start) {
  LcmRun run = lcm_shifted(p, n, start);
  return run.log_lcm / (kLcmSlope * static_cast<double>(n) * n);
}

std::pair<std::vector<long>, std::vector<long>> factor_index_sets(
    const SignPattern& p, long n) {
  if (n < 5)
    throw std::invalid_argument("factor_index_sets: need n >= 5");
  std::set<long> fib_set, lucas_set;
  for (long i = 5; i <= n; ++i) {
    ShiftedFactorization f = shifted_factorization(i, p.sign(i));
    if (f.fib_index >= 2) fib_set.insert(f.fib_index);
    if (f.lucas_index >= 2) lucas_set.insert(f.lucas_index);
  }
  return {{fib_set.begin(), fib_set.end()}, {lucas_set.begin(), lucas_set.end()}};
}

}  // namespace fiblcm
