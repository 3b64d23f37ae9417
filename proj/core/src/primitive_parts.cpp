#include "fiblcm/primitive_parts.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace fiblcm {

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be >= 1");
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2) ? 1 : 2) {
    if (m % p != 0) continue;
    result -= result / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> d_prime(long n) {
  std::vector<long> all = divisors(2 * n);
  std::vector<long> out;
  for (long d : all)
    if (n % d != 0) out.push_back(d);
  return out;
}

double log_big(const mpz_class& x) {
  if (x <= 0) throw std::domain_error("log_big: argument must be positive");
  std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  if (bits <= 64) {
    unsigned long v = mpz_get_ui(x.get_mpz_t());
    return static_cast<double>(std::log(static_cast<long double>(v)));
  }
  // x = top * 2^shift * (1 + delta) with 0 <= delta < 2^-63, so taking the
  // log of the top 64 bits keeps the relative error below 2^-50.
  std::size_t shift = bits - 64;
  mpz_class top = x >> shift;
  long double lt = std::log(static_cast<long double>(top.get_ui()));
  long double ln2 = 0.6931471805599453094172321214581766L;
  return static_cast<double>(lt + static_cast<long double>(shift) * ln2);
}

PhiTable::PhiTable(long bound) {
  if (bound < 1) throw std::invalid_argument("PhiTable: bound must be >= 1");
  values_.resize(static_cast<std::size_t>(bound) + 1);
  values_[1] = 1;
  mpz_class prev = 1, cur = 1;  // F_1, F_2
  for (long n = 2; n <= bound; ++n) {
    if (n > 2) {
      mpz_class next = prev + cur;
      prev = std::move(cur);
      cur = std::move(next);
    }
    mpz_class q = cur;  // F_n
    mpz_class rem;
    for (long d : divisors(n)) {
      if (d == n) continue;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), q.get_mpz_t(),
                  values_[d].get_mpz_t());
      if (rem != 0)
        throw std::logic_error("PhiTable: inexact division at n = " +
                               std::to_string(n));
    }
    if (q <= 0)
      throw std::logic_error("PhiTable: nonpositive value at n = " +
                             std::to_string(n));
    values_[n] = std::move(q);
  }
}

const mpz_class& PhiTable::value(long d) const {
  if (d < 1 || d > bound())
    throw std::out_of_range("PhiTable::value: index outside [1, bound]");
  return values_[d];
}

}  // namespace fiblcm
