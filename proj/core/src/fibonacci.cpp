#include "fiblcm/fibonacci.hpp"

#include <stdexcept>
#include <utility>

namespace fiblcm {
namespace {

// (F(n), F(n+1)) for n >= 0 by iteration; used below the doubling cutoff.
std::pair<mpz_class, mpz_class> fib_pair_iterative(unsigned long n) {
  mpz_class a = 0, b = 1;  // F(0), F(1)
  for (unsigned long i = 0; i < n; ++i) {
    mpz_class c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return {a, b};
}

// Fast doubling: F(2k) = F(k) (2 F(k+1) - F(k)), F(2k+1) = F(k)^2 + F(k+1)^2.
std::pair<mpz_class, mpz_class> fib_pair(unsigned long n) {
  if (n <= 64) return fib_pair_iterative(n);
  auto [a, b] = fib_pair(n / 2);  // F(k), F(k+1)
  mpz_class even = a * (2 * b - a);
  mpz_class odd = a * a + b * b;
  if (n % 2 == 0) return {std::move(even), std::move(odd)};
  mpz_class next = even + odd;
  return {std::move(odd), std::move(next)};
}

}  // namespace

Sign sign_from_value(int v) {
  if (v == 1) return Sign::plus;
  if (v == -1) return Sign::minus;
  throw std::invalid_argument("sign_from_value: expected +1 or -1");
}

mpz_class fib(long n) {
  if (n >= 0) return fib_pair(static_cast<unsigned long>(n)).first;
  unsigned long m = static_cast<unsigned long>(-n);
  mpz_class f = fib_pair(m).first;
  return (m % 2 == 0) ? mpz_class(-f) : f;  // F(-m) = (-1)^(m+1) F(m)
}

mpz_class lucas(long n) {
  if (n >= 0) {
    auto [a, b] = fib_pair(static_cast<unsigned long>(n));
    return 2 * b - a;  // L(n) = 2 F(n+1) - F(n)
  }
  unsigned long m = static_cast<unsigned long>(-n);
  auto [a, b] = fib_pair(m);
  mpz_class l = 2 * b - a;
  return (m % 2 == 0) ? l : mpz_class(-l);  // L(-m) = (-1)^m L(m)
}

ShiftedFactorization shifted_factorization(long i, Sign s) {
  if (i < 3)
    throw std::invalid_argument(
        "shifted_factorization: index must be >= 3 (smaller shifted terms "
        "can vanish)");
  long j = (i - 1) % 4 + 1;  // i = 4k + j with j in {1, 2, 3, 4}
  long k = (i - j) / 4;
  bool plus = (s == Sign::plus);
  switch (j) {
    case 1:
      return plus ? ShiftedFactorization{2 * k + 1, 2 * k}
                  : ShiftedFactorization{2 * k, 2 * k + 1};
    case 2:
      return plus ? ShiftedFactorization{2 * k + 2, 2 * k}
                  : ShiftedFactorization{2 * k, 2 * k + 2};
    case 3:
      return plus ? ShiftedFactorization{2 * k + 1, 2 * k + 2}
                  : ShiftedFactorization{2 * k + 2, 2 * k + 1};
    default:
      return plus ? ShiftedFactorization{2 * k + 1, 2 * k + 3}
                  : ShiftedFactorization{2 * k + 3, 2 * k + 1};
  }
}

}  // namespace fiblcm
