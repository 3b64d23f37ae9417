#pragma once

#include <gmpxx.h>

namespace fiblcm {

enum class Sign : int { minus = -1, plus = +1 };

constexpr int sign_value(Sign s) { return static_cast<int>(s); }
constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }
Sign sign_from_value(int v);

// Exact Fibonacci and Lucas numbers for any integer index.  Negative
// indices follow the reflection rules F(-n) = (-1)^(n+1) F(n) and
// L(-n) = (-1)^n L(n); no floating-point evaluation is involved.
mpz_class fib(long n);
mpz_class lucas(long n);

// Index pair with F(fib_index) * L(lucas_index) == F(i) + s exactly.
// Defined for every i >= 3 (below that the shifted value can vanish).
struct ShiftedFactorization {
  long fib_index;
  long lucas_index;
};

ShiftedFactorization shifted_factorization(long i, Sign s);

}  // namespace fiblcm
