#include "fiblcm/rational.hpp"

#include <stdexcept>

namespace fiblcm {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();  // mpq_class(n, d) does not reduce on its own
  return q;
}

std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace fiblcm
