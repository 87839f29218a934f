#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace forestrep {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when a computed quantity violates a mathematical invariant
// (non-integral multiplicity, mismatch between two independent routes, ...).
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// mpq_class(num, den) leaves the fraction unreduced, and comparisons assume
// reduced form.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational number: " + s);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer stirling2(unsigned n, unsigned k);
Integer power(unsigned base, unsigned exp);

}  // namespace forestrep
