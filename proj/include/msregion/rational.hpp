#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace msr {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational num, den;
  mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_num_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational out = num / den;
  return out;
}

inline Integer ipow(const Integer& base, unsigned exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline Integer ipow(long base, unsigned exponent) { return ipow(Integer(base), exponent); }

/// Exact conversion: every finite double is a dyadic rational.
inline Rational from_double(double x) {
  if (!(x == x) || x - x != 0.0) throw std::domain_error("non-finite value cannot be made rational");
  return Rational(x);
}

/// n/d in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational make_rational(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(const Rational& q);

/// Accepts "3", "-3", "3/4", "0.25", "1e-3".
Rational parse_rational(std::string_view text);

/// Simplest (smallest denominator, then numerator) rational in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

Integer floor(const Rational& q);

/// Exact t-th root of a positive rational when it is a perfect power.
bool exact_root(const Rational& q, unsigned t, Rational& out);

}  // namespace msr
