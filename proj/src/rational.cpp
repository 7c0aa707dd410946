#include "msregion/rational.hpp"

#include <cctype>
#include <cmath>

namespace msr {

std::string to_string(const Rational& q) { return q.get_str(); }

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (s.find_first_of(".eE") != std::string::npos) {
    // decimal notation: mantissa and optional exponent, converted exactly
    bool negative = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
    Integer mantissa = 0;
    long scale = 0;
    bool digits = false, after_point = false;
    for (; i < s.size(); ++i) {
      char ch = s[i];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        mantissa = mantissa * 10 + (ch - '0');
        if (after_point) --scale;
        digits = true;
      } else if (ch == '.' && !after_point) {
        after_point = true;
      } else {
        break;
      }
    }
    if (!digits) throw std::invalid_argument("malformed rational literal '" + s + "'");
    if (i < s.size()) {
      if (s[i] != 'e' && s[i] != 'E') throw std::invalid_argument("malformed rational literal '" + s + "'");
      std::size_t used = 0;
      long e = 0;
      try {
        e = std::stol(s.substr(i + 1), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed exponent in '" + s + "'");
      }
      if (i + 1 + used != s.size()) throw std::invalid_argument("malformed rational literal '" + s + "'");
      scale += e;
    }
    Rational out(mantissa);
    if (scale > 0) out *= Rational(ipow(10, static_cast<unsigned>(scale)));
    if (scale < 0) out /= Rational(ipow(10, static_cast<unsigned>(-scale)));
    return negative ? Rational(-out) : out;
  }

  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ((ch == '-' || ch == '+') && i == 0);
    if (!ok) throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
  if (s[0] == '+') s = s.substr(1);
  Rational out;
  if (out.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (out.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  out.canonicalize();
  return out;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (sign(lo) <= 0 && sign(hi) >= 0) return Rational(0);
  if (sign(hi) < 0) return Rational(-simplest_between(-hi, -lo));
  Integer fl = floor(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational a = lo - fl, b = hi - fl;
  Rational inner = simplest_between(1 / b, 1 / a);
  return Rational(fl) + 1 / inner;
}

bool exact_root(const Rational& q, unsigned t, Rational& out) {
  if (t == 0 || sign(q) <= 0) return false;
  Integer num, den;
  if (!mpz_root(num.get_mpz_t(), q.get_num_mpz_t(), t)) return false;
  if (!mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), t)) return false;
  out = Rational(num, den);
  out.canonicalize();
  return true;
}

}  // namespace msr
