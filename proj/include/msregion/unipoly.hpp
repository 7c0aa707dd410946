#pragma once

#include "msregion/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msr {

/// Dense univariate polynomial over Q, ascending degree. Trailing zeros are trimmed,
/// so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> ascending);
  UniPoly(std::initializer_list<Rational> ascending);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, unsigned degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly operator-() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Throws when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), made monic.
UniPoly square_free_part(const UniPoly& p);

/// Endpoint of a real interval; infinite ends are allowed.
struct Bound {
  enum class Kind { Finite, PlusInfinity, MinusInfinity };
  Kind kind = Kind::Finite;
  Rational value;

  static Bound at(const Rational& v) { return {Kind::Finite, v}; }
  static Bound plus_infinity() { return {Kind::PlusInfinity, Rational(0)}; }
  static Bound minus_infinity() { return {Kind::MinusInfinity, Rational(0)}; }
};

std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Distinct real roots of p strictly inside (lo, hi). p must be nonzero.
unsigned count_roots_open(const UniPoly& p, const Bound& lo, const Bound& hi);

/// Sign changes in the coefficient list with zeros removed.
unsigned descartes_sign_changes(const UniPoly& p);

/// Distinct roots in (0, inf) by Sturm's theorem on the square-free part.
unsigned sturm_count_positive(const UniPoly& p);

/// Multiplicity of a root at x. Returns 0 when p(x) != 0.
unsigned root_multiplicity(const UniPoly& p, const Rational& x);

/// Upper bound on |root| (Cauchy).
Rational root_bound(const UniPoly& p);

struct IsolatedRoot {
  Rational lo;
  Rational hi;
  bool exact = false;  // lo == hi is the root
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Isolates the distinct roots of p in (lo, hi) and refines each to relative
/// width `rel_width`; exact rational roots are detected along the way.
std::vector<IsolatedRoot> isolate_roots(const UniPoly& p, const Bound& lo, const Bound& hi,
                                        double rel_width = 1e-12);

/// Sylvester-matrix resultant. Both polynomials nonzero.
Rational resultant(const UniPoly& f, const UniPoly& g);
/// (-1)^{n(n-1)/2} Res(g, g') / lc(g).
Rational discriminant(const UniPoly& g);

// ---------------------------------------------------------------------------
// Trinomials

/// Discriminant of x^n + a x^k + b in closed form (Swan). Requires 0 < k < n.
Rational trinomial_discriminant(unsigned n, unsigned k, const Rational& a, const Rational& b);

/// x^n - c x^k + b with b, c > 0 and 0 < k < n.
class TrinomialForm {
 public:
  TrinomialForm(unsigned n, unsigned k, Rational b, Rational c);

  unsigned n() const { return n_; }
  unsigned k() const { return k_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  unsigned d() const { return d_; }
  unsigned big_n() const { return n_ / d_; }
  unsigned big_k() const { return k_ / d_; }

  UniPoly polynomial() const;

 private:
  unsigned n_, k_, d_;
  Rational b_, c_;
};

/// n^N b^(N-K) - (n-k)^(N-K) k^K c^N
Rational trinomial_D(const TrinomialForm& t);
/// Positive roots counted without multiplicity: 2 if D < 0, 1 if D = 0, 0 if D > 0.
unsigned trinomial_positive_roots(const TrinomialForm& t);

}  // namespace msr
