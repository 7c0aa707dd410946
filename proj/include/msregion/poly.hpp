#pragma once

#include "msregion/rational.hpp"
#include "msregion/unipoly.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace msr {

using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Zero coefficients are never stored. Variable names live with the caller
/// (see SymbolTable); a Poly only knows how many variables it has.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly term(const Rational& coeff, Monomial exponents);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& exponents, const Rational& coeff);

  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const;
  /// True when no term involves `var`.
  bool free_of(std::size_t var) const { return degree_in(var) == 0; }
  /// Variables that appear in some term.
  std::vector<std::size_t> support() const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;
  /// Sum of |term| at a point; scale for relative residuals.
  double magnitude(std::span<const double> point) const;

  /// Replace variable `var` by the constant `value` (the variable stays, with exponent 0).
  Poly substitute(std::size_t var, const Rational& value) const;
  /// Replace variable `var` by the polynomial `value` (same variable count).
  Poly substitute(std::size_t var, const Poly& value) const;
  Poly derivative(std::size_t var) const;
  /// Embed into a larger variable set: variable i becomes map[i].
  Poly remap(std::size_t new_nvars, std::span<const std::size_t> map) const;
  /// Univariate view, all other exponents must be zero.
  UniPoly to_univariate(std::size_t var) const;
  /// Coefficients with respect to `var`, as polynomials in the remaining variables.
  std::vector<Poly> coefficients_in(std::size_t var) const;

  /// Greatest monomial dividing every term.
  Monomial monomial_content() const;
  /// Divide by a monomial that divides every term.
  Poly divide_monomial(const Monomial& m) const;
  /// Rescale to integer coefficients with gcd 1 (sign preserved).
  Poly primitive() const;
  /// Number of negative coefficients.
  std::size_t negative_terms() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  Poly pow(unsigned e) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Ordered variable names used to print and parse polynomials.
class SymbolTable {
 public:
  SymbolTable() = default;
  explicit SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {}

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Index of a name, or size() when absent.
  std::size_t find(const std::string& name) const;
  std::size_t add(const std::string& name);

 private:
  std::vector<std::string> names_;
};

/// Terms are printed in descending graded-lex order, e.g. "c^2*k1 - 4*k2".
std::string to_string(const Poly& p, const SymbolTable& symbols);

/// Parses + - * ^ ( ) with rational literals and identifiers from `symbols`.
/// Juxtaposition of a number and an identifier multiplies ("3x^2").
/// With `allow_new`, unknown identifiers are appended to the table.
Poly parse_poly(const std::string& text, SymbolTable& symbols, bool allow_new = false);
Poly parse_poly(const std::string& text, const SymbolTable& symbols);

}  // namespace msr
