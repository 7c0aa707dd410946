#include "msregion/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace msr {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m(nvars, 0);
  m[index] = 1;
  Poly p(nvars);
  p.add_term(m, Rational(1));
  return p;
}

Poly Poly::term(const Rational& coeff, Monomial exponents) {
  Poly p(exponents.size());
  p.add_term(exponents, coeff);
  return p;
}

void Poly::add_term(const Monomial& exponents, const Rational& coeff) {
  if (exponents.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
  if (sign(coeff) == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sign(it->second) == 0) terms_.erase(it);
  }
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0u));
  return d;
}

std::vector<std::size_t> Poly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars_; ++v)
    if (!free_of(v)) out.push_back(v);
  return out;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < nvars_; ++v)
      if (m[v] != 0) t *= msr::pow(point[v], m[v]);
    acc += t;
  }
  return acc;
}

double Poly::evaluate(std::span<const double> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (std::size_t v = 0; v < nvars_; ++v)
      for (std::uint32_t e = 0; e < m[v]; ++e) t *= point[v];
    acc += t;
  }
  return acc;
}

double Poly::magnitude(std::span<const double> point) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = std::abs(c.get_d());
    for (std::size_t v = 0; v < nvars_; ++v)
      for (std::uint32_t e = 0; e < m[v]; ++e) t *= std::abs(point[v]);
    acc += t;
  }
  return acc;
}

Poly Poly::substitute(std::size_t var, const Rational& value) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    Rational cc = c * msr::pow(value, m[var]);
    mm[var] = 0;
    out.add_term(mm, cc);
  }
  return out;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  if (value.nvars_ != nvars_) throw std::invalid_argument("substitution arity mismatch");
  Poly out(nvars_);
  std::vector<Poly> powers{Poly::constant(nvars_, Rational(1))};
  for (const auto& [m, c] : terms_) {
    while (powers.size() <= m[var]) powers.push_back(powers.back() * value);
    Monomial mm = m;
    mm[var] = 0;
    out += Poly::term(c, mm) * powers[m[var]];
  }
  return out;
}

Poly Poly::derivative(std::size_t var) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial mm = m;
    --mm[var];
    out.add_term(mm, c * static_cast<unsigned long>(m[var]));
  }
  return out;
}

Poly Poly::remap(std::size_t new_nvars, std::span<const std::size_t> map) const {
  if (map.size() != nvars_) throw std::invalid_argument("remap table has wrong size");
  Poly out(new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial mm(new_nvars, 0);
    for (std::size_t v = 0; v < nvars_; ++v) mm.at(map[v]) += m[v];
    out.add_term(mm, c);
  }
  return out;
}

UniPoly Poly::to_univariate(std::size_t var) const {
  std::vector<Rational> coeffs(degree_in(var) + 1, Rational(0));
  for (const auto& [m, c] : terms_) {
    for (std::size_t v = 0; v < nvars_; ++v)
      if (v != var && m[v] != 0) throw std::domain_error("polynomial is not univariate");
    coeffs[m[var]] += c;
  }
  return UniPoly(std::move(coeffs));
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  std::vector<Poly> out(degree_in(var) + 1, Poly(nvars_));
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm[var] = 0;
    out[m[var]].add_term(mm, c);
  }
  return out;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return Monomial(nvars_, 0);
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    for (std::size_t v = 0; v < nvars_; ++v) g[v] = std::min(g[v], m[v]);
  return g;
}

Poly Poly::divide_monomial(const Monomial& d) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (mm[v] < d[v]) throw std::domain_error("monomial does not divide polynomial");
      mm[v] -= d[v];
    }
    out.add_term(mm, c);
  }
  return out;
}

Poly Poly::primitive() const {
  if (terms_.empty()) return *this;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return scale * *this;
}

std::size_t Poly::negative_terms() const {
  return static_cast<std::size_t>(
      std::count_if(terms_.begin(), terms_.end(), [](const auto& t) { return sign(t.second) < 0; }));
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) {
    if (terms_.empty() && nvars_ == 0) {
      nvars_ = o.nvars_;
    } else if (!o.terms_.empty() || o.nvars_ != 0) {
      throw std::invalid_argument("adding polynomials over different variable sets");
    }
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("multiplying polynomials over different variable sets");
  Poly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(ma);
      for (std::size_t v = 0; v < m.size(); ++v) m[v] += mb[v];
      out.add_term(m, ca * cb);
    }
  return out;
}

Poly operator*(const Rational& s, const Poly& a) {
  Poly out(a.nvars_);
  for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(nvars_, Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------

std::size_t SymbolTable::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t SymbolTable::add(const std::string& name) {
  std::size_t i = find(name);
  if (i == names_.size()) names_.push_back(name);
  return i;
}

namespace {

bool graded_greater(const Monomial& a, const Monomial& b) {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u), db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

std::string to_string(const Poly& p, const SymbolTable& symbols) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return graded_greater(a.first, b.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sign(c) < 0) os << "-";
    } else {
      os << (sign(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
    bool wrote = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (wrote) os << "*";
      os << (v < symbols.size() ? symbols.name(v) : "v" + std::to_string(v));
      if (m[v] > 1) os << "^" << m[v];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

struct Token {
  enum class Kind { Number, Ident, Op, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
      // a slash between digits belongs to the literal: "5/2"
      if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      out.push_back({Token::Kind::Number, s.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), i});
      i = j;
    } else if (std::string("+-*/^()").find(ch) != std::string::npos) {
      out.push_back({Token::Kind::Op, std::string(1, ch), i});
      ++i;
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, ch) + "' at column " +
                                  std::to_string(i + 1));
    }
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, const SymbolTable& symbols) : toks_(toks), symbols_(symbols) {}

  Poly parse() {
    Poly p = expr();
    if (peek().kind != Token::Kind::End) fail("unexpected token '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is_op(const char* op) const { return peek().kind == Token::Kind::Op && peek().text == op; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument(msg + " at column " + std::to_string(peek().pos + 1));
  }

  Poly expr() {
    Poly acc(symbols_.size());
    bool negate = false;
    if (is_op("+") || is_op("-")) negate = toks_[pos_++].text == "-";
    Poly t = product();
    acc += negate ? -t : t;
    while (is_op("+") || is_op("-")) {
      bool minus = toks_[pos_++].text == "-";
      Poly u = product();
      acc += minus ? -u : u;
    }
    return acc;
  }

  bool starts_factor() const {
    return peek().kind == Token::Kind::Number || peek().kind == Token::Kind::Ident || is_op("(");
  }

  Poly product() {
    Poly acc = power();
    while (true) {
      if (is_op("*")) {
        ++pos_;
        acc = acc * power();
      } else if (is_op("/")) {
        ++pos_;
        Poly d = power();
        if (d.size() != 1 || !d.support().empty()) fail("division only by nonzero constants");
        acc = Rational(1 / d.terms().begin()->second) * acc;
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Poly power() {
    Poly base = atom();
    if (is_op("^")) {
      ++pos_;
      if (peek().kind != Token::Kind::Number) fail("exponent must be a nonnegative integer");
      const std::string& t = peek().text;
      if (t.find_first_not_of("0123456789") != std::string::npos) fail("exponent must be a nonnegative integer");
      unsigned e = static_cast<unsigned>(std::stoul(t));
      ++pos_;
      base = base.pow(e);
    }
    return base;
  }

  Poly atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) {
      ++pos_;
      return Poly::constant(symbols_.size(), parse_rational(t.text));
    }
    if (t.kind == Token::Kind::Ident) {
      std::size_t idx = symbols_.find(t.text);
      if (idx == symbols_.size()) fail("unknown symbol '" + t.text + "'");
      ++pos_;
      return Poly::variable(symbols_.size(), idx);
    }
    if (is_op("(")) {
      ++pos_;
      Poly inner = expr();
      if (!is_op(")")) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (is_op("-")) {
      ++pos_;
      return -power();
    }
    fail("unexpected token '" + t.text + "'");
  }

  const std::vector<Token>& toks_;
  const SymbolTable& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, SymbolTable& symbols, bool allow_new) {
  auto toks = tokenize(text);
  if (allow_new)
    for (const auto& t : toks)
      if (t.kind == Token::Kind::Ident) symbols.add(t.text);
  return ExprParser(toks, symbols).parse();
}

Poly parse_poly(const std::string& text, const SymbolTable& symbols) {
  auto toks = tokenize(text);
  return ExprParser(toks, symbols).parse();
}

}  // namespace msr
