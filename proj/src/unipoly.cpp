#include "msregion/unipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace msr {

UniPoly::UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sign(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UniPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  Rational lc = leading();
  std::vector<Rational> v(coeffs_);
  for (auto& c : v) c /= lc;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> v(coeffs_);
  for (auto& c : v) c = -c;
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
  std::vector<Rational> v(a.coeffs_);
  for (auto& c : v) c *= s;
  return UniPoly(std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sign(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sign(c) < 0) os << "-";
    } else {
      os << (sign(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || i == 0) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(a.coeffs());
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UniPoly{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1), Rational(0));
  const Rational& lb = b.leading();
  for (int i = da; i >= db; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] / lb;
    quo[static_cast<std::size_t>(i - db)] = q;
    if (sign(q) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return exact_div(p, gcd(p, p.derivative())).monic();
}

namespace {

// Positive rescaling keeps the sign pattern and curbs coefficient growth.
UniPoly normalize_positive(const UniPoly& p) {
  if (p.is_zero()) return p;
  return Rational(1 / abs(p.leading())) * p;
}

// Sign of p just to the right (side = +1) or left (side = -1) of a.
int sign_near(const UniPoly& p, const Rational& a, int side) {
  UniPoly q = p;
  int parity = 1;
  while (!q.is_zero()) {
    int s = sign(q(a));
    if (s != 0) return s * parity;
    q = q.derivative();
    parity *= side;
  }
  return 0;
}

int sign_at(const UniPoly& p, const Bound& b, int side) {
  if (p.is_zero()) return 0;
  switch (b.kind) {
    case Bound::Kind::PlusInfinity:
      return sign(p.leading());
    case Bound::Kind::MinusInfinity:
      return (p.degree() % 2 == 0 ? 1 : -1) * sign(p.leading());
    case Bound::Kind::Finite:
      break;
  }
  return sign_near(p, b.value, side);
}

unsigned variations(const std::vector<UniPoly>& seq, const Bound& b, int side) {
  unsigned changes = 0;
  int prev = 0;
  for (const auto& q : seq) {
    int s = sign_at(q, b, side);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

bool empty_interval(const Bound& lo, const Bound& hi) {
  if (lo.kind == Bound::Kind::PlusInfinity || hi.kind == Bound::Kind::MinusInfinity) return true;
  if (lo.kind == Bound::Kind::Finite && hi.kind == Bound::Kind::Finite) return lo.value >= hi.value;
  return false;
}

}  // namespace

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(normalize_positive(p));
  UniPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(normalize_positive(d));
  while (true) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(normalize_positive(-r));
  }
  return seq;
}

unsigned count_roots_open(const UniPoly& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
  if (empty_interval(lo, hi)) return 0;
  auto seq = sturm_sequence(square_free_part(p));
  unsigned vlo = variations(seq, lo, +1);
  unsigned vhi = variations(seq, hi, -1);
  return vlo >= vhi ? vlo - vhi : 0;
}

unsigned descartes_sign_changes(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("Descartes bound of the zero polynomial");
  unsigned changes = 0;
  int prev = 0;
  for (const auto& c : p.coeffs()) {
    int s = sign(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

unsigned sturm_count_positive(const UniPoly& p) {
  return count_roots_open(p, Bound::at(Rational(0)), Bound::plus_infinity());
}

unsigned root_multiplicity(const UniPoly& p, const Rational& x) {
  unsigned m = 0;
  UniPoly q = p;
  while (!q.is_zero() && sign(q(x)) == 0) {
    ++m;
    q = q.derivative();
  }
  return m;
}

Rational root_bound(const UniPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational lc = abs(p.leading());
  Rational best(0);
  for (int i = 0; i < p.degree(); ++i) best = std::max(best, Rational(abs(p.coeffs()[static_cast<std::size_t>(i)]) / lc));
  return best + 1;
}

namespace {

Rational finite_lo(const Bound& b, const Rational& rb) {
  return b.kind == Bound::Kind::Finite ? b.value : Rational(-rb);
}
Rational finite_hi(const Bound& b, const Rational& rb) {
  return b.kind == Bound::Kind::Finite ? b.value : rb;
}

bool narrow_enough(const Rational& lo, const Rational& hi, double rel_width) {
  Rational width = hi - lo;
  Rational scale = std::max(abs(lo), abs(hi));
  if (sign(scale) == 0) return true;
  return width <= scale * from_double(rel_width);
}

// Any rational root has denominator dividing the leading coefficient L of the
// integer primitive form; below width 1/L^2 the simplest rational in the
// bracket is the only candidate.
Rational rational_root_resolution(const UniPoly& q) {
  Integer den_lcm = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : q.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
  }
  Integer lc = abs(q.leading().get_num() * (den_lcm / q.leading().get_den())) / num_gcd;
  Rational r(Integer(1), lc * lc);
  r.canonicalize();
  return r;
}

void isolate_into(const UniPoly& q, Rational lo, Rational hi, unsigned count, double rel_width,
                  const Rational& resolution, std::vector<IsolatedRoot>& out) {
  if (count == 0) return;
  if (count == 1) {
    // q is square-free with one root inside, so the sign changes across it.
    int s_lo = sign_near(q, lo, +1);
    while (!(narrow_enough(lo, hi, rel_width) && hi - lo < resolution)) {
      Rational mid = (lo + hi) / 2;
      int s_mid = sign(q(mid));
      if (s_mid == 0) {
        out.push_back({mid, mid, true});
        return;
      }
      if (s_mid == s_lo)
        lo = mid;
      else
        hi = mid;
    }
    Rational s = simplest_between(lo, hi);
    if (s > lo && s < hi && sign(q(s)) == 0)
      out.push_back({s, s, true});
    else
      out.push_back({lo, hi, false});
    return;
  }
  Rational mid = (lo + hi) / 2;
  unsigned left = count_roots_open(q, Bound::at(lo), Bound::at(mid));
  bool at_mid = sign(q(mid)) == 0;
  isolate_into(q, lo, mid, left, rel_width, resolution, out);
  if (at_mid) out.push_back({mid, mid, true});
  isolate_into(q, mid, hi, count - left - (at_mid ? 1u : 0u), rel_width, resolution, out);
}

}  // namespace

std::vector<IsolatedRoot> isolate_roots(const UniPoly& p, const Bound& lo, const Bound& hi, double rel_width) {
  std::vector<IsolatedRoot> out;
  if (p.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
  if (empty_interval(lo, hi)) return out;
  UniPoly q = square_free_part(p);
  Rational rb = root_bound(q);
  Rational a = finite_lo(lo, rb), b = finite_hi(hi, rb);
  if (a >= b) return out;
  unsigned total = count_roots_open(q, lo, hi);
  isolate_into(q, a, b, total, rel_width, rational_root_resolution(q), out);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sign(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sign(m[r][col]) == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace

Rational resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant with the zero polynomial");
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i <= m; ++i) s[row][row + i] = f.coeff(static_cast<unsigned>(m - i));
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t i = 0; i <= n; ++i) s[n + row][row + i] = g.coeff(static_cast<unsigned>(n - i));
  return determinant(std::move(s));
}

Rational discriminant(const UniPoly& g) {
  if (g.degree() < 1) throw std::domain_error("discriminant needs degree >= 1");
  long n = g.degree();
  Rational res = resultant(g, g.derivative());
  Rational out = res / g.leading();
  if ((n * (n - 1) / 2) % 2 != 0) out = -out;
  return out;
}

// ---------------------------------------------------------------------------

Rational trinomial_discriminant(unsigned n, unsigned k, const Rational& a, const Rational& b) {
  if (k == 0 || k >= n) throw std::invalid_argument("trinomial exponents need 0 < k < n");
  unsigned d = std::gcd(n, k);
  unsigned N = n / d, K = k / d;
  Rational first = Rational(ipow(static_cast<long>(n), N)) * pow(b, N - K);
  Rational second = Rational(ipow(static_cast<long>(n - k), N - K) * ipow(static_cast<long>(k), K)) * pow(a, N);
  if (N % 2 == 1) second = -second;
  Rational bracket = first - second;
  Rational out = pow(b, k - 1) * pow(bracket, d);
  unsigned long parity = static_cast<unsigned long>(n) * (n - 1) / 2;
  if (parity % 2 == 1) out = -out;
  return out;
}

TrinomialForm::TrinomialForm(unsigned n, unsigned k, Rational b, Rational c)
    : n_(n), k_(k), d_(0), b_(std::move(b)), c_(std::move(c)) {
  if (k_ == 0 || k_ >= n_) throw std::invalid_argument("trinomial exponents need 0 < k < n");
  if (sign(b_) <= 0 || sign(c_) <= 0) throw std::invalid_argument("trinomial form needs b > 0 and c > 0");
  d_ = std::gcd(n_, k_);
}

UniPoly TrinomialForm::polynomial() const {
  return UniPoly::monomial(Rational(1), n_) + UniPoly::monomial(Rational(-c_), k_) + UniPoly::constant(b_);
}

Rational trinomial_D(const TrinomialForm& t) {
  unsigned N = t.big_n(), K = t.big_k();
  Rational first = Rational(ipow(static_cast<long>(t.n()), N)) * pow(t.b(), N - K);
  Rational second =
      Rational(ipow(static_cast<long>(t.n() - t.k()), N - K) * ipow(static_cast<long>(t.k()), K)) * pow(t.c(), N);
  return first - second;
}

unsigned trinomial_positive_roots(const TrinomialForm& t) {
  int s = sign(trinomial_D(t));
  if (s < 0) return 2;
  if (s == 0) return 1;
  return 0;
}

}  // namespace msr
