#include "msregion/massaction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace msr {

SymbolTable system_symbols(const ReactionNetwork& net) {
  SymbolTable s;
  for (std::size_t j = 0; j < net.species_count(); ++j) s.add("x" + std::to_string(j + 1));
  for (const auto& label : net.rate_labels()) {
    if (s.find(label) != s.size()) throw NetworkError("rate label '" + label + "' clashes with a concentration variable");
    s.add(label);
  }
  return s;
}

std::vector<Poly> ode_rhs(const ReactionNetwork& net) {
  const std::size_t n = net.species_count(), r = net.reaction_count();
  std::vector<Poly> out(n, Poly(n + r));
  for (std::size_t i = 0; i < r; ++i) {
    const auto& rx = net.reaction(i);
    Monomial m(n + r, 0);
    for (std::size_t j = 0; j < n; ++j) m[j] = rx.reactant.coeffs[j];
    m[n + i] = 1;
    auto v = rx.vector();
    for (std::size_t j = 0; j < n; ++j)
      if (v[j] != 0) out[j].add_term(m, Rational(static_cast<long>(v[j])));
  }
  return out;
}

std::vector<std::string> total_symbol_names(std::size_t d) {
  if (d == 1) return {"c"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back("c" + std::to_string(i + 1));
  return out;
}

SteadyStateSystem steady_state_system(const ReactionNetwork& net) {
  return steady_state_system(net, conservation_matrix(net));
}

SteadyStateSystem steady_state_system(const ReactionNetwork& net, const ConservationMatrix& W) {
  const std::size_t n = net.species_count();
  const std::size_t d = n - stoichiometric_dimension(net);
  if (W.cols != n || W.rows != d || rank(W) != d)
    throw NetworkError("conservation matrix must have " + std::to_string(d) + " independent rows of length " +
                       std::to_string(n));
  RationalMatrix prod = W * stoichiometric_matrix(net);
  for (const auto& v : prod.data)
    if (sign(v) != 0) throw NetworkError("conservation matrix is not orthogonal to the reaction vectors");
  SteadyStateSystem sys;
  sys.net = net;
  sys.symbols = system_symbols(net);
  sys.odes = ode_rhs(net);
  sys.cons = W;
  sys.total_symbols = total_symbol_names(d);
  return sys;
}

std::vector<Poly> specialize(const SteadyStateSystem& sys, const std::vector<Rational>& kappa) {
  const std::size_t n = sys.species_count();
  if (kappa.size() != sys.reaction_count()) throw OracleError("rate vector has the wrong length");
  std::vector<Poly> out;
  for (const auto& f : sys.odes) {
    Poly g(n);
    for (const auto& [m, coeff] : f.terms()) {
      Rational c = coeff;
      for (std::size_t i = 0; i < kappa.size(); ++i)
        if (m[n + i] != 0) c *= msr::pow(kappa[i], m[n + i]);
      g.add_term(Monomial(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(n)), c);
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

using Point = std::vector<Rational>;

double residual_of(const std::vector<Poly>& f, const Point& x) {
  std::vector<double> xd;
  for (const auto& v : x) xd.push_back(to_double(v));
  double worst = 0.0;
  for (const auto& p : f) {
    double mag = p.magnitude(xd);
    if (mag == 0.0) continue;
    worst = std::max(worst, std::abs(p.evaluate(xd)) / mag);
  }
  return worst;
}

SteadyState make_witness(const std::vector<Poly>& f, Point x, bool exact) {
  SteadyState s;
  s.exact = exact;
  if (exact) {
    for (const auto& p : f)
      if (sign(p.evaluate(x)) != 0) throw std::logic_error("exact witness does not vanish");
    s.residual = 0.0;
  } else {
    s.residual = residual_of(f, x);
  }
  s.x = std::move(x);
  return s;
}

bool has_multiple_root_in(const UniPoly& g, const Bound& lo, const Bound& hi) {
  if (g.degree() < 2) return false;
  UniPoly m = gcd(g, g.derivative());
  return m.degree() >= 1 && count_roots_open(m, lo, hi) > 0;
}

// Counts roots of the univariate g on (lo, hi) and turns them into points.
void count_on_segment(const std::vector<Poly>& f, const UniPoly& g, const Bound& lo, const Bound& hi,
                      const std::function<Point(const Rational&)>& point, SteadyStateCount& out) {
  auto roots = isolate_roots(g, lo, hi);
  out.count += static_cast<unsigned>(roots.size());
  if (has_multiple_root_in(g, lo, hi)) out.boundary = true;
  for (const auto& r : roots) out.witnesses.push_back(make_witness(f, point(r.exact ? r.lo : r.midpoint()), r.exact));
}

UniPoly combine(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return gcd(a, b);
}

SteadyStateCount one_species(const std::vector<Poly>& f) {
  SteadyStateCount out;
  UniPoly u = f[0].to_univariate(0);
  if (u.is_zero()) {
    out.infinite = true;
    out.note = "rate function vanishes identically";
    return out;
  }
  count_on_segment(f, u, Bound::at(0), Bound::plus_infinity(), [](const Rational& t) { return Point{t}; }, out);
  return out;
}

SteadyStateCount on_line(const std::vector<Poly>& f, const Rational& w1, const Rational& w2, const Rational& c) {
  SteadyStateCount out;
  UniPoly u1, u2;
  Bound lo = Bound::at(0), hi = Bound::plus_infinity();
  std::function<Point(const Rational&)> point;
  if (sign(w2) != 0) {
    Rational a = -w1 / w2, b = c / w2;  // x2 = a x1 + b
    Poly line = Poly::constant(2, b) + a * Poly::variable(2, 0);
    u1 = f[0].substitute(1, line).to_univariate(0);
    u2 = f[1].substitute(1, line).to_univariate(0);
    if (sign(a) == 0) {
      if (sign(b) <= 0) return out;
    } else if (sign(a) > 0) {
      lo = Bound::at(std::max(Rational(0), Rational(-b / a)));
    } else {
      Rational top = -b / a;
      if (sign(top) <= 0) return out;
      hi = Bound::at(top);
    }
    point = [a, b](const Rational& t) { return Point{t, a * t + b}; };
  } else {
    if (sign(w1) == 0) throw OracleError("conservation row is zero");
    Rational x1 = c / w1;
    if (sign(x1) <= 0) return out;
    u1 = f[0].substitute(0, x1).to_univariate(1);
    u2 = f[1].substitute(0, x1).to_univariate(1);
    point = [x1](const Rational& t) { return Point{x1, t}; };
  }
  UniPoly g = combine(u1, u2);
  if (g.is_zero()) {
    out.infinite = true;
    out.note = "every point of the class is a steady state";
    return out;
  }
  count_on_segment(f, g, lo, hi, point, out);
  return out;
}

// ---- bivariate elimination -------------------------------------------------

using Coeffs = std::vector<UniPoly>;  // coefficients in x2, each a polynomial in x1

Coeffs coefficients_in_x2(const Poly& p) {
  Coeffs out;
  for (const auto& c : p.coefficients_in(1)) out.push_back(c.to_univariate(0));
  return out;
}

UniPoly bareiss_det(std::vector<std::vector<UniPoly>> a) {
  const std::size_t k = a.size();
  if (k == 0) return UniPoly::constant(1);
  bool negate = false;
  UniPoly prev = UniPoly::constant(1);
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (a[p][p].is_zero()) {
      std::size_t q = p + 1;
      while (q < k && a[q][p].is_zero()) ++q;
      if (q == k) return UniPoly{};
      std::swap(a[p], a[q]);
      negate = !negate;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) a[i][j] = exact_div(a[i][j] * a[p][p] - a[i][p] * a[p][j], prev);
      a[i][p] = UniPoly{};
    }
    prev = a[p][p];
  }
  return negate ? -a[k - 1][k - 1] : a[k - 1][k - 1];
}

// Coefficient of x2^i in the j-th subresultant of F and G.
UniPoly subresultant_coeff(const Coeffs& F, const Coeffs& G, std::size_t j, std::size_t i) {
  const std::size_t m = F.size() - 1, n = G.size() - 1;
  const std::size_t ncols = m + n - j;  // powers ncols-1 .. 0
  const std::size_t size = m + n - 2 * j;
  auto entry = [&](const Coeffs& P, std::size_t deg, std::size_t shift, std::size_t power) -> UniPoly {
    if (power < shift || power - shift > deg) return UniPoly{};
    return P[power - shift];
  };
  std::vector<std::vector<UniPoly>> mat;
  auto add_rows = [&](const Coeffs& P, std::size_t deg, std::size_t count) {
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t shift = count - 1 - t;
      std::vector<UniPoly> row;
      for (std::size_t col = 0; col + 1 < size; ++col) row.push_back(entry(P, deg, shift, ncols - 1 - col));
      row.push_back(entry(P, deg, shift, i));
      mat.push_back(std::move(row));
    }
  };
  add_rows(F, m, n - j);
  add_rows(G, n, m - j);
  return bareiss_det(std::move(mat));
}

bool vanishes_at(const UniPoly& p, const UniPoly& sqfree_r, const IsolatedRoot& root) {
  if (p.is_zero()) return true;
  if (root.exact) return sign(p(root.lo)) == 0;
  UniPoly g = gcd(p, sqfree_r);
  return g.degree() >= 1 && count_roots_open(g, Bound::at(root.lo), Bound::at(root.hi)) > 0;
}

// Sign of p at the algebraic number bracketed by root (p must not vanish there).
int sign_at(const UniPoly& p, const UniPoly& sqfree_r, IsolatedRoot root) {
  for (int iter = 0; iter < 4000; ++iter) {
    int s_lo = sign(p(root.lo)), s_hi = sign(p(root.hi));
    if (s_lo != 0 && s_lo == s_hi && count_roots_open(p, Bound::at(root.lo), Bound::at(root.hi)) == 0) return s_lo;
    Rational mid = root.midpoint();
    if (sign(sqfree_r(mid)) == 0) return sign(p(mid));
    if (sign(sqfree_r(root.lo)) * sign(sqfree_r(mid)) < 0)
      root.hi = mid;
    else
      root.lo = mid;
  }
  throw std::runtime_error("sign determination did not converge");
}

SteadyStateCount solve_fiber(const std::vector<Poly>& f, const Poly& a, const Poly& b, std::size_t fixed_var,
                             const Rational& value) {
  // Steady states with x_{fixed_var} = value, a rational.
  SteadyStateCount out;
  std::size_t free_var = 1 - fixed_var;
  UniPoly ua = a.substitute(fixed_var, value).to_univariate(free_var);
  UniPoly ub = b.substitute(fixed_var, value).to_univariate(free_var);
  UniPoly g = combine(ua, ub);
  if (g.is_zero()) {
    out.infinite = true;
    out.note = "a line of steady states";
    return out;
  }
  count_on_segment(
      f, g, Bound::at(0), Bound::plus_infinity(),
      [fixed_var, value](const Rational& t) { return fixed_var == 0 ? Point{value, t} : Point{t, value}; }, out);
  return out;
}

void merge(SteadyStateCount& into, const SteadyStateCount& part) {
  into.count += part.count;
  into.infinite = into.infinite || part.infinite;
  into.boundary = into.boundary || part.boundary;
  into.certified = into.certified && part.certified;
  into.witnesses.insert(into.witnesses.end(), part.witnesses.begin(), part.witnesses.end());
  if (!part.note.empty()) into.note = part.note;
}

SteadyStateCount full_dimensional(const std::vector<Poly>& f) {
  SteadyStateCount out;
  Poly p = f[0], q = f[1];
  if (p.is_zero() && q.is_zero()) {
    out.infinite = true;
    out.note = "rate function vanishes identically";
    return out;
  }
  if (!p.is_zero()) p = p.divide_monomial(p.monomial_content());
  if (!q.is_zero()) q = q.divide_monomial(q.monomial_content());
  auto nonzero_constant = [](const Poly& h) { return !h.is_zero() && h.total_degree() == 0; };
  if (nonzero_constant(p) || nonzero_constant(q)) return out;
  if (p.is_zero() || q.is_zero()) {
    out.certified = false;
    out.note = "one equation vanishes identically; positive zero set is a curve or empty";
    return out;
  }

  // One equation in a single variable: solve it, then each fiber.
  for (std::size_t var = 0; var < 2; ++var) {
    std::size_t other = 1 - var;
    const Poly* single = p.free_of(other) ? &p : (q.free_of(other) ? &q : nullptr);
    if (!single) continue;
    const Poly& rest = single == &p ? q : p;
    UniPoly u = single->to_univariate(var);
    for (const auto& root : isolate_roots(u, Bound::at(0), Bound::plus_infinity())) {
      if (root.exact) {
        merge(out, solve_fiber(f, *single, rest, var, root.lo));
        continue;
      }
      if (rest.free_of(var)) {
        // Fibers are identical; the other equation alone decides.
        UniPoly v = rest.to_univariate(other);
        auto inner = isolate_roots(v, Bound::at(0), Bound::plus_infinity());
        out.count += static_cast<unsigned>(inner.size());
        for (const auto& s : inner) {
          Point x(2);
          x[var] = root.midpoint();
          x[other] = s.exact ? s.lo : s.midpoint();
          out.witnesses.push_back(make_witness(f, x, false));
        }
        continue;
      }
      out.certified = false;
      out.note = "irrational fiber with a coupled second equation";
    }
    return out;
  }

  // General case: eliminate x2.
  Coeffs F = coefficients_in_x2(p), G = coefficients_in_x2(q);
  if (F.size() > G.size()) std::swap(F, G);  // deg F <= deg G
  UniPoly R = subresultant_coeff(F, G, 0, 0);
  if (R.is_zero()) {
    out.certified = false;
    out.note = "resultant vanishes identically (common factor)";
    return out;
  }
  UniPoly R_sq = square_free_part(R);
  UniPoly s1, s0;
  if (F.size() == 2) {
    s1 = F[1];
    s0 = F[0];
  } else {
    s1 = subresultant_coeff(F, G, 1, 1);
    s0 = subresultant_coeff(F, G, 1, 0);
  }
  for (const auto& root : isolate_roots(R, Bound::at(0), Bound::plus_infinity())) {
    if (root.exact) {
      merge(out, solve_fiber(f, p, q, 0, root.lo));
      continue;
    }
    if (vanishes_at(F.back(), R_sq, root) && vanishes_at(G.back(), R_sq, root)) {
      out.certified = false;
      out.note = "both leading coefficients vanish at a resultant root";
      continue;
    }
    if (vanishes_at(s1, R_sq, root)) {
      out.certified = false;
      out.note = "more than one common root over an irrational abscissa";
      continue;
    }
    if (vanishes_at(s0, R_sq, root)) continue;  // partner is x2 = 0
    if (sign_at(s0, R_sq, root) * sign_at(s1, R_sq, root) > 0) continue;  // partner is negative
    ++out.count;
    if (R.degree() > R_sq.degree()) {
      UniPoly m = gcd(R, R.derivative());
      if (m.degree() >= 1 && count_roots_open(m, Bound::at(root.lo), Bound::at(root.hi)) > 0) out.boundary = true;
    }
    Rational x1 = root.midpoint();
    Rational x2 = -s0(x1) / s1(x1);
    out.witnesses.push_back(make_witness(f, Point{x1, x2}, false));
  }
  return out;
}

}  // namespace

SteadyStateCount count_positive_steady_states(const SteadyStateSystem& sys, const std::vector<Rational>& kappa,
                                              const std::vector<Rational>& totals) {
  const std::size_t n = sys.species_count();
  if (n > 2) throw OracleError("the steady-state oracle handles at most two species");
  for (const auto& k : kappa)
    if (sign(k) <= 0) throw OracleError("rate constants must be positive");
  if (totals.size() != sys.conservation_count()) throw OracleError("total vector has the wrong length");
  auto f = specialize(sys, kappa);
  SteadyStateCount out;
  if (n == 1)
    out = one_species(f);
  else if (sys.conservation_count() == 0)
    out = full_dimensional(f);
  else if (sys.conservation_count() == 1)
    out = on_line(f, sys.cons(0, 0), sys.cons(0, 1), totals[0]);
  else
    throw OracleError("two conservation laws leave no reactions");
  // Exact witnesses get an exact degeneracy check.
  for (const auto& w : out.witnesses)
    if (w.exact && jacobian_restricted_rank(sys, kappa, w.x) < stoichiometric_dimension(sys.net)) out.boundary = true;
  return out;
}

std::size_t jacobian_restricted_rank(const SteadyStateSystem& sys, const std::vector<Rational>& kappa,
                                     const std::vector<Rational>& x) {
  const std::size_t n = sys.species_count();
  if (x.size() != n) throw OracleError("point has the wrong length");
  auto f = specialize(sys, kappa);
  RationalMatrix J(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) J(i, j) = f[i].derivative(j).evaluate(x);
  RationalMatrix basis = rref(stoichiometric_matrix(sys.net).transpose());
  return rank(J * basis.transpose());
}

}  // namespace msr
