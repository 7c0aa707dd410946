#include "msregion/regions.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace msr {

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::Negative:
      return "<0";
    case Relation::Zero:
      return "=0";
    case Relation::Positive:
      return ">0";
  }
  return ">0";
}

bool SignCondition::holds(std::span<const Rational> point) const {
  int s = sign(poly.evaluate(point));
  switch (rel) {
    case Relation::Negative:
      return s < 0;
    case Relation::Zero:
      return s == 0;
    case Relation::Positive:
      return s > 0;
  }
  return false;
}

SignCondition normalize(SignCondition c, std::size_t rate_count) {
  if (c.poly.is_zero()) throw std::invalid_argument("sign condition on the zero polynomial");
  Monomial content = c.poly.monomial_content();
  for (std::size_t i = rate_count; i < content.size(); ++i) content[i] = 0;
  Poly p = c.poly.divide_monomial(content).primitive();
  if (c.rel == Relation::Negative) {
    p = -p;
    c.rel = Relation::Positive;
  } else if (c.rel == Relation::Zero && sign(p.terms().rbegin()->second) < 0) {
    p = -p;
  }
  c.poly = std::move(p);
  return c;
}

namespace {

Rational powi(const Rational& q, long e) {
  if (e >= 0) return msr::pow(q, static_cast<unsigned>(e));
  return 1 / msr::pow(q, static_cast<unsigned>(-e));
}

Poly var(std::size_t nvars, std::size_t i) { return Poly::variable(nvars, i); }

SignCondition cond(Poly p, Relation r, std::size_t rate_count) { return normalize({std::move(p), r}, rate_count); }

Region make_region(RegionKind kind, const std::vector<std::string>& rates, std::size_t totals, std::string tag) {
  Region reg;
  reg.kind = kind;
  reg.rate_count = rates.size();
  reg.ambient = SymbolTable(rates);
  for (const auto& name : total_symbol_names(totals)) {
    if (reg.ambient.find(name) != reg.ambient.size())
      throw NetworkError("rate label '" + name + "' clashes with a total-constant symbol");
    reg.ambient.add(name);
  }
  reg.case_tag = std::move(tag);
  return reg;
}

// Keeps only the first k variables (the rest must not appear).
Poly truncate(const Poly& p, std::size_t k) {
  Poly out(k);
  for (const auto& [m, c] : p.terms()) out.add_term(Monomial(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(k)), c);
  return out;
}

// Two positive roots of M0 - M1 x^k + M2 x^n (all M positive) iff D < 0.
Poly trinomial_d_poly(unsigned n, unsigned k, const Poly& m0, const Poly& m1, const Poly& m2) {
  unsigned d = std::gcd(n, k), N = n / d, K = k / d;
  Rational a = Rational(ipow(static_cast<long>(n), N));
  Rational b = Rational(ipow(static_cast<long>(n - k), N - K) * ipow(static_cast<long>(k), K));
  return a * (m0.pow(N - K) * m2.pow(K)) - b * m1.pow(N);
}

const std::array<std::array<int, 3>, 2> kPatterns{{{1, -1, 1}, {-1, 1, -1}}};

}  // namespace

bool membership(const Region& region, std::span<const Rational> point) {
  return containing_conjunct(region, point).has_value();
}

std::optional<std::size_t> containing_conjunct(const Region& region, std::span<const Rational> point) {
  if (point.size() != region.dimension()) throw std::invalid_argument("point dimension does not match the region");
  for (std::size_t i = 0; i < region.rate_count; ++i)
    if (sign(point[i]) <= 0) throw std::invalid_argument("rate constants must be positive");
  for (std::size_t j = 0; j < region.conjuncts.size(); ++j) {
    const auto& conj = region.conjuncts[j];
    if (std::all_of(conj.begin(), conj.end(), [&](const SignCondition& c) { return c.holds(point); })) return j;
  }
  return std::nullopt;
}

double boundary_distance(const Region& region, std::span<const double> point) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& conj : region.conjuncts)
    for (const auto& c : conj) {
      double mag = c.poly.magnitude(point);
      if (mag == 0.0) return 0.0;
      best = std::min(best, std::abs(c.poly.evaluate(point)) / mag);
    }
  return best;
}

Poly net_ode_poly(const ReactionNetwork& net) {
  if (net.species_count() != 1) throw UnsupportedFamily("net polynomial needs exactly one species");
  return ode_rhs(net)[0];
}

// ---------------------------------------------------------------------------
// One species

Region region_one_species_net_trinomial(const ReactionNetwork& net) {
  if (net.species_count() != 1) throw UnsupportedFamily("expected exactly one species");
  const std::size_t r = net.reaction_count();
  Region reg = make_region(RegionKind::Allowing, net.rate_labels(), 0, "one_species_net_trinomial");
  std::map<unsigned, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < r; ++i) groups[net.reaction(i).reactant.coeffs[0]].push_back(i);
  if (groups.size() > 3) throw UnsupportedFamily("net polynomial has more than three monomials");
  if (groups.size() < 3) return reg;

  std::vector<unsigned> exps;
  std::vector<std::vector<std::size_t>> members;
  for (const auto& [e, idx] : groups) {
    exps.push_back(e);
    members.push_back(idx);
  }
  auto step = [&](std::size_t i) {
    return static_cast<long>(net.reaction(i).product.coeffs[0]) - static_cast<long>(net.reaction(i).reactant.coeffs[0]);
  };
  std::array<Poly, 3> A;
  for (std::size_t g = 0; g < 3; ++g) {
    A[g] = Poly(r);
    for (auto i : members[g]) A[g] += Rational(step(i)) * var(r, i);
  }
  const unsigned n = exps[2] - exps[0], k = exps[1] - exps[0];

  for (const auto& pat : kPatterns) {
    bool feasible = true;
    Conjunct conj;
    for (std::size_t g = 0; g < 3; ++g) {
      bool has_pos = false, has_neg = false;
      for (auto i : members[g]) (step(i) > 0 ? has_pos : has_neg) = true;
      bool can = pat[g] > 0 ? has_pos : has_neg;
      if (!can) feasible = false;
      if (has_pos && has_neg) conj.push_back(cond(Rational(pat[g]) * A[g], Relation::Positive, r));
    }
    if (!feasible) continue;
    Poly D = trinomial_d_poly(n, k, Rational(pat[0]) * A[0], Rational(pat[1]) * A[1], Rational(pat[2]) * A[2]);
    conj.push_back(cond(D, Relation::Negative, r));

    // Witness: rates giving sigma * (T0 - T1 x^k + T2 x^n).
    std::array<Rational, 3> target =
        (n == 2 && k == 1) ? std::array<Rational, 3>{2, 3, 1} : std::array<Rational, 3>{1, Rational(2 * n), 1};
    std::vector<Rational> kappa(r, Rational(1));
    for (std::size_t g = 0; g < 3; ++g) {
      std::vector<std::size_t> same, opposite;
      for (auto i : members[g]) ((step(i) > 0) == (pat[g] > 0) ? same : opposite).push_back(i);
      Rational need = target[g];
      for (auto i : opposite) need += Rational(std::abs(step(i)));
      Rational rest = 0;
      for (std::size_t j = 1; j < same.size(); ++j) rest += Rational(std::abs(step(same[j])));
      Rational first = (need - rest) / Rational(std::abs(step(same[0])));
      if (sign(first) > 0) {
        kappa[same[0]] = first;
      } else {
        Rational total = 0;
        for (auto i : same) total += Rational(std::abs(step(i)));
        for (auto i : same) kappa[i] = need / total;
      }
    }
    reg.conjuncts.push_back(std::move(conj));
    reg.witnesses.push_back(kappa);
  }
  return reg;
}

Region region_one_species_three_reactions(const ReactionNetwork& net) {
  auto verdict = classify_one_species(net);
  if (net.reaction_count() != 3) throw UnsupportedFamily("expected exactly three reactions");
  Region reg = region_one_species_net_trinomial(net);
  if (!verdict.multistationary) reg.conjuncts.clear(), reg.witnesses.clear();
  reg.case_tag = "one_species_three_reactions";
  return reg;
}

// ---------------------------------------------------------------------------
// Two species, absolute concentration robustness shape

namespace {

struct AcrShape {
  std::size_t fixed = 0;  // species with a fixed steady-state value x* = A / B
  Poly A, B;              // positive monomials in the rates
  std::array<Poly, 3> M;  // positive magnitudes of the trinomial coefficients, denominators cleared
  std::array<int, 3> signs{};
  unsigned n = 0, k = 0;
  std::size_t exponents = 0;  // distinct powers of the other species
};

std::optional<AcrShape> acr_shape(const ReactionNetwork& net) {
  if (net.species_count() != 2 || !is_full_dimensional(net)) return std::nullopt;
  const std::size_t r = net.reaction_count();
  auto odes = ode_rhs(net);
  for (std::size_t j = 0; j < 2; ++j) {
    std::size_t o = 1 - j;
    if (!odes[j].free_of(o)) continue;
    auto cj = odes[j].coefficients_in(j);
    std::vector<std::size_t> powers;
    for (std::size_t p = 0; p < cj.size(); ++p)
      if (!cj[p].is_zero()) powers.push_back(p);
    if (powers.size() != 2 || powers[1] != powers[0] + 1) continue;
    const Poly& lo = cj[powers[0]];
    const Poly& hi = cj[powers[1]];
    if (lo.size() != 1 || hi.size() != 1) continue;
    int s_lo = sign(lo.terms().begin()->second), s_hi = sign(hi.terms().begin()->second);
    AcrShape shape;
    shape.fixed = j;
    if (s_lo == s_hi) {
      shape.exponents = 0;  // no positive value for the fixed species
      return shape;
    }
    std::vector<std::size_t> map(2 + r);
    auto to_rates = [&](const Poly& p) {
      Poly out(r);
      for (const auto& [m, c] : p.terms()) {
        Monomial mm(m.begin() + 2, m.end());
        out.add_term(mm, abs(c));
      }
      return out;
    };
    shape.A = to_rates(lo);
    shape.B = to_rates(hi);
    auto co = odes[o].coefficients_in(o);
    std::vector<std::size_t> opow;
    for (std::size_t p = 0; p < co.size(); ++p)
      if (!co[p].is_zero()) opow.push_back(p);
    shape.exponents = opow.size();
    if (opow.size() != 3) return shape;
    std::array<unsigned, 3> beta{};
    std::array<Poly, 3> mag;
    for (std::size_t g = 0; g < 3; ++g) {
      const Poly& c = co[opow[g]];
      if (c.size() != 1) return std::nullopt;
      const auto& [m, coeff] = *c.terms().begin();
      shape.signs[g] = sign(coeff);
      beta[g] = m[j];
      Monomial rates(m.begin() + 2, m.end());
      mag[g] = Poly::term(abs(coeff), rates);
    }
    unsigned bmax = *std::max_element(beta.begin(), beta.end());
    for (std::size_t g = 0; g < 3; ++g) shape.M[g] = mag[g] * shape.A.pow(beta[g]) * shape.B.pow(bmax - beta[g]);
    shape.n = static_cast<unsigned>(opow[2] - opow[0]);
    shape.k = static_cast<unsigned>(opow[1] - opow[0]);
    return shape;
  }
  return std::nullopt;
}

bool alternating(const std::array<int, 3>& s) { return s[0] == s[2] && s[1] == -s[0]; }

}  // namespace

Region region_acr_reduction(const ReactionNetwork& net) {
  auto shape = acr_shape(net);
  if (!shape) throw UnsupportedFamily("network does not have the fixed-species trinomial shape");
  if (shape->exponents > 3) throw UnsupportedFamily("second equation has more than three monomials");
  const std::size_t r = net.reaction_count();
  Region reg = make_region(RegionKind::Allowing, net.rate_labels(), 0, "acr_trinomial_reduction");
  if (shape->exponents < 3 || !alternating(shape->signs)) return reg;
  Poly D = trinomial_d_poly(shape->n, shape->k, shape->M[0], shape->M[1], shape->M[2]);
  reg.conjuncts.push_back({cond(D, Relation::Negative, r)});
  // Witness: grow a rate that only the middle coefficient carries.
  std::vector<Rational> kappa(r, Rational(1));
  std::optional<std::size_t> lever;
  for (std::size_t i = 0; i < r && !lever; ++i)
    if (!shape->M[1].free_of(i) && shape->M[0].free_of(i) && shape->M[2].free_of(i)) lever = i;
  for (int iter = 0; iter < 200 && !membership(reg, kappa); ++iter) {
    if (!lever) break;
    kappa[*lever] *= 2;
  }
  if (membership(reg, kappa)) reg.witnesses.push_back(kappa);
  return reg;
}

// ---------------------------------------------------------------------------
// Two species, two reactions

Cutoff cutoff_c_star(const ReactionNetwork& net) {
  auto verdict = classify_two_species(net);
  if (verdict.matched != MatchedCase::Zigzag)
    throw UnsupportedFamily("cutoff is defined for nondegenerate two-species two-reaction networks");
  auto b = build_box_diagram(net);
  Cutoff cut;
  cut.gamma = *b.gamma;
  cut.alpha = *b.alpha;
  cut.lambda = *b.lambda;
  auto v = b.v();
  cut.v1 = Rational(static_cast<long>(v[0]));
  long a1 = b.yt[0] - b.y[0], a2 = b.yt[1] - b.y[1];
  cut.s = static_cast<int>(a1 + a2);
  Rational g1 = cut.gamma * (1 + cut.alpha);
  cut.b_sign = -sign(g1);
  cut.C = powi(abs(g1), cut.s) * powi(-cut.gamma * cut.alpha, -a2) * cut.lambda;
  cut.kappa_label = net.reaction(0).rate_label;
  cut.kappa_tilde_label = net.reaction(1).rate_label;
  return cut;
}

std::string Cutoff::symbolic() const {
  unsigned t = static_cast<unsigned>(std::abs(s));
  Rational k0 = s < 0 ? 1 / C : C;
  std::string ratio = s < 0 ? "(" + kappa_tilde_label + "/" + kappa_label + ")"
                            : "(" + kappa_label + "/" + kappa_tilde_label + ")";
  Rational scale = v1 * b_sign;
  std::string inner;
  Rational root;
  if (exact_root(k0, t, root)) {
    scale *= root;
  } else {
    inner = "(" + to_string(k0) + ")^(1/" + std::to_string(t) + ")*";
  }
  std::string body = t == 1 ? ratio : ratio + "^(1/" + std::to_string(t) + ")";
  std::string lead = scale == 1 ? "" : (scale == -1 ? "-" : to_string(scale) + "*");
  return lead + inner + body;
}

double Cutoff::evaluate(const Rational& kappa, const Rational& kappa_tilde) const {
  using boost::multiprecision::cpp_bin_float_50;
  Rational q = C * kappa / kappa_tilde;
  cpp_bin_float_50 base = cpp_bin_float_50(q.get_num().get_str()) / cpp_bin_float_50(q.get_den().get_str());
  cpp_bin_float_50 val = boost::multiprecision::pow(base, cpp_bin_float_50(1) / s);
  val *= to_double(v1) * b_sign;
  return static_cast<double>(val);
}

double Cutoff::tangency_x1(const Rational& kappa, const Rational& kappa_tilde) const {
  // x0 = (-gamma alpha)^(-a2/s) (lambda kappa / kappa~)^(1/s), with a2 = alpha a1 and s = a1 (1 + alpha)
  double ga = to_double(-gamma * alpha);
  double a2_over_s = to_double(alpha / (1 + alpha));
  double ratio = to_double(lambda * kappa / kappa_tilde);
  return std::pow(ga, -a2_over_s) * std::pow(ratio, 1.0 / s);
}

namespace {

// Sign constraint on c = w . x for x in the open positive quadrant, or 0 when any c occurs.
int class_sign(const Rational& w1, const Rational& w2) {
  int s1 = sign(w1), s2 = sign(w2);
  if (s1 >= 0 && s2 >= 0) return 1;
  if (s1 <= 0 && s2 <= 0) return -1;
  return 0;
}

ConservationMatrix row(const Rational& a, const Rational& b) {
  ConservationMatrix W(1, 2);
  W(0, 0) = a;
  W(0, 1) = b;
  return W;
}

}  // namespace

Region region_two_species_enabling(const ReactionNetwork& net) {
  auto verdict = classify_two_species(net);
  auto b = build_box_diagram(net);
  auto v = b.v();
  const std::size_t d = net.species_count() - stoichiometric_dimension(net);
  Region reg = make_region(RegionKind::Enabling, net.rate_labels(), d, "two_species_" + verdict.case_name());
  if (!verdict.multistationary) {
    reg.conservation = conservation_matrix(net);
    return reg;
  }
  const std::size_t nv = 3;
  Poly k = var(nv, 0), kt = var(nv, 1), c = var(nv, 2);
  Rational v1(static_cast<long>(v[0])), v2(static_cast<long>(v[1]));
  long a1 = b.yt[0] - b.y[0], a2 = b.yt[1] - b.y[1];
  const Rational& lambda = *b.lambda;
  const std::size_t rc = 2;

  if (verdict.matched == MatchedCase::Zigzag) {
    reg.conservation = row(-v2, v1);
    Cutoff cut = cutoff_c_star(net);
    reg.symbolic_cutoff = cut.symbolic();
    unsigned t = static_cast<unsigned>(std::abs(cut.s));
    int sigma = cut.b_sign;
    int c_sign = sigma * sign(v1);
    Rational sig_t = (t % 2 == 1) ? Rational(c_sign) : Rational(1);  // |c|^t = sig_t c^t
    Rational v1t = msr::pow(abs(v1), t);
    // "|b| > |b*|" as P > 0
    Poly P = cut.s > 0 ? sig_t * c.pow(t) * kt - cut.C * v1t * k : sig_t * cut.C * k * c.pow(t) - v1t * kt;
    bool outside = sign(cut.alpha) > 0;
    Conjunct conj{cond(Rational(c_sign) * c, Relation::Positive, rc),
                  cond(P, outside ? Relation::Positive : Relation::Negative, rc)};
    reg.conjuncts.push_back(std::move(conj));
    // Witness at unit rates: |b| = 5/4 |b*| outside the cutoff, |b*| / 2 inside it.
    double bstar = std::abs(cut.evaluate(1, 1) / to_double(v1));
    double target = outside ? 1.25 * bstar : 0.5 * bstar;
    Rational mag = simplest_between(from_double(target * 0.98), from_double(target * 1.02));
    std::vector<Rational> w{Rational(1), Rational(1), Rational(c_sign) * abs(v1) * mag};
    if (membership(reg, w)) reg.witnesses.push_back(w);
    return reg;
  }

  // Degenerate cases: equalities.
  Conjunct conj;
  std::vector<Rational> w{Rational(1), Rational(1), Rational(0)};
  switch (verdict.detail) {
    case 1: {
      reg.conservation = row(-v2, v1);
      Rational gamma = *b.gamma;
      conj.push_back(cond(c, Relation::Zero, rc));
      Poly eq = a1 > 0 ? lambda * powi(gamma, a1) * k - kt : lambda * k - powi(gamma, -a1) * kt;
      conj.push_back(cond(eq, Relation::Zero, rc));
      w[0] = a1 > 0 ? Rational(1 / (lambda * powi(gamma, a1))) : Rational(powi(gamma, -a1) / lambda);
      break;
    }
    case 2: {
      reg.conservation = row(-v2, v1);
      conj.push_back(cond(lambda * k - kt, Relation::Zero, rc));
      int cs = class_sign(-v2, v1);
      if (cs != 0) conj.push_back(cond(Rational(cs) * c, Relation::Positive, rc));
      w[0] = 1 / lambda;
      w[2] = cs == 0 ? Rational(0) : Rational(cs);
      break;
    }
    case 3:
    case 4: {
      // Steady states: x_i^{a_i} = lambda kappa / kappa~ on the class x_i = c.
      long ai = verdict.detail == 3 ? a1 : a2;
      reg.conservation = verdict.detail == 3 ? row(1, 0) : row(0, 1);
      conj.push_back(cond(c, Relation::Positive, rc));
      unsigned e = static_cast<unsigned>(std::abs(ai));
      Poly eq = ai > 0 ? kt * c.pow(e) - lambda * k : lambda * k * c.pow(e) - kt;
      conj.push_back(cond(eq, Relation::Zero, rc));
      w[0] = 1 / lambda;
      w[2] = 1;
      break;
    }
    default:
      throw std::logic_error("unknown degenerate case");
  }
  reg.conjuncts.push_back(std::move(conj));
  if (membership(reg, w)) reg.witnesses.push_back(w);
  return reg;
}

Region project_to_allowing(const Region& enabling) {
  Region out;
  out.kind = RegionKind::Allowing;
  out.rate_count = enabling.rate_count;
  std::vector<std::string> rates(enabling.ambient.names().begin(),
                                 enabling.ambient.names().begin() + static_cast<std::ptrdiff_t>(enabling.rate_count));
  out.ambient = SymbolTable(rates);
  out.case_tag = enabling.case_tag;
  for (const auto& conj : enabling.conjuncts) {
    Conjunct kept;
    for (const auto& c : conj) {
      bool rates_only = true;
      for (std::size_t i = enabling.rate_count; i < enabling.dimension(); ++i)
        if (!c.poly.free_of(i)) rates_only = false;
      if (rates_only) kept.push_back({truncate(c.poly, enabling.rate_count), c.rel});
    }
    out.conjuncts.push_back(std::move(kept));
  }
  for (const auto& w : enabling.witnesses)
    out.witnesses.emplace_back(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(enabling.rate_count));
  return out;
}

namespace {

bool sign_ok(int s, Relation rel) {
  return rel == Relation::Positive ? s > 0 : (rel == Relation::Negative ? s < 0 : s == 0);
}

struct CondU {
  UniPoly p;
  Relation rel;
};

// Whether the conditions hold at the single real root of `e` isolated in (lo, hi).
bool holds_at_irrational_root(const UniPoly& e, Rational lo, Rational hi, const std::vector<CondU>& conds) {
  for (const auto& c : conds) {
    UniPoly g = gcd(e, c.p);
    bool vanishes = g.degree() > 0 && count_roots_open(g, Bound::at(lo), Bound::at(hi)) > 0;
    if (c.rel == Relation::Zero) {
      if (!vanishes) return false;
      continue;
    }
    if (vanishes) return false;
    // shrink the bracket until c.p has no root in it
    int s_lo = sign(e(lo));
    while (sign(c.p(lo)) == 0 || sign(c.p(hi)) == 0 || count_roots_open(c.p, Bound::at(lo), Bound::at(hi)) > 0) {
      Rational mid = (lo + hi) / 2;
      int s = sign(e(mid));
      if (s == 0) return false;  // cannot happen for an irrational root
      (s == s_lo ? lo : hi) = mid;
    }
    if (!sign_ok(sign(c.p(lo)), c.rel)) return false;
  }
  return true;
}

bool conjunct_fiber_nonempty(const std::vector<CondU>& conds) {
  std::vector<CondU> moving;
  for (const auto& c : conds) {
    if (c.p.degree() <= 0) {
      if (!sign_ok(c.p.is_zero() ? 0 : sign(c.p.leading()), c.rel)) return false;
    } else {
      moving.push_back(c);
    }
  }
  if (moving.empty()) return true;
  auto holds_at = [&](const Rational& x) {
    return std::all_of(moving.begin(), moving.end(), [&](const CondU& c) { return sign_ok(sign(c.p(x)), c.rel); });
  };
  auto eq = std::find_if(moving.begin(), moving.end(), [](const CondU& c) { return c.rel == Relation::Zero; });
  if (eq != moving.end()) {
    for (const auto& root : isolate_roots(eq->p, Bound::minus_infinity(), Bound::plus_infinity())) {
      if (root.exact ? holds_at(root.lo) : holds_at_irrational_root(eq->p, root.lo, root.hi, moving)) return true;
    }
    return false;
  }
  // Only strict conditions: signs are constant between consecutive roots of the product.
  UniPoly prod = UniPoly::constant(1);
  for (const auto& c : moving) prod = prod * c.p;
  auto roots = isolate_roots(prod, Bound::minus_infinity(), Bound::plus_infinity());
  std::vector<Rational> tests;
  if (roots.empty()) {
    tests.push_back(0);
  } else {
    tests.push_back(roots.front().lo - 1);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) tests.push_back((roots[i].hi + roots[i + 1].lo) / 2);
    tests.push_back(roots.back().hi + 1);
  }
  return std::any_of(tests.begin(), tests.end(), holds_at);
}

}  // namespace

bool fiber_nonempty(const Region& enabling, std::span<const Rational> kappa) {
  if (kappa.size() != enabling.rate_count) throw std::invalid_argument("rate vector does not match the region");
  for (const auto& k : kappa)
    if (sign(k) <= 0) throw std::invalid_argument("rate constants must be positive");
  if (enabling.total_count() == 0) return membership(enabling, kappa);
  if (enabling.total_count() > 1) throw UnsupportedFamily("fiber test supports a single total symbol");
  const std::size_t cvar = enabling.rate_count;
  for (const auto& conj : enabling.conjuncts) {
    std::vector<CondU> conds;
    for (const auto& c : conj) {
      Poly p = c.poly;
      for (std::size_t i = 0; i < enabling.rate_count; ++i) p = p.substitute(i, kappa[i]);
      conds.push_back({p.to_univariate(cvar), c.rel});
    }
    if (conjunct_fiber_nonempty(conds)) return true;
  }
  return false;
}

Region region_two_species_allowing(const ReactionNetwork& net) {
  return project_to_allowing(region_two_species_enabling(net));
}

// ---------------------------------------------------------------------------

ClassificationVerdict classify_extended(const ReactionNetwork& net) {
  auto v = classify(net);
  if (v.matched != MatchedCase::Unsupported) return v;
  auto shape = acr_shape(net);
  if (!shape || shape->exponents > 3) return v;
  ClassificationVerdict out;
  out.matched = MatchedCase::AcrReduction;
  out.multistationary = shape->exponents == 3 && alternating(shape->signs);
  out.nondegenerate = out.multistationary;
  if (!out.multistationary) out.reason = "fixed-species reduction leaves no alternating trinomial";
  return out;
}

RegionPair build_regions(const ReactionNetwork& net) {
  RegionPair out;
  out.verdict = classify_extended(net);
  const std::size_t d = net.species_count() - stoichiometric_dimension(net);
  auto full_dim_pair = [&](Region allowing) {
    out.allowing = allowing;
    out.enabling = std::move(allowing);
    out.enabling.kind = RegionKind::Enabling;
  };
  switch (out.verdict.matched) {
    case MatchedCase::Unsupported:
      throw UnsupportedFamily(out.verdict.reason);
    case MatchedCase::AcrReduction:
      full_dim_pair(region_acr_reduction(net));
      return out;
    default:
      break;
  }
  if (net.species_count() == 1) {
    bool three = net.reaction_count() == 3 && out.verdict.multistationary;
    full_dim_pair(three ? region_one_species_three_reactions(net) : region_one_species_net_trinomial(net));
    return out;
  }
  if (net.species_count() == 2 && net.reaction_count() == 2) {
    out.enabling = region_two_species_enabling(net);
    out.allowing = project_to_allowing(out.enabling);
    return out;
  }
  // A single reaction, any species count.
  out.allowing = make_region(RegionKind::Allowing, net.rate_labels(), 0, "single_reaction");
  out.enabling = make_region(RegionKind::Enabling, net.rate_labels(), d, "single_reaction");
  if (d > 0) out.enabling.conservation = conservation_matrix(net);
  return out;
}

void split_point(const Region& region, std::span<const Rational> point, std::vector<Rational>& kappa,
                 std::vector<Rational>& totals) {
  if (point.size() != region.dimension()) throw std::invalid_argument("point dimension does not match the region");
  kappa.assign(point.begin(), point.begin() + static_cast<std::ptrdiff_t>(region.rate_count));
  totals.assign(point.begin() + static_cast<std::ptrdiff_t>(region.rate_count), point.end());
}

SteadyStateSystem system_for(const ReactionNetwork& net, const Region& region) {
  if (region.conservation && region.conservation->rows > 0) return steady_state_system(net, *region.conservation);
  return steady_state_system(net);
}

// ---------------------------------------------------------------------------
// Connectivity

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Connected:
      return "connected";
    case Verdict::Disconnected:
      return "disconnected";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

// Reduces a conjunct of strict conditions to the form {g < 0} over an open
// orthant using sign flips of total symbols and positive linear changes of
// rate variables. Returns the explanation on success.
std::optional<std::string> one_negative_coefficient(const Conjunct& conj, const SymbolTable& ambient,
                                                    std::size_t rate_count) {
  std::vector<Poly> polys;
  for (const auto& c : conj) {
    if (c.rel == Relation::Zero) return std::nullopt;
    polys.push_back(c.rel == Relation::Positive ? c.poly : -c.poly);
  }
  const std::size_t nv = ambient.size();
  std::vector<std::string> notes;
  auto is_single_var = [&](const Poly& p, std::size_t& v, int& s) {
    if (p.size() != 1) return false;
    const auto& [m, coeff] = *p.terms().begin();
    std::size_t count = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) {
        if (m[i] != 1) return false;
        v = i;
        ++count;
      }
    s = sign(coeff);
    return count == 1;
  };
  // Orthant constraints on totals.
  std::vector<bool> positive(nv, false);
  for (std::size_t i = 0; i < rate_count; ++i) positive[i] = true;
  for (std::size_t idx = 0; idx < polys.size();) {
    std::size_t v = 0;
    int s = 0;
    if (is_single_var(polys[idx], v, s)) {
      if (s < 0 && v >= rate_count) {
        for (auto& q : polys) q = q.substitute(v, -var(nv, v));
        notes.push_back(ambient.name(v) + " -> -" + ambient.name(v));
      }
      if (s > 0 || v >= rate_count) {
        positive[v] = true;
        polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(idx));
        continue;
      }
      return std::nullopt;  // a rate variable required negative
    }
    ++idx;
  }
  for (const auto& p : polys)
    for (std::size_t i = 0; i < nv; ++i)
      if (!positive[i] && !p.free_of(i)) return std::nullopt;
  // Linear changes u = c_q k_q - sum |c_j| k_j on rate variables.
  bool changed = true;
  while (changed && polys.size() > 1) {
    changed = false;
    for (std::size_t idx = 0; idx < polys.size() && !changed; ++idx) {
      const Poly& p = polys[idx];
      if (p.total_degree() != 1 || p.size() < 2) continue;
      std::optional<std::size_t> q;
      bool ok = true;
      for (const auto& [m, coeff] : p.terms()) {
        std::size_t v = static_cast<std::size_t>(std::find(m.begin(), m.end(), 1u) - m.begin());
        if (v >= rate_count) ok = false;
        if (sign(coeff) > 0) {
          if (q) ok = false;
          q = v;
        }
      }
      if (!ok || !q) continue;
      Rational cq = 0;
      Poly replacement = var(nv, *q);
      for (const auto& [m, coeff] : p.terms()) {
        std::size_t v = static_cast<std::size_t>(std::find(m.begin(), m.end(), 1u) - m.begin());
        if (v == *q)
          cq = coeff;
        else
          replacement += abs(coeff) * var(nv, v);
      }
      replacement = (1 / cq) * replacement;
      std::ostringstream note;
      note << ambient.name(*q) << " := " << to_string(p, ambient);
      notes.push_back(note.str());
      Poly removed = p;
      polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(idx));
      for (auto& other : polys) other = other.substitute(*q, replacement);
      changed = true;
      (void)removed;
    }
  }
  std::string prefix = notes.empty() ? "" : "after ";
  for (std::size_t i = 0; i < notes.size(); ++i) prefix += (i ? ", " : "") + notes[i];
  if (!notes.empty()) prefix += ": ";
  if (polys.empty()) return prefix + "region is an open orthant";
  if (polys.size() != 1) return std::nullopt;
  Poly g = -polys[0];  // region is {g < 0}
  if (g.negative_terms() > 1) return std::nullopt;
  return prefix + to_string(g, ambient) + " < 0 has at most one negative coefficient";
}

}  // namespace

ConnectivityVerdict connectivity_verdict(const Region& region, const ReactionNetwork& net) {
  ConnectivityVerdict out;
  if (region.empty()) {
    out.value = Verdict::Connected;
    out.justification = "vacuous";
    out.detail = "empty region";
    return out;
  }
  if (region.conjuncts.size() == 1) {
    const auto& conj = region.conjuncts[0];
    bool has_equality =
        std::any_of(conj.begin(), conj.end(), [](const SignCondition& c) { return c.rel == Relation::Zero; });
    if (has_equality) {
      if (region.case_tag.find("degenerate_case") != std::string::npos) {
        out.value = Verdict::Connected;
        out.justification = "theorem_case";
        out.detail = "degenerate two-species two-reaction network: measure-zero region cut out by equalities "
                     "that are linear in one rate after fixing the others";
      }
      return out;
    }
    if (auto why = one_negative_coefficient(conj, region.ambient, region.rate_count)) {
      out.value = Verdict::Connected;
      out.justification = "one_negative_coefficient";
      out.detail = *why;
      return out;
    }
    return out;
  }
  // Union: each pair of conjuncts must be separated by a condition with opposite signs,
  // and each conjunct needs an oracle-validated witness.
  if (region.witnesses.size() != region.conjuncts.size()) return out;
  auto sys = system_for(net, region);
  for (std::size_t i = 0; i < region.conjuncts.size(); ++i) {
    const auto& w = region.witnesses[i];
    if (containing_conjunct(region, w) != i) return out;
    std::vector<Rational> kappa, totals;
    split_point(region, w, kappa, totals);
    auto res = count_positive_steady_states(sys, kappa, totals);
    if (!res.certified || !res.multistationary()) return out;
  }
  std::vector<std::string> separators;
  for (std::size_t i = 0; i < region.conjuncts.size(); ++i)
    for (std::size_t j = i + 1; j < region.conjuncts.size(); ++j) {
      std::optional<std::string> sep;
      for (const auto& a : region.conjuncts[i])
        for (const auto& b : region.conjuncts[j])
          if (a.rel == Relation::Positive && b.rel == Relation::Positive && a.poly == -b.poly)
            sep = to_string(a.poly, region.ambient);
      if (!sep) return out;
      separators.push_back(*sep);
    }
  out.value = Verdict::Disconnected;
  out.justification = "sign_pattern_split";
  out.detail = "conjuncts lie on opposite sides of " + separators[0] + " = 0 and each contains a witness with "
               "at least two positive steady states";
  out.witnesses = region.witnesses;
  return out;
}

}  // namespace msr
