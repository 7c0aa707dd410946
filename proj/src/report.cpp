#include "msregion/report.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace msr {

namespace {

std::vector<Rational> sample_point(const Region& region, std::mt19937_64& rng, const SampleBox& box) {
  std::uniform_real_distribution<double> logu(std::log(box.lo), std::log(box.hi));
  std::bernoulli_distribution coin(0.5);
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < region.dimension(); ++i) {
    double mag = std::exp(logu(rng));
    if (i >= region.rate_count && coin(rng)) mag = -mag;
    pt.push_back(from_double(mag));
  }
  return pt;
}

std::vector<double> to_doubles(const std::vector<Rational>& pt) {
  std::vector<double> out;
  for (const auto& q : pt) out.push_back(to_double(q));
  return out;
}

std::string point_text(const std::vector<Rational>& pt) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? ", " : "(") << to_string(pt[i]);
  os << ")";
  return os.str();
}

}  // namespace

SweepResult region_oracle_sweep(const ReactionNetwork& net, const Region& region, std::size_t samples,
                                std::uint64_t seed, SampleBox box, double boundary_tol) {
  SweepResult out;
  out.requested = samples;
  auto sys = system_for(net, region);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    auto pt = sample_point(region, rng, box);
    if (boundary_distance(region, to_doubles(pt)) < boundary_tol) {
      ++out.near_boundary;
      continue;
    }
    std::vector<Rational> kappa, totals;
    split_point(region, pt, kappa, totals);
    auto res = count_positive_steady_states(sys, kappa, totals);
    if (!res.certified) {
      ++out.uncertified;
      continue;
    }
    ++out.checked;
    bool in = membership(region, pt);
    out.members += in;
    if (in != res.multistationary()) {
      ++out.disagreements;
      out.disagreeing_points.push_back(pt);
    }
  }
  return out;
}

WitnessResult witness_at(const ReactionNetwork& net, const std::vector<Rational>& point) {
  auto rp = build_regions(net);
  const Region& reg = rp.enabling;
  if (point.size() != reg.dimension())
    throw std::invalid_argument("expected " + std::to_string(reg.dimension()) + " coordinates (rates, then totals)");
  std::vector<Rational> kappa, totals;
  split_point(reg, point, kappa, totals);
  WitnessResult w;
  w.point = point;
  w.source = "given";
  w.states = count_positive_steady_states(system_for(net, reg), kappa, totals);
  return w;
}

std::optional<WitnessResult> find_witness(const ReactionNetwork& net, std::uint64_t seed, SampleBox box,
                                          std::size_t max_tries) {
  auto rp = build_regions(net);
  const Region& reg = rp.enabling;
  if (reg.empty()) return std::nullopt;
  auto sys = system_for(net, reg);
  auto try_point = [&](const std::vector<Rational>& pt, const char* source) -> std::optional<WitnessResult> {
    std::vector<Rational> kappa, totals;
    split_point(reg, pt, kappa, totals);
    auto res = count_positive_steady_states(sys, kappa, totals);
    if (!res.certified || !res.multistationary()) return std::nullopt;
    return WitnessResult{pt, source, res};
  };
  for (const auto& w : reg.witnesses)
    if (auto got = try_point(w, "region")) return got;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < max_tries; ++i) {
    auto pt = sample_point(reg, rng, box);
    if (!membership(reg, pt)) continue;
    if (auto got = try_point(pt, "search")) return got;
  }
  return std::nullopt;
}

Json analyze(const ReactionNetwork& net, const AnalyzeOptions& opt) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["network"] = network_json(net);
  auto rp = build_regions(net);
  j["classification"] = verdict_json(rp.verdict);
  auto ca = connectivity_verdict(rp.allowing, net);
  auto ce = connectivity_verdict(rp.enabling, net);
  j["regions"] = {{"allowing", region_json(rp.allowing, &ca)}, {"enabling", region_json(rp.enabling, &ce)}};
  j["connectivity_agreement"] = ca.value == ce.value;

  if (opt.verify) {
    auto sweep = region_oracle_sweep(net, rp.enabling, opt.verify_samples, opt.seed, opt.box);
    j["self_check"] = {{"samples", sweep.requested},
                       {"checked", sweep.checked},
                       {"near_boundary", sweep.near_boundary},
                       {"uncertified", sweep.uncertified},
                       {"members", sweep.members},
                       {"disagreements", sweep.disagreements},
                       {"seed", opt.seed}};
    if (sweep.disagreements > 0)
      throw InconsistencyError("region and oracle disagree at " + point_text(sweep.disagreeing_points.front()));
  } else {
    j["self_check"] = nullptr;
  }

  if (auto w = find_witness(net, opt.seed, opt.box)) {
    Json point = Json::array();
    for (const auto& q : w->point) point.push_back(rational_json(q));
    j["witness"] = {{"point", point}, {"source", w->source}, {"steady_states", steady_states_json(w->states)}};
  } else {
    j["witness"] = nullptr;
  }

  if (opt.probe) {
    ProbeConfig cfg;
    cfg.seed = opt.seed;
    cfg.n_samples = opt.probe_samples;
    cfg.box = default_box(rp.allowing, opt.box.lo, opt.box.hi);
    j["probe"] = probe_json(probe(rp.allowing, cfg), rp.allowing);
  }
  return j;
}

Json count_roots_report(const std::string& poly_text) {
  SymbolTable symbols;
  Poly p = parse_poly(poly_text, symbols, true);
  if (symbols.size() > 1) throw std::invalid_argument("expected a polynomial in one variable");
  UniPoly u = symbols.size() == 0 ? UniPoly::constant(p.is_zero() ? Rational(0) : p.terms().begin()->second)
                                  : p.to_univariate(0);
  if (u.is_zero()) throw std::invalid_argument("the zero polynomial has infinitely many roots");
  Json j;
  j["poly"] = u.to_string(symbols.size() ? symbols.name(0) : "x");
  j["descartes"] = descartes_sign_changes(u);
  unsigned sturm = sturm_count_positive(u);
  j["sturm"] = sturm;
  j["trichotomy"] = nullptr;

  // x^m (a_n x^n + a_k x^k + a_0) with a_n, a_0 of one sign and a_k of the other
  std::vector<unsigned> exps;
  for (int e = 0; e <= u.degree(); ++e)
    if (sign(u.coeffs()[e]) != 0) exps.push_back(static_cast<unsigned>(e));
  if (exps.size() == 3) {
    const Rational& a0 = u.coeffs()[exps[0]];
    const Rational& ak = u.coeffs()[exps[1]];
    const Rational& an = u.coeffs()[exps[2]];
    if (sign(a0) == sign(an) && sign(ak) == -sign(an)) {
      TrinomialForm t(exps[2] - exps[0], exps[1] - exps[0], a0 / an, -ak / an);
      unsigned count = trinomial_positive_roots(t);
      j["trichotomy"] = {{"n", t.n()}, {"k", t.k()}, {"b", rational_json(a0 / an)}, {"c", rational_json(-ak / an)},
                         {"D", rational_json(trinomial_D(t))}, {"count", count}};
      j["agree"] = count == sturm;
    }
  }
  if (!j.contains("agree")) j["agree"] = true;
  return j;
}

}  // namespace msr
