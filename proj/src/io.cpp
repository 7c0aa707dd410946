#include "msregion/io.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace msr {

namespace {

std::vector<std::pair<Monomial, Rational>> graded_terms(const Poly& p) {
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  auto degree = [](const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    unsigned da = degree(a.first), db = degree(b.first);
    return da != db ? da > db : a.first > b.first;
  });
  return terms;
}

// Positive terms first, so "k2^2*k5 - 4*k1*k3*k6" rather than "-4*k1*k3*k6 + k2^2*k5".
std::string readable(const Poly& p, const SymbolTable& symbols) {
  auto terms = graded_terms(p);
  std::stable_partition(terms.begin(), terms.end(), [](const auto& t) { return sign(t.second) > 0; });
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string body = to_string(Poly::term(abs(c), m), symbols);
    if (out.empty())
      out = (sign(c) < 0 ? "-" : "") + body;
    else
      out += (sign(c) < 0 ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

Json point_json(std::span<const Rational> x) {
  Json arr = Json::array();
  for (const auto& q : x) arr.push_back(rational_json(q));
  return arr;
}

Json conjunct_json(const Conjunct& conj, const SymbolTable& symbols) {
  Json arr = Json::array();
  for (const auto& c : conj) arr.push_back(condition_json(c, symbols));
  return arr;
}

}  // namespace

Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Json poly_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& [m, c] : graded_terms(p)) arr.push_back(Json::array({rational_json(c), m}));
  return arr;
}

Poly poly_from_json(const Json& j, std::size_t nvars) {
  Poly p(nvars);
  for (const auto& term : j) {
    const Json& c = term.at(0);
    Rational coeff = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
    auto m = term.at(1).get<Monomial>();
    if (m.size() != nvars) throw std::invalid_argument("exponent vector has the wrong length");
    p.add_term(m, coeff);
  }
  return p;
}

Json condition_json(const SignCondition& c, const SymbolTable& symbols) {
  std::string rel = relation_symbol(c.rel);
  return {{"poly", poly_json(c.poly)},
          {"rel", rel},
          {"text", readable(c.poly, symbols) + " " + rel.substr(0, 1) + " 0"}};
}

Json network_json(const ReactionNetwork& net) {
  Json reactions = Json::array();
  for (const auto& r : net.reactions())
    reactions.push_back({{"reactant", format_complex(r.reactant, net.species())},
                         {"product", format_complex(r.product, net.species())},
                         {"rate", r.rate_label}});
  std::size_t s = stoichiometric_dimension(net);
  return {{"species", net.species()},
          {"reactions", reactions},
          {"dimensions",
           {{"species", net.species_count()},
            {"reactions", net.reaction_count()},
            {"stoichiometric", s},
            {"conservation_laws", net.species_count() - s}}}};
}

Json verdict_json(const ClassificationVerdict& v) {
  Json j = {{"multistationary", v.multistationary},
            {"nondegenerate", v.nondegenerate},
            {"case", v.case_name()}};
  if (!v.patterns.empty()) j["sign_patterns"] = v.patterns;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

Json connectivity_json(const ConnectivityVerdict& v) {
  Json w = Json::array();
  for (const auto& p : v.witnesses) w.push_back(point_json(p));
  return {{"value", verdict_name(v.value)},
          {"justification", v.justification.empty() ? "none" : v.justification},
          {"detail", v.detail},
          {"witnesses", w}};
}

Json region_json(const Region& region, const ConnectivityVerdict* connectivity) {
  Json j;
  j["kind"] = region.kind == RegionKind::Allowing ? "allowing" : "enabling";
  j["ambient"] = region.ambient.names();
  j["case_tag"] = region.case_tag;
  j["empty"] = region.empty();
  j["conditions"] = Json::array();
  if (region.conjuncts.size() == 1) {
    j["conditions"] = conjunct_json(region.conjuncts[0], region.ambient);
  } else if (region.conjuncts.size() > 1) {
    Json any = Json::array();
    for (const auto& conj : region.conjuncts) any.push_back(conjunct_json(conj, region.ambient));
    j["any_of"] = any;
  }
  if (region.conservation) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < region.conservation->rows; ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < region.conservation->cols; ++c) row.push_back(rational_json((*region.conservation)(r, c)));
      rows.push_back(row);
    }
    j["conservation"] = rows;
  }
  if (region.symbolic_cutoff) j["cutoff"] = *region.symbolic_cutoff;
  Json w = Json::array();
  for (const auto& p : region.witnesses) w.push_back(point_json(p));
  j["witnesses"] = w;
  if (connectivity) j["connectivity"] = connectivity_json(*connectivity);
  return j;
}

Json steady_states_json(const SteadyStateCount& res) {
  Json states = Json::array();
  for (const auto& s : res.witnesses) {
    Json approx = Json::array();
    for (const auto& q : s.x) approx.push_back(to_double(q));
    Json st = {{"approx", approx}, {"exact", s.exact}};
    if (s.exact) st["x"] = point_json(s.x);
    states.push_back(st);
  }
  Json j = {{"count", res.count},
            {"infinite", res.infinite},
            {"boundary", res.boundary},
            {"certified", res.certified},
            {"states", states}};
  if (!res.note.empty()) j["note"] = res.note;
  return j;
}

Json probe_json(const ProbeReport& rep, const Region& region) {
  Json reps = Json::array();
  for (const auto& r : rep.representatives) reps.push_back(r);
  return {{"evidence", true},
          {"seed", rep.seed},
          {"requested_samples", rep.requested},
          {"accepted_samples", rep.accepted},
          {"edge_count", rep.edge_count},
          {"raw_component_count", rep.raw_component_count},
          {"bridge_count", rep.bridge_count},
          {"component_count", rep.component_count},
          {"ambient", region.ambient.names()},
          {"component_representatives", reps}};
}

void write_probe_csv(std::ostream& out, const ProbeReport& rep, const Region& region) {
  for (const auto& name : region.ambient.names()) out << name << ",";
  out << "conjunct,component\n";
  out.precision(17);
  for (std::size_t i = 0; i < rep.samples.size(); ++i) {
    for (double x : rep.samples[i]) out << x << ",";
    out << rep.conjunct[i] << "," << rep.labels[i] << "\n";
  }
}

}  // namespace msr
