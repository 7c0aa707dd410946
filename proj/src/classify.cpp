#include "msregion/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace msr {

std::string ClassificationVerdict::case_name() const {
  switch (matched) {
    case MatchedCase::OneSpecies: {
      std::string out = "one_species";
      for (const auto& p : patterns) out += p == "+-+" ? "_a" : "_b";
      return out;
    }
    case MatchedCase::Zigzag:
      return "zigzag_" + std::to_string(detail);
    case MatchedCase::Degenerate:
      return "degenerate_case_" + std::to_string(detail);
    case MatchedCase::AcrReduction:
      return "acr_reduction";
    case MatchedCase::NotMultistationary:
      return "not_multistationary";
    case MatchedCase::Unsupported:
      return "unsupported";
  }
  return "unsupported";
}

OneSpeciesProfile one_species_profile(const ReactionNetwork& net) {
  if (net.species_count() != 1) throw UnsupportedFamily("expected exactly one species");
  OneSpeciesProfile prof;
  std::vector<std::size_t> idx(net.reaction_count());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return net.reaction(a).reactant.coeffs[0] < net.reaction(b).reactant.coeffs[0];
  });
  for (auto i : idx) {
    prof.m.push_back(net.reaction(i).reactant.coeffs[0]);
    prof.p.push_back(net.reaction(i).product.coeffs[0]);
    prof.original_index.push_back(i);
  }
  return prof;
}

namespace {

ClassificationVerdict not_multi(std::string reason) {
  ClassificationVerdict v;
  v.matched = MatchedCase::NotMultistationary;
  v.reason = std::move(reason);
  return v;
}

ClassificationVerdict from_patterns(std::vector<std::string> patterns, const std::string& none_reason) {
  if (patterns.empty()) return not_multi(none_reason);
  ClassificationVerdict v;
  v.multistationary = true;
  v.nondegenerate = true;
  v.matched = MatchedCase::OneSpecies;
  v.patterns = std::move(patterns);
  return v;
}

}  // namespace

ClassificationVerdict classify_one_species(const ReactionNetwork& net) {
  if (net.species_count() != 1) throw UnsupportedFamily("expected exactly one species");
  if (net.reaction_count() > 3) throw UnsupportedFamily("one-species classification covers at most three reactions");
  if (net.reaction_count() <= 2) return not_multi("at most two reactions");
  auto prof = one_species_profile(net);
  if (!(prof.m[0] < prof.m[1] && prof.m[1] < prof.m[2])) return not_multi("reactant coefficients are not distinct");
  std::vector<std::string> patterns;
  if (prof.m[0] < prof.p[0] && prof.m[1] > prof.p[1] && prof.m[2] < prof.p[2]) patterns.push_back("+-+");
  if (prof.m[0] > prof.p[0] && prof.m[1] < prof.p[1] && prof.m[2] > prof.p[2]) patterns.push_back("-+-");
  return from_patterns(std::move(patterns), "reaction directions do not alternate");
}

ClassificationVerdict classify_net_trinomial(const ReactionNetwork& net) {
  if (net.species_count() != 1) throw UnsupportedFamily("expected exactly one species");
  // Which signs each monomial coefficient of the net polynomial can take.
  std::map<unsigned, std::pair<bool, bool>> can;  // exponent -> (positive, negative)
  for (const auto& r : net.reactions()) {
    auto& slot = can[r.reactant.coeffs[0]];
    (r.product.coeffs[0] > r.reactant.coeffs[0] ? slot.first : slot.second) = true;
  }
  if (can.size() > 3) throw UnsupportedFamily("net polynomial has more than three monomials");
  if (can.size() < 3) return not_multi("net polynomial has at most two monomials");
  std::vector<std::pair<bool, bool>> c;
  for (const auto& [e, s] : can) c.push_back(s);
  std::vector<std::string> patterns;
  if (c[0].first && c[1].second && c[2].first) patterns.push_back("+-+");
  if (c[0].second && c[1].first && c[2].second) patterns.push_back("-+-");
  return from_patterns(std::move(patterns), "no alternating sign pattern is feasible");
}

BoxDiagram build_box_diagram(const ReactionNetwork& net) {
  if (net.species_count() != 2 || net.reaction_count() != 2)
    throw UnsupportedFamily("box diagrams need two species and two reactions");
  BoxDiagram b;
  auto load = [](const Complex& c) { return Point2{c.coeffs[0], c.coeffs[1]}; };
  b.y = load(net.reaction(0).reactant);
  b.y_prime = load(net.reaction(0).product);
  b.yt = load(net.reaction(1).reactant);
  b.yt_prime = load(net.reaction(1).product);
  auto v = b.v(), vt = b.vt();
  if (v[0] != 0) b.gamma = make_rational(v[1], v[0]);
  if (b.yt[0] != b.y[0]) b.alpha = make_rational(b.yt[1] - b.y[1], b.yt[0] - b.y[0]);
  std::size_t j = vt[0] != 0 ? 0 : 1;
  Rational lam = make_rational(-v[j], vt[j]);
  auto q = [](long long x) { return Rational(static_cast<long>(x)); };
  if (sign(lam) > 0 && q(v[0]) == -lam * q(vt[0]) && q(v[1]) == -lam * q(vt[1])) b.lambda = lam;

  if (b.gamma && b.alpha && sign(*b.gamma) * sign(*b.alpha) < 0 && b.antiparallel()) {
    // The reactant with the smaller first coordinate is the left corner.
    bool y_left = b.y[0] < b.yt[0];
    Point2 arrow = y_left ? v : vt;
    int s0 = arrow[0] > 0 ? 1 : -1, s1 = arrow[1] > 0 ? 1 : -1;
    if (sign(*b.alpha) < 0)
      b.zigzag_form = (s0 > 0 && s1 > 0) ? 1 : 2;
    else
      b.zigzag_form = (s0 < 0 && s1 > 0) ? 3 : 4;
  }
  return b;
}

ClassificationVerdict classify_two_species(const ReactionNetwork& net) {
  auto b = build_box_diagram(net);
  if (!b.antiparallel()) return not_multi("reaction vectors are not negative multiples of each other");
  auto v = b.v();
  ClassificationVerdict out;
  out.multistationary = true;
  if (b.reactants_differ_in_both() && b.zigzag_form != 0) {
    bool slope_minus_one = *b.alpha == -1;
    out.nondegenerate = !slope_minus_one;
    out.matched = slope_minus_one ? MatchedCase::Degenerate : MatchedCase::Zigzag;
    out.detail = slope_minus_one ? 1 : b.zigzag_form;
    return out;
  }
  out.matched = MatchedCase::Degenerate;
  if (b.y == b.yt) {
    out.detail = 2;
  } else if (v[0] == 0 && b.yt[1] == b.y[1]) {
    out.detail = 3;
  } else if (b.yt[0] == b.y[0] && v[1] == 0) {
    out.detail = 4;
  } else {
    return not_multi(b.reactants_differ_in_both() ? "box diagram is not a zigzag"
                                                  : "reactants share a coordinate outside the degenerate cases");
  }
  return out;
}

ClassificationVerdict classify(const ReactionNetwork& net) {
  if (net.reaction_count() == 1) return not_multi("a single reaction");
  if (net.species_count() == 1) {
    if (net.reaction_count() <= 3) return classify_one_species(net);
    try {
      return classify_net_trinomial(net);
    } catch (const UnsupportedFamily& e) {
      ClassificationVerdict v;
      v.reason = e.what();
      return v;
    }
  }
  if (net.species_count() == 2 && net.reaction_count() == 2) return classify_two_species(net);
  ClassificationVerdict v;
  v.reason = "outside the covered families (one species, or two species with two reactions)";
  return v;
}

}  // namespace msr
