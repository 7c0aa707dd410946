#pragma once

#include "msregion/classify.hpp"
#include "msregion/massaction.hpp"
#include "msregion/network.hpp"
#include "msregion/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msr {

enum class Relation { Negative, Zero, Positive };
std::string relation_symbol(Relation r);  // "<0", "=0", ">0"

struct SignCondition {
  Poly poly;
  Relation rel = Relation::Positive;

  bool holds(std::span<const Rational> point) const;
  friend bool operator==(const SignCondition&, const SignCondition&) = default;
};

/// Integer primitive form with kappa-monomial content removed; strict
/// conditions become "p > 0", equalities get a positive leading term.
SignCondition normalize(SignCondition c, std::size_t rate_count);

enum class RegionKind { Allowing, Enabling };

using Conjunct = std::vector<SignCondition>;

/// Union of conjunctions of sign conditions over the positive rate orthant
/// (times R^d for the totals). No conjuncts means empty; one empty conjunct
/// is the whole domain.
struct Region {
  RegionKind kind = RegionKind::Allowing;
  SymbolTable ambient;  // rate labels, then total symbols
  std::size_t rate_count = 0;
  std::vector<Conjunct> conjuncts;
  std::string case_tag;
  std::optional<ConservationMatrix> conservation;
  std::optional<std::string> symbolic_cutoff;
  /// Optional points (ambient coordinates), one per conjunct, inside it.
  std::vector<std::vector<Rational>> witnesses;

  bool empty() const { return conjuncts.empty(); }
  bool whole_domain() const { return conjuncts.size() == 1 && conjuncts[0].empty(); }
  std::size_t dimension() const { return ambient.size(); }
  std::size_t total_count() const { return ambient.size() - rate_count; }
};

bool membership(const Region& region, std::span<const Rational> point);
/// Index of the conjunct containing the point, if any.
std::optional<std::size_t> containing_conjunct(const Region& region, std::span<const Rational> point);
/// min over conditions of |p(x)| / sum |terms of p at x|; infinity when there are none.
double boundary_distance(const Region& region, std::span<const double> point);

/// Net rate polynomial of a one-species network, over x1 and the rate labels.
Poly net_ode_poly(const ReactionNetwork& net);

Region region_one_species_three_reactions(const ReactionNetwork& net);
Region region_one_species_net_trinomial(const ReactionNetwork& net);
Region region_acr_reduction(const ReactionNetwork& net);
/// Enabling region with respect to the matrix in `conservation`.
Region region_two_species_enabling(const ReactionNetwork& net);
Region region_two_species_allowing(const ReactionNetwork& net);

/// Cutoff h for a nondegenerate two-species two-reaction network. With
/// b = c / v1, |b*|^s = C kappa / kappa~ and b* has sign `b_sign`.
struct Cutoff {
  Rational v1;
  int b_sign = 1;
  int s = 0;
  Rational C;
  Rational gamma, alpha, lambda;
  std::string kappa_label, kappa_tilde_label;

  /// e.g. "2*(k2/k1)^(1/2)"
  std::string symbolic() const;
  double evaluate(const Rational& kappa, const Rational& kappa_tilde) const;
  /// Tangency abscissa x1 at c = h.
  double tangency_x1(const Rational& kappa, const Rational& kappa_tilde) const;
};

Cutoff cutoff_c_star(const ReactionNetwork& net);

/// Case-analytic projection of an enabling region onto the rate constants.
Region project_to_allowing(const Region& enabling);

/// Whether some total c makes (kappa; c) a point of the region, decided
/// exactly by real root isolation in c. Needs at most one total symbol.
bool fiber_nonempty(const Region& enabling, std::span<const Rational> kappa);

/// Builds both regions for any covered network; throws UnsupportedFamily otherwise.
struct RegionPair {
  ClassificationVerdict verdict;
  Region allowing;
  Region enabling;
};
RegionPair build_regions(const ReactionNetwork& net);

/// Classification including the two-species ACR reduction shape.
ClassificationVerdict classify_extended(const ReactionNetwork& net);

/// Splits an ambient point into rates and totals.
void split_point(const Region& region, std::span<const Rational> point, std::vector<Rational>& kappa,
                 std::vector<Rational>& totals);

/// The system the region's totals refer to (custom W when present).
SteadyStateSystem system_for(const ReactionNetwork& net, const Region& region);

enum class Verdict { Connected, Disconnected, Unknown };
std::string verdict_name(Verdict v);

struct ConnectivityVerdict {
  Verdict value = Verdict::Unknown;
  std::string justification;  // one_negative_coefficient, theorem_case, sign_pattern_split, vacuous, none
  std::string detail;
  std::vector<std::vector<Rational>> witnesses;
};

/// Analytic verdict. Disconnected verdicts require the region's witnesses,
/// which are checked here against `net` with the steady-state oracle.
ConnectivityVerdict connectivity_verdict(const Region& region, const ReactionNetwork& net);

}  // namespace msr
