#pragma once

#include "msregion/network.hpp"
#include "msregion/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msr {

class UnsupportedFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One-species reactions (m_i -> p_i) sorted by reactant coefficient.
struct OneSpeciesProfile {
  std::vector<unsigned> m, p;
  std::vector<std::size_t> original_index;  // position in the network's reaction list

  std::size_t size() const { return m.size(); }
  unsigned step(std::size_t i) const { return m[i] > p[i] ? m[i] - p[i] : p[i] - m[i]; }
};

OneSpeciesProfile one_species_profile(const ReactionNetwork& net);

using Point2 = std::array<long long, 2>;

/// Reactants y, yt and products of a two-species two-reaction network.
struct BoxDiagram {
  Point2 y{}, y_prime{}, yt{}, yt_prime{};
  std::optional<Rational> gamma;   // slope of y -> y'
  std::optional<Rational> alpha;   // slope of the reactant polytope
  std::optional<Rational> lambda;  // y' - y = -lambda (yt' - yt), lambda > 0
  int zigzag_form = 0;             // 1..4, or 0 for none

  Point2 v() const { return {y_prime[0] - y[0], y_prime[1] - y[1]}; }
  Point2 vt() const { return {yt_prime[0] - yt[0], yt_prime[1] - yt[1]}; }
  bool antiparallel() const { return lambda.has_value(); }
  bool reactants_differ_in_both() const { return y[0] != yt[0] && y[1] != yt[1]; }
};

BoxDiagram build_box_diagram(const ReactionNetwork& net);

enum class MatchedCase {
  OneSpecies,      // sign pattern of the net polynomial allows two roots
  Zigzag,          // nondegenerate two-species two-reaction network
  Degenerate,      // degenerate two-species two-reaction network, case 1..4
  AcrReduction,    // one species has a fixed steady-state value; set by the regions module
  NotMultistationary,
  Unsupported,
};

struct ClassificationVerdict {
  bool multistationary = false;
  bool nondegenerate = false;
  MatchedCase matched = MatchedCase::Unsupported;
  int detail = 0;  // zigzag form or degenerate case number
  /// For OneSpecies: feasible alternating patterns, "+-+" and/or "-+-".
  std::vector<std::string> patterns;
  std::string reason;

  std::string case_name() const;
};

/// Sign-pattern classification for one species and at most three reactions.
ClassificationVerdict classify_one_species(const ReactionNetwork& net);
/// One species, any number of reactions, provided the net polynomial has at
/// most three distinct exponents. Throws UnsupportedFamily otherwise.
ClassificationVerdict classify_net_trinomial(const ReactionNetwork& net);
ClassificationVerdict classify_two_species(const ReactionNetwork& net);
/// Dispatches to the covered families; MatchedCase::Unsupported otherwise.
ClassificationVerdict classify(const ReactionNetwork& net);

}  // namespace msr
