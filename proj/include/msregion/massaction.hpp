#pragma once

#include "msregion/network.hpp"
#include "msregion/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msr {

/// Mass-action ODE right-hand side. Variables are x1..xn followed by the
/// rate labels, in the order of `system_symbols(net)`.
std::vector<Poly> ode_rhs(const ReactionNetwork& net);
SymbolTable system_symbols(const ReactionNetwork& net);

struct SteadyStateSystem {
  ReactionNetwork net;
  SymbolTable symbols;  // x1..xn, then rate labels
  std::vector<Poly> odes;
  ConservationMatrix cons;
  std::vector<std::string> total_symbols;  // "c" for d = 1, else c1..cd

  std::size_t species_count() const { return net.species_count(); }
  std::size_t reaction_count() const { return net.reaction_count(); }
  std::size_t conservation_count() const { return cons.rows; }
};

SteadyStateSystem steady_state_system(const ReactionNetwork& net);
/// Same, with a caller-chosen W whose rows span the orthogonal complement of S.
SteadyStateSystem steady_state_system(const ReactionNetwork& net, const ConservationMatrix& W);

std::vector<std::string> total_symbol_names(std::size_t d);

/// ODEs with kappa substituted, as polynomials in x1..xn only.
std::vector<Poly> specialize(const SteadyStateSystem& sys, const std::vector<Rational>& kappa);

struct SteadyState {
  std::vector<Rational> x;
  bool exact = false;     // x is an exact steady state
  double residual = 0.0;  // max |f_j(x)| / sum |terms of f_j| in double precision
};

struct SteadyStateCount {
  unsigned count = 0;      // distinct positive steady states in the class
  bool infinite = false;   // a continuum of positive steady states
  bool boundary = false;   // some positive steady state is a multiple root
  bool certified = true;   // false when the method could not decide exactly
  std::vector<SteadyState> witnesses;
  std::string note;

  bool multistationary() const { return infinite || count >= 2; }
};

/// Independent counting oracle for networks with at most two species.
SteadyStateCount count_positive_steady_states(const SteadyStateSystem& sys, const std::vector<Rational>& kappa,
                                              const std::vector<Rational>& totals);

/// Rank of the Jacobian at x restricted to the stoichiometric subspace.
std::size_t jacobian_restricted_rank(const SteadyStateSystem& sys, const std::vector<Rational>& kappa,
                                     const std::vector<Rational>& x);

class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace msr
