#pragma once

#include "msregion/linalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace msr {

/// Stoichiometric coefficients of one complex, indexed by species.
struct Complex {
  std::vector<std::uint32_t> coeffs;

  bool is_zero() const;
  friend auto operator<=>(const Complex&, const Complex&) = default;
};

struct Reaction {
  Complex reactant;
  Complex product;
  std::string rate_label;

  /// product - reactant, per species.
  std::vector<long long> vector() const;
  friend bool operator==(const Reaction&, const Reaction&) = default;
};

/// Syntax or semantic error in network text, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class NetworkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ReactionNetwork {
 public:
  ReactionNetwork() = default;
  /// Validates: nonzero reaction vectors, distinct reactions and labels,
  /// every species used, complexes sized to the species list.
  ReactionNetwork(std::vector<std::string> species, std::vector<Reaction> reactions);

  std::size_t species_count() const { return species_.size(); }
  std::size_t reaction_count() const { return reactions_.size(); }
  const std::vector<std::string>& species() const { return species_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }
  const Reaction& reaction(std::size_t i) const { return reactions_.at(i); }
  std::vector<std::string> rate_labels() const;

  friend bool operator==(const ReactionNetwork&, const ReactionNetwork&) = default;

 private:
  std::vector<std::string> species_;
  std::vector<Reaction> reactions_;
};

/// Conservation-law matrix W, d x n, rows in RREF with unit pivots.
using ConservationMatrix = RationalMatrix;

/// Parses the network DSL. Statements are separated by newlines or commas:
///
///   complex ARROW complex [ARROW complex ...] [; label ...]
///
/// with ARROW one of "->", "<-", "<->", complexes "0" or "2A + B", and
/// comments from '#'. Unlabeled reactions get k1, k2, ... by position.
ReactionNetwork parse_network(std::string_view text);

/// One reaction per line with explicit labels. Parsing the output gives a
/// network that is `same_network` to the input; species order may differ.
std::string print_network(const ReactionNetwork& net);

/// Equal up to a renumbering of species: same names, same reactions in the same order.
bool same_network(const ReactionNetwork& a, const ReactionNetwork& b);
std::string format_complex(const Complex& c, const std::vector<std::string>& species);

/// n x r; column i is y_i' - y_i.
RationalMatrix stoichiometric_matrix(const ReactionNetwork& net);
/// RREF basis of the left null space of the stoichiometric matrix; 0 x n when full dimensional.
ConservationMatrix conservation_matrix(const ReactionNetwork& net);
std::size_t stoichiometric_dimension(const ReactionNetwork& net);
bool is_full_dimensional(const ReactionNetwork& net);

}  // namespace msr
