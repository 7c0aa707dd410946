#pragma once

#include "msregion/connectivity.hpp"
#include "msregion/io.hpp"
#include "msregion/regions.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msr {

/// The region and the oracle disagree on a covered network.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Seeded sampler: rates log-uniform in [lo, hi], totals with a random sign
/// and log-uniform magnitude in [lo, hi].
struct SampleBox {
  double lo = 1.0 / 64;
  double hi = 64.0;
};

struct SweepResult {
  std::size_t requested = 0;
  std::size_t checked = 0;
  std::size_t near_boundary = 0;  // rejected within relative 1e-6 of a condition's zero set
  std::size_t uncertified = 0;    // oracle could not decide exactly
  std::size_t members = 0;
  std::size_t disagreements = 0;
  std::vector<std::vector<Rational>> disagreeing_points;
};

/// Region membership against the oracle at seeded random points.
SweepResult region_oracle_sweep(const ReactionNetwork& net, const Region& region, std::size_t samples,
                                std::uint64_t seed, SampleBox box = {}, double boundary_tol = 1e-6);

struct WitnessResult {
  std::vector<Rational> point;  // ambient coordinates of the enabling region
  std::string source;           // "given", "region" or "search"
  SteadyStateCount states;
};

/// A point with at least two positive steady states: the region's stored
/// witness when it has one, else a seeded search over region members.
std::optional<WitnessResult> find_witness(const ReactionNetwork& net, std::uint64_t seed, SampleBox box = {},
                                          std::size_t max_tries = 4000);
/// Steady states at a given point (rates then totals).
WitnessResult witness_at(const ReactionNetwork& net, const std::vector<Rational>& point);

struct AnalyzeOptions {
  bool verify = true;
  std::size_t verify_samples = 100;
  std::uint64_t seed = 42;
  SampleBox box;
  bool probe = false;
  std::size_t probe_samples = 4000;
};

/// Full report; throws InconsistencyError when the self-check disagrees.
Json analyze(const ReactionNetwork& net, const AnalyzeOptions& opt);

/// Descartes, Sturm and (when the shape allows) trinomial trichotomy counts
/// of positive roots for a univariate polynomial written in one symbol.
Json count_roots_report(const std::string& poly_text);

}  // namespace msr
