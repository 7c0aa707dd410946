#pragma once

#include "msregion/kernels.hpp"
#include "msregion/regions.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace msr {

/// Rates are sampled log-uniformly in their interval, totals uniformly.
struct ProbeConfig {
  std::vector<std::pair<double, double>> box;  // one interval per ambient symbol
  std::size_t n_samples = 4000;
  double link_radius = 1.0;  // Euclidean, in sampling coordinates
  unsigned segment_checks = 32;
  unsigned waypoint_restarts = 64;
  /// After the radius graph, try waypoint paths between nearest components.
  bool bridge = true;
  std::uint64_t seed = 42;
  Isa isa = detected_isa();
};

/// Box [lo, hi] for every rate and [-hi, hi] for every total.
std::vector<std::pair<double, double>> default_box(const Region& region, double lo, double hi);

struct ProbeReport {
  std::uint64_t seed = 0;
  std::size_t requested = 0;
  std::size_t accepted = 0;
  std::size_t edge_count = 0;
  std::size_t raw_component_count = 0;  // radius graph alone
  std::size_t bridge_count = 0;         // components merged by waypoint paths
  std::size_t component_count = 0;
  std::vector<std::vector<double>> representatives;  // ambient coordinates, one per component
  std::vector<std::vector<double>> samples;          // accepted points
  std::vector<int> labels;                           // component of each accepted point
  std::vector<int> conjunct;                         // containing conjunct of each accepted point
};

/// Connected components of the graph on accepted samples whose edges are
/// segments of length at most link_radius with every checkpoint inside.
/// A path may only move between conjuncts through a checkpoint lying in
/// both, so disjoint conjuncts never share a component.
ProbeReport probe(const Region& region, const ProbeConfig& cfg);

struct PathEvidence {
  bool connected_evidence = false;
  std::optional<std::vector<std::vector<double>>> path;  // verified polyline in ambient coordinates
};

/// Straight segment, then seeded random one-waypoint detours. A failure is
/// not a proof of disconnectedness.
PathEvidence connect_witnesses(const Region& region, const std::vector<double>& p, const std::vector<double>& q,
                               const ProbeConfig& cfg);

/// Sampling coordinates (log for rates) and back.
std::vector<double> to_sampling(const Region& region, const std::vector<double>& x);
std::vector<double> from_sampling(const Region& region, const std::vector<double>& u);

}  // namespace msr
