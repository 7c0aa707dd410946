#include "doctest.h"
#include "msregion/connectivity.hpp"

using namespace msr;

namespace {

const char* kThree = "A -> 0 ; k1\n2A -> 3A ; k2\n4A -> 3A ; k3";
const char* kSplit = "A -> 0 ; k1L\nA -> 2A ; k1R\n2A -> A ; k2L\n2A -> 3A ; k2R\n3A -> 2A ; k3L\n3A -> 4A ; k3R";

ProbeConfig config(const Region& reg, double lo, double hi, std::size_t n) {
  ProbeConfig cfg;
  cfg.box = default_box(reg, lo, hi);
  cfg.n_samples = n;
  return cfg;
}

}  // namespace

TEST_CASE("probe on a connected one-species region") {
  auto reg = build_regions(parse_network(kThree)).allowing;
  auto rep = probe(reg, config(reg, 1.0 / 16, 16, 2000));
  CHECK(rep.seed == 42);
  CHECK(rep.accepted > 100);
  CHECK(rep.component_count == 1);
  CHECK(rep.labels.size() == rep.accepted);
}

TEST_CASE("probe separates the two sign conjuncts") {
  auto reg = build_regions(parse_network(kSplit)).allowing;
  auto cfg = config(reg, 1.0 / 8, 8, 4000);
  auto rep = probe(reg, cfg);
  CHECK(rep.component_count == 2);
  CHECK(rep.raw_component_count >= rep.component_count);
  // one component per conjunct
  for (std::size_t i = 0; i < rep.accepted; ++i) CHECK((rep.labels[i] == rep.labels[0]) == (rep.conjunct[i] == rep.conjunct[0]));
  // same report whatever the kernel
  cfg.isa = Isa::Scalar;
  auto scalar = probe(reg, cfg);
  CHECK(scalar.labels == rep.labels);
  CHECK(scalar.edge_count == rep.edge_count);
  cfg.bridge = false;
  CHECK(probe(reg, cfg).component_count == rep.raw_component_count);
}

TEST_CASE("probe on an empty region") {
  auto reg = build_regions(parse_network("A -> 2A, 2A -> 3A")).allowing;
  auto rep = probe(reg, config(reg, 0.5, 2, 100));
  CHECK(rep.accepted == 0);
  CHECK(rep.component_count == 0);
}

TEST_CASE("connect witnesses") {
  auto running = build_regions(parse_network("2A + B -> 3A ; k1\nA -> B ; k2")).enabling;
  auto cfg = config(running, 1.0 / 8, 8, 100);
  auto ev = connect_witnesses(running, {1, 1, 3}, {4, 1, 5}, cfg);
  CHECK(ev.connected_evidence);
  REQUIRE(ev.path);
  CHECK(ev.path->front() == std::vector<double>{1, 1, 3});

  auto split = build_regions(parse_network(kSplit)).allowing;
  auto cfg51 = config(split, 1.0 / 8, 8, 100);
  std::vector<double> u{1, 3, 4, 1, 1, 2}, v{3, 1, 1, 4, 2, 1};
  // the straight segment leaves the region at a single point only; the conjunct rule still rejects it
  CHECK_FALSE(connect_witnesses(split, u, v, cfg51).connected_evidence);
  CHECK(connect_witnesses(split, u, u, cfg51).connected_evidence);
  CHECK_THROWS_AS(connect_witnesses(split, u, {1, 1, 1, 1, 1, 1}, cfg51), std::invalid_argument);
}
