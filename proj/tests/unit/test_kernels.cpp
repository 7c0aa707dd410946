#include "doctest.h"
#include "msregion/kernels.hpp"

#include <cstring>
#include <random>

using namespace msr;

namespace {

std::vector<double> random_soa(std::size_t dim, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::lognormal_distribution<double> ln(0.0, 1.0);
  std::vector<double> soa(dim * n);
  for (auto& x : soa) x = ln(rng);
  return soa;
}

}  // namespace

TEST_CASE("scalar kernel matches exact evaluation") {
  SymbolTable t({"k1", "k2", "c"});
  auto p = parse_poly("k1*c^2 - 4*k2 + 1/3*k1^3*k2", t);
  auto cp = compile(p);
  auto soa = random_soa(3, 5, 1);
  std::vector<double> val(5), mag(5);
  eval_batch(Isa::Scalar, cp, soa, 5, val.data(), mag.data());
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<double> pt{soa[i], soa[5 + i], soa[10 + i]};
    CHECK(val[i] == doctest::Approx(p.evaluate(std::span<const double>(pt))));
    CHECK(mag[i] == doctest::Approx(p.magnitude(pt)));
  }
}

TEST_CASE("avx2 kernel is bitwise equal to the scalar kernel") {
  if (detected_isa() != Isa::Avx2) {
    MESSAGE("AVX2 not available; skipping");
    return;
  }
  SymbolTable t({"k1L", "k1R", "k2L", "k2R", "k3L", "k3R"});
  auto p = parse_poly("-4*k1L*k3L + 4*k1L*k3R + 4*k1R*k3L - 4*k1R*k3R + k2L^2 - 2*k2L*k2R + k2R^2", t);
  auto cp = compile(p);
  for (std::size_t n : {1u, 3u, 4u, 7u, 1001u}) {
    auto soa = random_soa(6, n, n);
    std::vector<double> v1(n), m1(n), v2(n), m2(n);
    eval_batch(Isa::Scalar, cp, soa, n, v1.data(), m1.data());
    eval_batch(Isa::Avx2, cp, soa, n, v2.data(), m2.data());
    CHECK(std::memcmp(v1.data(), v2.data(), n * sizeof(double)) == 0);
    CHECK(std::memcmp(m1.data(), m2.data(), n * sizeof(double)) == 0);
  }
}

TEST_CASE("batch classifier agrees with exact membership") {
  auto net = parse_network("A -> 0 ; k1L\nA -> 2A ; k1R\n2A -> A ; k2L\n2A -> 3A ; k2R\n3A -> 2A ; k3L\n3A -> 4A ; k3R");
  auto reg = build_regions(net).allowing;
  const std::size_t n = 2000;
  auto soa = random_soa(6, n, 9);
  for (Isa isa : {Isa::Scalar, detected_isa()}) {
    BatchClassifier bc(reg, isa);
    auto got = bc.classify(soa, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> pt;
      for (std::size_t v = 0; v < 6; ++v) pt.push_back(from_double(soa[v * n + i]));
      auto j = containing_conjunct(reg, pt);
      CHECK(got[i] == (j ? static_cast<int>(*j) : -1));
    }
  }
  // points on the boundary go to the exact path
  std::vector<double> edge{1, 1, 1, 1, 1, 1};
  BatchClassifier bc(reg);
  CHECK(bc.classify(edge, 1)[0] == -1);
  CHECK(bc.exact_fallbacks() == 2);
}
