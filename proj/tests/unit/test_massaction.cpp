#include "doctest.h"
#include "msregion/massaction.hpp"

#include <random>

using namespace msr;

namespace {
std::vector<Rational> q(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}
Rational random_positive(std::mt19937_64& rng) { return make_rational(1 + static_cast<long>(rng() % 40), 1 + static_cast<long>(rng() % 12)); }
}  // namespace

TEST_CASE("ODE right-hand side of the running example") {
  auto net = parse_network("2A + B -> 3A ; k1\nA -> B ; k2");
  auto sys = steady_state_system(net);
  CHECK(to_string(sys.odes[0], sys.symbols) == "x1^2*x2*k1 - x1*k2");
  CHECK(sys.odes[0] + sys.odes[1] == Poly(4));
  CHECK(sys.total_symbols == std::vector<std::string>{"c"});
}

TEST_CASE("ODEs of the absolute-robustness network") {
  auto net = parse_network("A -> A + B ; k1\nA + B -> A ; k2\n2B -> 3B ; k3\nA -> 2A ; k5\n2A -> A ; k6");
  auto sys = steady_state_system(net);
  CHECK(sys.conservation_count() == 0);
  CHECK(sys.odes[0] == parse_poly("k5*x1 - k6*x1^2", sys.symbols));
  CHECK(sys.odes[1] == parse_poly("k1*x1 - k2*x1*x2 + k3*x2^2", sys.symbols));
}

TEST_CASE("running example has the two textbook steady states") {
  auto sys = steady_state_system(parse_network("2A + B -> 3A ; k1\nA -> B ; k2"));
  auto res = count_positive_steady_states(sys, q({1, 1}), {make_rational(5, 2)});
  CHECK(res.count == 2);
  CHECK(res.certified);
  CHECK_FALSE(res.boundary);
  REQUIRE(res.witnesses.size() == 2);
  CHECK(res.witnesses[0].exact);
  CHECK(res.witnesses[0].x == std::vector<Rational>{make_rational(1, 2), Rational(2)});
  CHECK(res.witnesses[1].x == std::vector<Rational>{Rational(2), make_rational(1, 2)});
  CHECK(jacobian_restricted_rank(sys, q({1, 1}), res.witnesses[0].x) == 1);
  // tangency at c = 2: one double steady state
  auto edge = count_positive_steady_states(sys, q({1, 1}), {Rational(2)});
  CHECK(edge.count == 1);
  CHECK(edge.boundary);
  CHECK(count_positive_steady_states(sys, q({1, 1}), {Rational(1)}).count == 0);
}

TEST_CASE("six-reaction one-species network with the cubic (x-1)(x-2)x") {
  auto net = parse_network(
      "A -> 0 ; k1L\nA -> 2A ; k1R\n2A -> A ; k2L\n2A -> 3A ; k2R\n3A -> 2A ; k3L\n3A -> 4A ; k3R");
  auto sys = steady_state_system(net);
  auto res = count_positive_steady_states(sys, q({1, 3, 4, 1, 1, 2}), {});
  CHECK(res.count == 2);
  REQUIRE(res.witnesses.size() == 2);
  CHECK(res.witnesses[0].x[0] == 1);
  CHECK(res.witnesses[1].x[0] == 2);
  CHECK(count_positive_steady_states(sys, q({3, 1, 1, 4, 2, 1}), {}).count == 2);
}

TEST_CASE("full-dimensional network via a rational abscissa") {
  auto net = parse_network("A -> A + B ; k1\nA + B -> A ; k2\n2B -> 3B ; k3\nA -> 2A ; k5\n2A -> A ; k6");
  auto sys = steady_state_system(net);
  auto res = count_positive_steady_states(sys, q({1, 4, 1, 4, 1}), {});
  CHECK(res.count == 2);  // x1 = 4, x2^2 - 16 x2 + 4 = 0
  CHECK(res.certified);
  for (const auto& w : res.witnesses) CHECK(w.residual < 1e-12);
  CHECK(count_positive_steady_states(sys, q({1, 1, 1, 1, 1}), {}).count == 0);
}

TEST_CASE("full-dimensional network via the resultant") {
  // k1 = k2 x1 x2 and k3 = k2 x1 x2 + k4 x2^2
  auto net = parse_network("0 -> A ; k1\nA + B -> 0 ; k2\n0 -> B ; k3\n2B -> B ; k4");
  auto sys = steady_state_system(net);
  auto one = count_positive_steady_states(sys, q({1, 1, 2, 1}), {});
  CHECK(one.count == 1);
  CHECK(one.witnesses.at(0).x == q({1, 1}));
  auto irr = count_positive_steady_states(sys, q({1, 1, 3, 1}), {});
  CHECK(irr.count == 1);
  CHECK(irr.certified);
  REQUIRE(irr.witnesses.size() == 1);
  CHECK(to_double(irr.witnesses[0].x[1]) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(count_positive_steady_states(sys, q({1, 1, 1, 1}), {}).count == 0);
}

TEST_CASE("conservation rows annihilate the ODEs and evaluation agrees") {
  const char* nets[] = {"2A + B -> 3A\nA -> B", "A + B -> 2B, B -> 0, 0 -> A", "A + 2B -> 3A + B, 2A -> 2B",
                        "3A -> 2A + B ; a\n B <-> A ; r"};
  std::mt19937_64 rng(11);
  for (const char* text : nets) {
    auto net = parse_network(text);
    auto sys = steady_state_system(net);
    const std::size_t n = net.species_count();
    for (std::size_t row = 0; row < sys.cons.rows; ++row) {
      Poly sum(n + net.reaction_count());
      for (std::size_t j = 0; j < n; ++j) sum += sys.cons(row, j) * sys.odes[j];
      CHECK(sum.is_zero());
    }
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> kappa, x;
      for (std::size_t i = 0; i < net.reaction_count(); ++i) kappa.push_back(random_positive(rng));
      for (std::size_t j = 0; j < n; ++j) x.push_back(random_positive(rng));
      auto f = specialize(sys, kappa);
      for (std::size_t j = 0; j < n; ++j) {
        Rational direct = 0;
        for (std::size_t i = 0; i < net.reaction_count(); ++i) {
          Rational mono = kappa[i];
          for (std::size_t s = 0; s < n; ++s) mono *= pow(x[s], net.reaction(i).reactant.coeffs[s]);
          direct += mono * Rational(static_cast<long>(net.reaction(i).vector()[j]));
        }
        CHECK(f[j].evaluate(x) == direct);
      }
    }
  }
}

TEST_CASE("one-species oracle equals the Sturm count of the net polynomial") {
  auto net = parse_network("0 <- A, 2A -> 3A <- 4A");
  auto sys = steady_state_system(net);
  std::mt19937_64 rng(5);
  int multi = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Rational> kappa{random_positive(rng), random_positive(rng), random_positive(rng)};
    auto u = specialize(sys, kappa)[0].to_univariate(0);
    auto res = count_positive_steady_states(sys, kappa, {});
    CHECK(res.count == sturm_count_positive(u));
    if (res.count >= 2) ++multi;
    for (const auto& w : res.witnesses) CHECK(w.residual < 1e-12);
  }
  CHECK(multi > 0);
}

TEST_CASE("oracle preconditions") {
  auto sys = steady_state_system(parse_network("A -> 2A"));
  CHECK_THROWS_AS(count_positive_steady_states(sys, q({-1}), {}), OracleError);
  CHECK(count_positive_steady_states(sys, q({1}), {}).count == 0);
  auto three = steady_state_system(parse_network("A -> B, B -> C"));
  CHECK_THROWS_AS(count_positive_steady_states(three, q({1, 1}), {Rational(1)}), OracleError);
  auto deg = steady_state_system(parse_network("A -> 2A ; a\nA -> 0 ; b"));
  CHECK(count_positive_steady_states(deg, q({1, 1}), {}).infinite);
}

TEST_CASE("resultant path with both equations quadratic in x2") {
  // x1 = k1/(k2 x2^2) and x2^3 - 3 x2 + 1 = 0 at unit rates with k3 = 3
  auto net = parse_network("0 -> A ; k1\nA + 2B -> 2B ; k2\n0 -> B ; k3\nA + B -> A ; k4\n2B -> B ; k5");
  auto sys = steady_state_system(net);
  auto res = count_positive_steady_states(sys, q({1, 1, 3, 1, 1}), {});
  CHECK(res.certified);
  CHECK(res.count == 2);
  for (const auto& w : res.witnesses) {
    CHECK(w.residual < 1e-9);
    double x2 = to_double(w.x[1]);
    CHECK(x2 * x2 * x2 - 3 * x2 + 1 == doctest::Approx(0.0).epsilon(1e-9));
  }
  // x2^3 - x2 + 1 has a single, negative, real root
  CHECK(count_positive_steady_states(sys, q({1, 1, 1, 1, 1}), {}).count == 0);
}
