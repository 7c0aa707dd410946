#include "doctest.h"
#include "msregion/network.hpp"

using namespace msr;

TEST_CASE("parse the running example") {
  auto net = parse_network("2A + B -> 3A ; k1\nA -> B ; k2\n");
  CHECK(net.species() == std::vector<std::string>{"A", "B"});
  REQUIRE(net.reaction_count() == 2);
  CHECK(net.reaction(0).reactant.coeffs == std::vector<std::uint32_t>{2, 1});
  CHECK(net.reaction(0).vector() == std::vector<long long>{1, -1});
  CHECK(net.reaction(1).rate_label == "k2");
  auto W = conservation_matrix(net);
  REQUIRE(W.rows == 1);
  CHECK(W(0, 0) == 1);
  CHECK(W(0, 1) == 1);
  CHECK(stoichiometric_dimension(net) == 1);
  CHECK_FALSE(is_full_dimensional(net));
}

TEST_CASE("arrows, chains, labels and comments") {
  auto net = parse_network("0 <-> A ; r   # inflow\nA <- 2A -> 3A, B -> 0");
  REQUIRE(net.reaction_count() == 5);
  CHECK(net.rate_labels() == std::vector<std::string>{"r_f", "r_r", "k3", "k4", "k5"});
  CHECK(net.reaction(2).reactant.coeffs == std::vector<std::uint32_t>{2, 0});
  CHECK(net.reaction(2).product.coeffs == std::vector<std::uint32_t>{1, 0});
  CHECK(net.reaction(4).product.is_zero());
  CHECK(is_full_dimensional(net));
  CHECK(conservation_matrix(net).rows == 0);
  auto two = parse_network("A <-> B ; a b");
  CHECK(two.rate_labels() == std::vector<std::string>{"a", "b"});
  CHECK_FALSE(same_network(two, parse_network("A <-> B ; b a")));
  CHECK(same_network(parse_network("B -> A, A -> B"), parse_network("A <- B ; k1, B <- A ; k2")));
}

TEST_CASE("print then parse is the identity") {
  const char* texts[] = {"2A + B -> 3A ; k1\nA -> B ; k2", "0 <-> X ; u\n3X -> 2X + Y, Y -> 0",
                         "A + B <- C <-> 2D"};
  for (const char* t : texts) {
    auto net = parse_network(t);
    CHECK(same_network(parse_network(print_network(net)), net));
  }
}

TEST_CASE("malformed input is rejected with a position") {
  auto column_of = [](const char* text) {
    try {
      parse_network(text);
    } catch (const ParseError& e) {
      return std::pair<std::size_t, std::size_t>{e.line(), e.column()};
    }
    return std::pair<std::size_t, std::size_t>{0, 0};
  };
  CHECK(column_of("A -> B\nA -> -B").first == 2);
  CHECK(column_of("A -> 0B").second == 6);
  CHECK(column_of("A -> 1.5B").first == 1);
  CHECK(column_of("A + -> B").first == 1);
  CHECK(column_of("A B").first == 1);
  CHECK(column_of("A -> A").first == 1);
  CHECK(column_of("A -> B\nA -> B").first == 2);
  CHECK(column_of("A -> B ; x\nB -> A ; x").first == 2);
  CHECK(column_of("A -> B -> C ; x").first == 1);
  CHECK(column_of("# nothing").first != 0);
  CHECK(column_of("A -> 3000000000B").first == 1);
}
