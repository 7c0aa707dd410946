#include "doctest.h"
#include "msregion/classify.hpp"

using namespace msr;

TEST_CASE("one species, at most three reactions") {
  auto v = classify_one_species(parse_network("0 <- A, 2A -> 3A <- 4A"));
  CHECK(v.multistationary);
  CHECK(v.patterns == std::vector<std::string>{"-+-"});
  CHECK(v.case_name() == "one_species_b");
  CHECK_FALSE(classify_one_species(parse_network("0 <-> A")).multistationary);
  CHECK_FALSE(classify_one_species(parse_network("A -> 2A, 2A -> 3A, 3A -> 4A")).multistationary);
  CHECK_FALSE(classify_one_species(parse_network("A -> 0, A -> 2A, 3A -> 4A")).multistationary);
  CHECK(classify_one_species(parse_network("0 -> A, 2A -> A, 3A -> 4A")).case_name() == "one_species_a");
  CHECK_THROWS_AS(classify_one_species(parse_network("A -> 0, A -> 2A, 2A -> A, 3A -> 2A")), UnsupportedFamily);
  auto prof = one_species_profile(parse_network("4A -> 3A, A -> 0, 2A -> 3A"));
  CHECK(prof.m == std::vector<unsigned>{1, 2, 4});
  CHECK(prof.original_index == std::vector<std::size_t>{1, 2, 0});
  CHECK(prof.step(2) == 1);
}

TEST_CASE("one species via the net trinomial") {
  auto six = parse_network("A -> 0 ; k1L\nA -> 2A ; k1R\n2A -> A ; k2L\n2A -> 3A ; k2R\n3A -> 2A ; k3L\n3A -> 4A ; k3R");
  auto v = classify(six);
  CHECK(v.multistationary);
  CHECK(v.patterns.size() == 2);
  auto four = classify(parse_network("A -> 0 ; k1L\nA -> 2A ; k1R\n2A -> 3A ; k2R\n3A -> 2A ; k3L"));
  CHECK(four.patterns == std::vector<std::string>{"-+-"});
  CHECK(classify(parse_network("A -> 0, 2A -> A, 3A -> 2A, 4A -> 5A")).matched == MatchedCase::Unsupported);
  CHECK_FALSE(classify(parse_network("A -> 0, A -> 2A, 2A -> 3A, 2A -> A")).multistationary);
}

TEST_CASE("box diagram of the running example") {
  auto b = build_box_diagram(parse_network("2A + B -> 3A\nA -> B"));
  CHECK(*b.gamma == -1);
  CHECK(*b.alpha == 1);
  CHECK(*b.lambda == 1);
  CHECK(b.zigzag_form == 3);
  auto v = classify_two_species(parse_network("2A + B -> 3A\nA -> B"));
  CHECK(v.nondegenerate);
  CHECK(v.case_name() == "zigzag_3");
  auto none = build_box_diagram(parse_network("A -> 2A, B -> 2B"));
  CHECK_FALSE(none.lambda.has_value());
  CHECK_FALSE(classify_two_species(parse_network("A -> 2A, B -> 2B")).multistationary);
}

TEST_CASE("degenerate cases") {
  CHECK(classify(parse_network("3B -> A + 4B, 2A + B -> A")).case_name() == "degenerate_case_1");
  CHECK(classify(parse_network("A + B -> 2A + B, A + B -> B")).case_name() == "degenerate_case_2");
  CHECK(classify(parse_network("A + B -> A + 2B, 2A + B -> 2A")).case_name() == "degenerate_case_3");
  CHECK(classify(parse_network("A + B -> 2A + B, A + 2B -> 2B")).case_name() == "degenerate_case_4");
  auto d = classify(parse_network("3B -> A + 4B, 2A + B -> A"));
  CHECK(d.multistationary);
  CHECK_FALSE(d.nondegenerate);
}

TEST_CASE("dispatch outside the covered families") {
  CHECK(classify(parse_network("A -> B")).matched == MatchedCase::NotMultistationary);
  CHECK(classify(parse_network("A -> B, B -> C")).matched == MatchedCase::Unsupported);
  CHECK(classify(parse_network("A -> B, B -> A, 2A -> B")).matched == MatchedCase::Unsupported);
}
