#include "oracles/brute_force.hpp"

#include <doctest.h>

// Values frozen from the oracles themselves, cross-checked against the
// unlabelled rooted tree sequence and the Catalan numbers.

TEST_CASE("raw generator covers every increasing parent map and colouring") {
  CHECK(oracle::all_raw_trees(1, 1).size() == 1);
  CHECK(oracle::all_raw_trees(1, 4).size() == 6);        // 3!
  CHECK(oracle::all_raw_trees(2, 4).size() == 6 * 8);    // 3! * 2^3
  CHECK(oracle::all_raw_trees(3, 3).size() == 2 * 9);
}

TEST_CASE("oracle tree class counts") {
  const std::size_t one_coloured[] = {1, 1, 2, 4, 9, 20, 48, 115};
  for (int m = 1; m <= 8; ++m) CHECK(oracle::tree_classes(1, m).size() == one_coloured[m - 1]);
  const std::size_t two_coloured[] = {1, 2, 7, 26, 107};
  for (int m = 1; m <= 5; ++m) CHECK(oracle::tree_classes(2, m).size() == two_coloured[m - 1]);
}

TEST_CASE("oracle planar class counts") {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42};
  for (int m = 1; m <= 6; ++m) CHECK(oracle::planar_classes(1, m).size() == catalan[m - 1]);
  // planar 2-coloured: 1, 2, 7, 30
  const std::size_t two_coloured[] = {1, 2, 7, 30};
  for (int m = 1; m <= 4; ++m) CHECK(oracle::planar_classes(2, m).size() == two_coloured[m - 1]);
}

TEST_CASE("oracle automorphisms and isomorphism search") {
  const auto cherry = oracle::parse_bracket("[1:[],1:[]]");
  const auto mixed = oracle::parse_bracket("[1:[],2:[]]");
  const auto chain = oracle::parse_bracket("[1:[1:[]]]");
  CHECK(oracle::automorphisms(cherry) == 2);
  CHECK(oracle::automorphisms(mixed) == 1);
  CHECK(oracle::automorphisms(oracle::parse_bracket("[1:[1:[],1:[]],1:[1:[],1:[]]]")) == 8);
  CHECK(oracle::isomorphic(cherry, oracle::relabel(cherry, {0, 2, 1})));
  CHECK_FALSE(oracle::isomorphic(cherry, chain));
  CHECK_FALSE(oracle::isomorphic(cherry, mixed));
  CHECK(oracle::encode(chain) == "<1<1<>>>");
}
