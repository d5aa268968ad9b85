#pragma once

// Brute-force reference implementations over raw parent maps. Nothing here
// depends on the library; library output is converted in through
// `parse_bracket` and compared on this side's own encoding.

#include <set>
#include <string>
#include <vector>

namespace oracle {

/// Vertex 0 is the root (parent -1); colour[v] is the colour of the edge above v.
struct RawTree {
  std::vector<int> parent;
  std::vector<int> colour;

  int size() const { return static_cast<int>(parent.size()); }
};

/// Complete isomorphism invariant: `<` children `>`, each child written as
/// colour followed by its own encoding, children sorted as strings.
std::string encode(const RawTree& t);
/// Planar invariant: children grouped by colour, label order kept within a colour.
std::string encode_planar(const RawTree& t);

/// Reads the `[c:child,...]` grammar; vertices numbered in preorder.
RawTree parse_bracket(const std::string& code);

/// Every parent map with parent[v] < v, under every colouring by 1..n.
std::vector<RawTree> all_raw_trees(int n, int m);

std::set<std::string> tree_classes(int n, int m);
std::set<std::string> planar_classes(int n, int m);

/// Search for a colour-preserving root-preserving bijection.
bool isomorphic(const RawTree& a, const RawTree& b);
/// Number of colour-preserving self-bijections.
long automorphisms(const RawTree& t);

/// Relabel vertices by `perm` (new index of old vertex v is perm[v]); root must stay 0.
RawTree relabel(const RawTree& t, const std::vector<int>& perm);

} // namespace oracle
