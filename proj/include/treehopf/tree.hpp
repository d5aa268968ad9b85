#pragma once

#include "treehopf/poly.hpp"

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treehopf {

struct TreeEdge;
struct TreeNode;

/// Isomorphism class of a rooted tree with edges coloured by positive
/// integers, held in canonical form: the edges below every vertex are sorted
/// by (colour, canonical code of the child). Two trees compare equal iff they
/// are isomorphic as edge-coloured rooted trees. Immutable and cheap to copy.
class Tree {
public:
  /// The single-vertex tree `[]`.
  Tree();

  /// Canonicalizing constructor: sorts the edges, then freezes.
  static Tree make(std::vector<TreeEdge> edges);

  const std::vector<TreeEdge>& edges() const;
  std::size_t vertex_count() const;
  Colour max_colour() const;
  /// Canonical printed form, e.g. `[1:[],2:[]]`.
  const std::string& code() const;

  bool operator==(const Tree& other) const;
  std::strong_ordering operator<=>(const Tree& other) const;

  static Tree parse(std::string_view text);

private:
  explicit Tree(std::shared_ptr<const TreeNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TreeNode> node_;
};

struct TreeEdge {
  Colour colour;
  Tree child;
};

struct TreeNode {
  std::vector<TreeEdge> edges;
  std::size_t vertex_count = 1;
  Colour max_colour = 0;
  std::string code;
};

inline int max_colour(const Tree& t) { return t.max_colour(); }

/// Finite multiset of trees; the empty forest is the algebra unit `1`.
class Forest {
public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees);
  Forest(const Tree& tree);  // NOLINT(google-explicit-constructor)

  const std::vector<Tree>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  std::size_t tree_count() const { return trees_.size(); }
  std::size_t vertex_count() const { return vertices_; }
  Colour max_colour() const;

  /// Run-length view: each distinct tree with its multiplicity.
  std::vector<std::pair<Tree, std::size_t>> multiplicities() const;

  /// Disjoint union (the product of the symmetric algebra).
  Forest operator*(const Forest& other) const;

  bool operator==(const Forest& other) const = default;
  std::strong_ordering operator<=>(const Forest& other) const;

  /// `1` for the empty forest, otherwise trees joined by `*`.
  std::string to_string() const;
  static Forest parse(std::string_view text);

private:
  std::vector<Tree> trees_;
  std::size_t vertices_ = 0;
};

inline int max_colour(const Forest& f) { return f.max_colour(); }

/// Parent-map presentation of a rooted forest. Vertex v hangs below
/// `parent[v]` (-1 for a root) by an edge of colour `colour[v]` (ignored for roots).
struct Shape {
  std::vector<int> parent;
  std::vector<Colour> colour;

  std::size_t size() const { return parent.size(); }
};

/// Join forests under a new root; the roots of `forests[i]` get colour i+1.
/// The colour count is `forests.size()`.
Tree lambda(std::span<const Forest> forests);
Tree lambda(std::initializer_list<Forest> forests);

/// Inverse of `lambda` for colour count `n` (n >= largest colour of `t`).
std::vector<Forest> decompose(const Tree& t, int n);

/// Canonical class of a parent-map presentation with a single root.
/// Throws InvalidStructure on cycles or several roots, ColourError on colours outside 1..n.
Tree canonicalize(const Shape& raw, int n);
Forest canonicalize_forest(const Shape& raw, int n);

/// All n-coloured trees with `vertices` vertices, in canonical order.
std::vector<Tree> enumerate_trees(int n, std::size_t vertices);

/// All n-coloured forests with exactly `vertices` vertices, in canonical order.
std::vector<Forest> enumerate_forests(int n, std::size_t vertices);

/// Order of the colour-preserving automorphism group.
mpz_class aut_order(const Tree& t);

} // namespace treehopf
