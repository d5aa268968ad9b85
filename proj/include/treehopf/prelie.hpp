#pragma once

#include "treehopf/hopf.hpp"

#include <map>
#include <memory>

namespace treehopf {

/// sum_t c_t D_t over single trees: primitive elements of the graded dual.
using DualElement = Combination<Tree>;

/// Default degree budget for products that enumerate all trees of a degree.
inline constexpr std::size_t kDefaultBulletBudget = 7;

/// Structure constants of the product D_t . D_s = sum_w sum_S q(S, w) D_w,
/// where S runs over vertex subsets of w whose induced forest is the tree s
/// and whose complement induces the tree t. Each degree is tabulated on first
/// use by enumerating every tree of that degree.
class BulletTable {
public:
  BulletTable(HopfContext ctx, std::size_t max_degree = kDefaultBulletBudget);

  const HopfContext& context() const { return ctx_; }
  std::size_t max_degree() const { return max_degree_; }

  /// sum_w c_w D_w for D_complement . D_sub. Throws BudgetExceeded above max_degree.
  const DualElement& constants(const Tree& complement, const Tree& sub);

private:
  void tabulate(std::size_t degree);

  HopfContext ctx_;
  std::size_t max_degree_;
  std::vector<bool> done_;
  std::map<std::pair<Tree, Tree>, DualElement> table_;
  DualElement zero_;
};

/// D_t . D_s extended bilinearly; `a` supplies the complement, `b` the subtree.
DualElement bullet(const DualElement& a, const DualElement& b, BulletTable& table);
DualElement bullet(const DualElement& a, const DualElement& b, const HopfContext& ctx,
                   std::size_t budget = kDefaultBulletBudget);

/// [a, b] = b . a - a . b.
DualElement lie_bracket(const DualElement& a, const DualElement& b, BulletTable& table);
/// The opposite orientation a . b - b . a.
DualElement lie_bracket_opposite(const DualElement& a, const DualElement& b, BulletTable& table);

/// All trees t o_(v,i) s: the root of s attached to vertex v of t by a new
/// colour-i edge, one entry per vertex v (repetitions kept).
std::vector<Tree> graft_everywhere(const Tree& t, const Tree& s, Colour i);

/// D_t .' D_s = sum_{v in t} sum_{i in p} D_{t o_(v,i) s}.
DualElement bullet_prime(const DualElement& a, const DualElement& b, const std::vector<Colour>& p);

/// D_t -> |Aut t| D_t, and its inverse.
DualElement aut_rescale(const DualElement& a);
DualElement aut_rescale_inverse(const DualElement& a);

struct LabelledNode;

/// Rooted tree with vertices labelled by positive integers and uncoloured
/// edges, canonical under label-preserving isomorphism. Printed as
/// `(label)[child,...]` with children sorted by code.
class LabelledTree {
public:
  explicit LabelledTree(int label, std::vector<LabelledTree> children = {});

  int label() const;
  const std::vector<LabelledTree>& children() const;
  std::size_t vertex_count() const;
  int max_label() const;
  const std::string& code() const;

  bool operator==(const LabelledTree& other) const;
  std::strong_ordering operator<=>(const LabelledTree& other) const;

  static LabelledTree parse(std::string_view text);

private:
  std::shared_ptr<const LabelledNode> node_;
};

struct LabelledNode {
  int label;
  std::vector<LabelledTree> children;
  std::size_t vertex_count = 1;
  int max_label = 0;
  std::string code;
};

inline int max_colour(const LabelledTree& t) { return t.max_label(); }

/// Elements of the free pre-Lie algebra on generators 1..n.
using PreLieElement = Combination<LabelledTree>;

/// Vertex of a labelled tree addressed by child indices from the root.
using LabelledPath = std::vector<std::size_t>;

/// Attach the root of s below the vertex of t at `v` by a new edge.
LabelledTree free_graft(const LabelledTree& t, const LabelledPath& v, const LabelledTree& s);
/// Sum over all vertices v of t of t o_v s, extended bilinearly.
PreLieElement free_bullet(const PreLieElement& a, const PreLieElement& b);

/// Every vertex takes the colour of the edge below it as label; the root takes i.
LabelledTree up_map(Colour i, const Tree& t);

/// phi(D_t) = sum_{j=1}^n up_j(t), n the colour count of `a`.
PreLieElement phi(const DualElement& a);

} // namespace treehopf
