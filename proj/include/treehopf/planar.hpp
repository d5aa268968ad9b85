#pragma once

#include "treehopf/verify.hpp"

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace treehopf {

struct PlanarEdge;
struct PlanarNode;

/// Planar n-tree: below every vertex, the children of each colour form a
/// sequence. Children are stored grouped by increasing colour, keeping the
/// order within a colour; only that order is data.
class PlanarTree {
public:
  /// The single vertex `[]`.
  PlanarTree();

  /// Stable-groups the edges by colour.
  static PlanarTree make(std::vector<PlanarEdge> edges);

  const std::vector<PlanarEdge>& edges() const;
  std::size_t vertex_count() const;
  Colour max_colour() const;
  /// Printed form in stored order, e.g. `[1:[1:[]],1:[]]`.
  const std::string& code() const;

  bool operator==(const PlanarTree& other) const;
  std::strong_ordering operator<=>(const PlanarTree& other) const;

  static PlanarTree parse(std::string_view text);

private:
  explicit PlanarTree(std::shared_ptr<const PlanarNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const PlanarNode> node_;
};

struct PlanarEdge {
  Colour colour;
  PlanarTree child;
};

struct PlanarNode {
  std::vector<PlanarEdge> edges;
  std::size_t vertex_count = 1;
  Colour max_colour = 0;
  std::string code;
};

inline int max_colour(const PlanarTree& t) { return t.max_colour(); }

/// Ordered sequence of planar trees; basis of the tensor algebra, `1` when empty.
class PlanarWord {
public:
  PlanarWord() = default;
  explicit PlanarWord(std::vector<PlanarTree> trees);
  PlanarWord(const PlanarTree& tree);  // NOLINT(google-explicit-constructor)

  const std::vector<PlanarTree>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  std::size_t vertex_count() const { return vertices_; }
  Colour max_colour() const;

  /// Concatenation.
  PlanarWord operator*(const PlanarWord& other) const;

  bool operator==(const PlanarWord& other) const = default;
  std::strong_ordering operator<=>(const PlanarWord& other) const;

  std::string to_string() const;
  static PlanarWord parse(std::string_view text);

private:
  std::vector<PlanarTree> trees_;
  std::size_t vertices_ = 0;
};

inline int max_colour(const PlanarWord& w) { return w.max_colour(); }

using PlanarElement = Combination<PlanarWord>;
using PlanarTensor = Combination<std::pair<PlanarWord, PlanarWord>>;
/// sum_t c_t D_t over planar trees.
using PlanarDualElement = Combination<PlanarTree>;

/// New root; the trees of words[i] become its colour-(i+1) children in word order.
PlanarTree planar_lambda(std::span<const PlanarWord> words);
PlanarTree planar_lambda(std::initializer_list<PlanarWord> words);
std::vector<PlanarWord> planar_decompose(const PlanarTree& t, int n);

/// All planar n-trees with `vertices` vertices, sorted by code.
std::vector<PlanarTree> enumerate_planar(int n, std::size_t vertices);
/// All words of planar n-trees with exactly `vertices` vertices.
std::vector<PlanarWord> enumerate_planar_words(int n, std::size_t vertices);

PlanarElement planar_product(const PlanarElement& a, const PlanarElement& b);
PlanarTensor planar_product(const PlanarTensor& a, const PlanarTensor& b);

/// Sum over vertex subsets s of q(s, t) word(s) (x) word(s^c); the trees of
/// word(s) are ordered by a depth-first traversal of the host visiting
/// children by increasing colour, then in their listed order.
PlanarTensor planar_coproduct(const PlanarElement& a, const HopfContext& ctx);
PlanarTensor planar_coproduct(const PlanarWord& w, const HopfContext& ctx);

using PlanarCoproductFn = std::function<PlanarTensor(const PlanarWord&)>;

/// Recursive graded-connected antipode.
PlanarElement planar_antipode(const PlanarElement& a, const HopfContext& ctx);
PlanarElement planar_antipode(const PlanarElement& a, const PlanarCoproductFn& delta);

/// Structure constants of D_s . D_t = sum_w sum_S q(S, w) D_w over planar
/// trees w and order-respecting inclusions S ~ s with complement ~ t.
class PlanarBulletTable {
public:
  PlanarBulletTable(HopfContext ctx, std::size_t max_degree = kDefaultPlanarBudget);

  static constexpr std::size_t kDefaultPlanarBudget = 7;

  const HopfContext& context() const { return ctx_; }
  const PlanarDualElement& constants(const PlanarTree& sub, const PlanarTree& complement);

private:
  void tabulate(std::size_t degree);

  HopfContext ctx_;
  std::size_t max_degree_;
  std::vector<bool> done_;
  std::map<std::pair<PlanarTree, PlanarTree>, PlanarDualElement> table_;
  PlanarDualElement zero_;
};

/// D_s . D_t with `a` supplying the included subtree s and `b` its complement t.
PlanarDualElement planar_bullet(const PlanarDualElement& a, const PlanarDualElement& b, PlanarBulletTable& table);
PlanarDualElement planar_bullet(const PlanarDualElement& a, const PlanarDualElement& b, const HopfContext& ctx,
                                std::size_t budget = PlanarBulletTable::kDefaultPlanarBudget);

/// Forget the sibling orders.
Tree forget(const PlanarTree& t);
Forest forget(const PlanarWord& w);
Element forget(const PlanarElement& a);
TensorElement forget(const PlanarTensor& a);

/// Hopf axioms on all planar words up to `max_degree` vertices:
/// coassociativity, counit, grading, multiplicativity, the defining square
/// and the antipode laws; plus specialization when symbols are present.
VerificationReport verify_planar(const HopfContext& ctx, std::size_t max_degree, std::uint64_t seed = kDefaultSeed);
VerificationReport verify_planar(const HopfContext& ctx, std::size_t max_degree, const PlanarCoproductFn& delta);

} // namespace treehopf
