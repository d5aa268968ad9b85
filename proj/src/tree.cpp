#include "treehopf/tree.hpp"

#include "treehopf/errors.hpp"
#include "tree_parse.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace treehopf {

namespace {

std::shared_ptr<const TreeNode> single_vertex_node() {
  static const auto node = [] {
    auto n = std::make_shared<TreeNode>();
    n->code = "[]";
    return n;
  }();
  return node;
}

bool edge_less(const TreeEdge& a, const TreeEdge& b) {
  if (a.colour != b.colour) return a.colour < b.colour;
  return a.child.code() < b.child.code();
}

} // namespace

// ---------------------------------------------------------------------------
// Tree

Tree::Tree() : node_(single_vertex_node()) {}

Tree Tree::make(std::vector<TreeEdge> edges) {
  if (edges.empty()) return Tree();
  std::sort(edges.begin(), edges.end(), edge_less);
  auto node = std::make_shared<TreeNode>();
  std::size_t code_len = 2;
  for (const auto& e : edges) {
    if (e.colour < 1) throw ColourError("edge colour must be >= 1");
    node->vertex_count += e.child.vertex_count();
    node->max_colour = std::max({node->max_colour, e.colour, e.child.max_colour()});
    code_len += e.child.code().size() + 4;
  }
  node->code.reserve(code_len);
  node->code += '[';
  bool first = true;
  for (const auto& e : edges) {
    if (!first) node->code += ',';
    first = false;
    node->code += std::to_string(e.colour);
    node->code += ':';
    node->code += e.child.code();
  }
  node->code += ']';
  node->edges = std::move(edges);
  return Tree(std::move(node));
}

const std::vector<TreeEdge>& Tree::edges() const { return node_->edges; }
std::size_t Tree::vertex_count() const { return node_->vertex_count; }
Colour Tree::max_colour() const { return node_->max_colour; }
const std::string& Tree::code() const { return node_->code; }

bool Tree::operator==(const Tree& other) const {
  return node_ == other.node_ || node_->code == other.node_->code;
}

std::strong_ordering Tree::operator<=>(const Tree& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  return node_->code <=> other.node_->code;
}

Tree Tree::parse(std::string_view text) {
  detail::Cursor cur(text);
  Tree t = detail::parse_tree(cur);
  if (!cur.done()) cur.fail("unexpected trailing input after tree");
  return t;
}

// ---------------------------------------------------------------------------
// Forest

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end());
  for (const auto& t : trees_) vertices_ += t.vertex_count();
}

Forest::Forest(const Tree& tree) : trees_{tree}, vertices_(tree.vertex_count()) {}

Colour Forest::max_colour() const {
  Colour m = 0;
  for (const auto& t : trees_) m = std::max(m, t.max_colour());
  return m;
}

std::vector<std::pair<Tree, std::size_t>> Forest::multiplicities() const {
  std::vector<std::pair<Tree, std::size_t>> out;
  for (const auto& t : trees_) {
    if (!out.empty() && out.back().first == t)
      ++out.back().second;
    else
      out.emplace_back(t, 1);
  }
  return out;
}

Forest Forest::operator*(const Forest& other) const {
  Forest out;
  out.trees_.reserve(trees_.size() + other.trees_.size());
  std::merge(trees_.begin(), trees_.end(), other.trees_.begin(), other.trees_.end(),
             std::back_inserter(out.trees_));
  out.vertices_ = vertices_ + other.vertices_;
  return out;
}

std::strong_ordering Forest::operator<=>(const Forest& other) const {
  return std::lexicographical_compare_three_way(trees_.begin(), trees_.end(), other.trees_.begin(),
                                                other.trees_.end());
}

std::string Forest::to_string() const {
  if (trees_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i) s += '*';
    s += trees_[i].code();
  }
  return s;
}

Forest Forest::parse(std::string_view text) {
  detail::Cursor cur(text);
  Forest f = detail::parse_forest(cur);
  if (!cur.done()) cur.fail("unexpected trailing input after forest");
  return f;
}

namespace detail {

Tree parse_tree(Cursor& cur) {
  cur.expect('[');
  std::vector<TreeEdge> edges;
  if (!cur.accept(']')) {
    do {
      const std::size_t at = cur.position();
      const std::string digits = cur.digits();
      if (digits.size() > 6) throw ParseError("colour too large", at);
      const int colour = std::stoi(digits);
      if (colour < 1) throw ParseError("colour must be >= 1", at);
      cur.expect(':');
      edges.push_back({colour, parse_tree(cur)});
    } while (cur.accept(','));
    cur.expect(']');
  }
  return Tree::make(std::move(edges));
}

Forest parse_forest(Cursor& cur) {
  if (cur.peek() == '1') {
    cur.advance();
    return Forest();
  }
  std::vector<Tree> trees;
  trees.push_back(parse_tree(cur));
  while (cur.peek() == '*' && cur.peek(1) == '[') {
    cur.advance();
    trees.push_back(parse_tree(cur));
  }
  return Forest(std::move(trees));
}

} // namespace detail

// ---------------------------------------------------------------------------
// lambda / decompose

Tree lambda(std::span<const Forest> forests) {
  const int n = static_cast<int>(forests.size());
  std::vector<TreeEdge> edges;
  for (int i = 0; i < n; ++i) {
    const Forest& f = forests[static_cast<std::size_t>(i)];
    if (f.max_colour() > n)
      throw ColourError("forest in slot " + std::to_string(i + 1) + " uses colour " +
                        std::to_string(f.max_colour()) + " > " + std::to_string(n));
    for (const auto& t : f.trees()) edges.push_back({i + 1, t});
  }
  return Tree::make(std::move(edges));
}

Tree lambda(std::initializer_list<Forest> forests) {
  return lambda(std::span<const Forest>(forests.begin(), forests.size()));
}

std::vector<Forest> decompose(const Tree& t, int n) {
  if (t.max_colour() > n)
    throw ColourError("tree uses colour " + std::to_string(t.max_colour()) + " > " + std::to_string(n));
  std::vector<std::vector<Tree>> slots(static_cast<std::size_t>(n));
  for (const auto& e : t.edges()) slots[static_cast<std::size_t>(e.colour - 1)].push_back(e.child);
  std::vector<Forest> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.emplace_back(std::move(s));
  return out;
}

// ---------------------------------------------------------------------------
// canonicalize

namespace {

std::vector<std::vector<int>> validated_children(const Shape& raw, int n) {
  const int size = static_cast<int>(raw.size());
  if (raw.colour.size() != raw.parent.size())
    throw InvalidStructure("parent and colour arrays differ in length");
  std::vector<std::vector<int>> children(raw.size());
  for (int v = 0; v < size; ++v) {
    const int p = raw.parent[static_cast<std::size_t>(v)];
    if (p < -1 || p >= size || p == v) throw InvalidStructure("bad parent for vertex " + std::to_string(v));
    if (p >= 0) {
      const Colour c = raw.colour[static_cast<std::size_t>(v)];
      if (c < 1 || c > n)
        throw ColourError("colour " + std::to_string(c) + " outside 1.." + std::to_string(n));
      children[static_cast<std::size_t>(p)].push_back(v);
    }
  }
  // every vertex must reach a root within `size` steps
  for (int v = 0; v < size; ++v) {
    int x = v;
    int steps = 0;
    while (raw.parent[static_cast<std::size_t>(x)] != -1) {
      x = raw.parent[static_cast<std::size_t>(x)];
      if (++steps > size) throw InvalidStructure("cycle through vertex " + std::to_string(v));
    }
  }
  return children;
}

Tree build(const Shape& raw, const std::vector<std::vector<int>>& children, int v) {
  std::vector<TreeEdge> edges;
  edges.reserve(children[static_cast<std::size_t>(v)].size());
  for (int c : children[static_cast<std::size_t>(v)])
    edges.push_back({raw.colour[static_cast<std::size_t>(c)], build(raw, children, c)});
  return Tree::make(std::move(edges));
}

} // namespace

Forest canonicalize_forest(const Shape& raw, int n) {
  const auto children = validated_children(raw, n);
  std::vector<Tree> trees;
  for (std::size_t v = 0; v < raw.size(); ++v)
    if (raw.parent[v] == -1) trees.push_back(build(raw, children, static_cast<int>(v)));
  return Forest(std::move(trees));
}

Tree canonicalize(const Shape& raw, int n) {
  const auto roots = std::count(raw.parent.begin(), raw.parent.end(), -1);
  if (roots != 1) throw InvalidStructure("a tree needs exactly one root, got " + std::to_string(roots));
  return canonicalize_forest(raw, n).trees().front();
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

// Multisets of items drawn from `types` (index >= start) whose sizes sum to `remaining`.
template <class Item, class Size, class Emit>
void multisets(const std::vector<Item>& types, Size size_of, std::size_t start, std::size_t remaining,
               std::vector<Item>& chosen, Emit&& emit) {
  if (remaining == 0) {
    emit(chosen);
    return;
  }
  for (std::size_t i = start; i < types.size(); ++i) {
    const std::size_t s = size_of(types[i]);
    if (s > remaining) continue;
    chosen.push_back(types[i]);
    multisets(types, size_of, i, remaining - s, chosen, emit);
    chosen.pop_back();
  }
}

class Enumerator {
public:
  explicit Enumerator(int n) : n_(n) {}

  const std::vector<Tree>& trees(std::size_t m) {
    if (m < by_size_.size() && computed_[m]) return by_size_[m];
    if (by_size_.size() <= m) {
      by_size_.resize(m + 1);
      computed_.resize(m + 1, false);
    }
    std::vector<Tree> out;
    if (m == 1) {
      out.push_back(Tree());
    } else if (m > 1 && n_ >= 1) {
      std::vector<TreeEdge> types;
      for (std::size_t k = 1; k < m; ++k)
        for (Colour c = 1; c <= n_; ++c)
          for (const auto& t : trees(k)) types.push_back({c, t});
      std::vector<TreeEdge> chosen;
      multisets(types, [](const TreeEdge& e) { return e.child.vertex_count(); }, 0, m - 1, chosen,
                [&](const std::vector<TreeEdge>& edges) { out.push_back(Tree::make(edges)); });
      std::sort(out.begin(), out.end());
    }
    by_size_[m] = std::move(out);
    computed_[m] = true;
    return by_size_[m];
  }

private:
  int n_;
  std::vector<std::vector<Tree>> by_size_;
  std::vector<bool> computed_;
};

} // namespace

std::vector<Tree> enumerate_trees(int n, std::size_t vertices) {
  if (n < 0) throw ColourError("negative colour count");
  if (vertices == 0) return {};
  Enumerator e(n);
  return e.trees(vertices);
}

std::vector<Forest> enumerate_forests(int n, std::size_t vertices) {
  if (n < 0) throw ColourError("negative colour count");
  Enumerator e(n);
  std::vector<Tree> types;
  for (std::size_t k = 1; k <= vertices; ++k)
    for (const auto& t : e.trees(k)) types.push_back(t);
  std::vector<Forest> out;
  std::vector<Tree> chosen;
  multisets(types, [](const Tree& t) { return t.vertex_count(); }, 0, vertices, chosen,
            [&](const std::vector<Tree>& ts) { out.emplace_back(ts); });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// automorphisms

mpz_class aut_order(const Tree& t) {
  mpz_class order = 1;
  const auto& edges = t.edges();
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j].colour == edges[i].colour && edges[j].child == edges[i].child) ++j;
    const unsigned long mult = j - i;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), mult);
    mpz_class child = aut_order(edges[i].child);
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), child.get_mpz_t(), mult);
    order *= fact * power;
    i = j;
  }
  return order;
}

} // namespace treehopf
