#include "treehopf/prelie.hpp"

#include "prelie_parse.hpp"
#include "treehopf/errors.hpp"

#include <algorithm>

namespace treehopf {

// ---------------------------------------------------------------------------
// Structure constants

BulletTable::BulletTable(HopfContext ctx, std::size_t max_degree)
    : ctx_(std::move(ctx)), max_degree_(max_degree), done_(max_degree + 1, false), zero_(ctx_.n) {}

const DualElement& BulletTable::constants(const Tree& complement, const Tree& sub) {
  const std::size_t degree = complement.vertex_count() + sub.vertex_count();
  if (degree > max_degree_)
    throw BudgetExceeded("bullet of degree " + std::to_string(degree) + " exceeds the budget " +
                         std::to_string(max_degree_));
  if (std::max(complement.max_colour(), sub.max_colour()) > ctx_.n)
    throw ColourError("tree uses colours beyond the context");
  if (!done_[degree]) tabulate(degree);
  auto it = table_.find({complement, sub});
  return it == table_.end() ? zero_ : it->second;
}

void BulletTable::tabulate(std::size_t degree) {
  for (const auto& w : enumerate_trees(ctx_.n, degree)) {
    const ForestLayout layout{Forest(w)};
    const VertexMask full = layout.full_mask();
    for (VertexMask s = 1; s < full; ++s) {
      Poly q = q_coeff(layout.shape(), s, ctx_.q);
      if (q.is_zero()) continue;
      const Forest sub = layout.induced(s);
      if (sub.tree_count() != 1) continue;
      const Forest rest = layout.induced(full & ~s);
      if (rest.tree_count() != 1) continue;
      auto [it, inserted] = table_.try_emplace({rest.trees().front(), sub.trees().front()}, ctx_.n);
      it->second.add(w, q);
    }
  }
  done_[degree] = true;
}

DualElement bullet(const DualElement& a, const DualElement& b, BulletTable& table) {
  a.check_colours(b);
  if (a.colours() != table.context().n) throw ColourError("dual element over the wrong colour count");
  DualElement out(a.colours());
  for (const auto& [t, ct] : a)
    for (const auto& [s, cs] : b) out += (ct * cs) * table.constants(t, s);
  return out;
}

DualElement bullet(const DualElement& a, const DualElement& b, const HopfContext& ctx, std::size_t budget) {
  BulletTable table(ctx, budget);
  return bullet(a, b, table);
}

DualElement lie_bracket(const DualElement& a, const DualElement& b, BulletTable& table) {
  return bullet(b, a, table) - bullet(a, b, table);
}

DualElement lie_bracket_opposite(const DualElement& a, const DualElement& b, BulletTable& table) {
  return bullet(a, b, table) - bullet(b, a, table);
}

// ---------------------------------------------------------------------------
// Grafting

std::vector<Tree> graft_everywhere(const Tree& t, const Tree& s, Colour i) {
  std::vector<Tree> out;
  std::vector<TreeEdge> edges = t.edges();
  edges.push_back({i, s});
  out.push_back(Tree::make(std::move(edges)));
  for (std::size_t k = 0; k < t.edges().size(); ++k) {
    for (auto& g : graft_everywhere(t.edges()[k].child, s, i)) {
      std::vector<TreeEdge> changed = t.edges();
      changed[k].child = std::move(g);
      out.push_back(Tree::make(std::move(changed)));
    }
  }
  return out;
}

DualElement bullet_prime(const DualElement& a, const DualElement& b, const std::vector<Colour>& p) {
  a.check_colours(b);
  for (Colour i : p)
    if (i < 1 || i > a.colours()) throw ColourError("grafting colour " + std::to_string(i) + " out of range");
  DualElement out(a.colours());
  for (const auto& [t, ct] : a)
    for (const auto& [s, cs] : b)
      for (Colour i : p)
        for (const auto& g : graft_everywhere(t, s, i)) out.add(g, ct * cs);
  return out;
}

DualElement aut_rescale(const DualElement& a) {
  DualElement out(a.colours());
  for (const auto& [t, c] : a) out.add(t, c * Poly(Rational(aut_order(t))));
  return out;
}

DualElement aut_rescale_inverse(const DualElement& a) {
  DualElement out(a.colours());
  for (const auto& [t, c] : a) out.add(t, c * Poly(Rational(mpz_class(1), aut_order(t))));
  return out;
}

// ---------------------------------------------------------------------------
// Labelled trees

LabelledTree::LabelledTree(int label, std::vector<LabelledTree> children) {
  if (label < 1) throw ColourError("vertex labels start at 1");
  std::sort(children.begin(), children.end());
  auto node = std::make_shared<LabelledNode>();
  node->label = label;
  node->max_label = label;
  node->code = "(" + std::to_string(label) + ")[";
  for (std::size_t k = 0; k < children.size(); ++k) {
    if (k) node->code += ',';
    node->code += children[k].code();
    node->vertex_count += children[k].vertex_count();
    node->max_label = std::max(node->max_label, children[k].max_label());
  }
  node->code += ']';
  node->children = std::move(children);
  node_ = std::move(node);
}

int LabelledTree::label() const { return node_->label; }
const std::vector<LabelledTree>& LabelledTree::children() const { return node_->children; }
std::size_t LabelledTree::vertex_count() const { return node_->vertex_count; }
int LabelledTree::max_label() const { return node_->max_label; }
const std::string& LabelledTree::code() const { return node_->code; }

bool LabelledTree::operator==(const LabelledTree& other) const {
  return node_ == other.node_ || node_->code == other.node_->code;
}

std::strong_ordering LabelledTree::operator<=>(const LabelledTree& other) const {
  return node_->code <=> other.node_->code;
}

namespace {

void graft_all(const LabelledTree& t, const LabelledTree& s, std::vector<LabelledTree>& out) {
  std::vector<LabelledTree> children = t.children();
  children.push_back(s);
  out.emplace_back(t.label(), std::move(children));
  for (std::size_t k = 0; k < t.children().size(); ++k) {
    std::vector<LabelledTree> below;
    graft_all(t.children()[k], s, below);
    for (auto& g : below) {
      std::vector<LabelledTree> changed = t.children();
      changed[k] = std::move(g);
      out.emplace_back(t.label(), std::move(changed));
    }
  }
}

} // namespace

namespace detail {

LabelledTree parse_labelled_tree(Cursor& cur) {
  cur.expect('(');
  const std::size_t at = cur.position();
  const std::string digits = cur.digits();
  if (digits.size() > 6) throw ParseError("label too large", at);
  const int label = std::stoi(digits);
  if (label < 1) throw ParseError("vertex labels start at 1", at);
  cur.expect(')');
  cur.expect('[');
  std::vector<LabelledTree> children;
  if (!cur.accept(']')) {
    do {
      children.push_back(parse_labelled_tree(cur));
    } while (cur.accept(','));
    cur.expect(']');
  }
  return LabelledTree(label, std::move(children));
}

} // namespace detail

LabelledTree LabelledTree::parse(std::string_view text) {
  detail::Cursor cur(text);
  cur.skip_space();
  LabelledTree t = detail::parse_labelled_tree(cur);
  cur.skip_space();
  if (!cur.done()) cur.fail("trailing input after labelled tree");
  return t;
}

LabelledTree free_graft(const LabelledTree& t, const LabelledPath& v, const LabelledTree& s) {
  std::vector<LabelledTree> children = t.children();
  if (v.empty()) {
    children.push_back(s);
  } else {
    if (v.front() >= children.size()) throw InvalidStructure("vertex path leaves the tree");
    children[v.front()] = free_graft(children[v.front()], LabelledPath(v.begin() + 1, v.end()), s);
  }
  return LabelledTree(t.label(), std::move(children));
}

PreLieElement free_bullet(const PreLieElement& a, const PreLieElement& b) {
  a.check_colours(b);
  PreLieElement out(a.colours());
  for (const auto& [t, ct] : a)
    for (const auto& [s, cs] : b) {
      std::vector<LabelledTree> grafts;
      graft_all(t, s, grafts);
      for (const auto& g : grafts) out.add(g, ct * cs);
    }
  return out;
}

LabelledTree up_map(Colour i, const Tree& t) {
  std::vector<LabelledTree> children;
  children.reserve(t.edges().size());
  for (const auto& e : t.edges()) children.push_back(up_map(e.colour, e.child));
  return LabelledTree(i, std::move(children));
}

PreLieElement phi(const DualElement& a) {
  PreLieElement out(a.colours());
  for (const auto& [t, c] : a)
    for (Colour j = 1; j <= a.colours(); ++j) out.add(up_map(j, t), c);
  return out;
}

} // namespace treehopf
