#include "treehopf/planar.hpp"

#include "planar_parse.hpp"
#include "treehopf/errors.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace treehopf {

// ---------------------------------------------------------------------------
// Planar trees and words

PlanarTree::PlanarTree() {
  static const auto leaf = [] {
    auto node = std::make_shared<PlanarNode>();
    node->code = "[]";
    return std::shared_ptr<const PlanarNode>(std::move(node));
  }();
  node_ = leaf;
}

PlanarTree PlanarTree::make(std::vector<PlanarEdge> edges) {
  std::stable_sort(edges.begin(), edges.end(),
                   [](const PlanarEdge& a, const PlanarEdge& b) { return a.colour < b.colour; });
  auto node = std::make_shared<PlanarNode>();
  node->code = "[";
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    if (e.colour < 1) throw ColourError("edge colours start at 1");
    if (k) node->code += ',';
    node->code += std::to_string(e.colour) + ":" + e.child.code();
    node->vertex_count += e.child.vertex_count();
    node->max_colour = std::max({node->max_colour, e.colour, e.child.max_colour()});
  }
  node->code += ']';
  node->edges = std::move(edges);
  return PlanarTree(std::move(node));
}

const std::vector<PlanarEdge>& PlanarTree::edges() const { return node_->edges; }
std::size_t PlanarTree::vertex_count() const { return node_->vertex_count; }
Colour PlanarTree::max_colour() const { return node_->max_colour; }
const std::string& PlanarTree::code() const { return node_->code; }

bool PlanarTree::operator==(const PlanarTree& other) const {
  return node_ == other.node_ || node_->code == other.node_->code;
}

std::strong_ordering PlanarTree::operator<=>(const PlanarTree& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  return node_->code <=> other.node_->code;
}

PlanarTree PlanarTree::parse(std::string_view text) {
  detail::Cursor cur(text);
  cur.skip_space();
  PlanarTree t = detail::parse_planar_tree(cur);
  cur.skip_space();
  if (!cur.done()) cur.fail("trailing input after planar tree");
  return t;
}

PlanarWord::PlanarWord(std::vector<PlanarTree> trees) : trees_(std::move(trees)) {
  for (const auto& t : trees_) vertices_ += t.vertex_count();
}

PlanarWord::PlanarWord(const PlanarTree& tree) : trees_{tree}, vertices_(tree.vertex_count()) {}

Colour PlanarWord::max_colour() const {
  Colour m = 0;
  for (const auto& t : trees_) m = std::max(m, t.max_colour());
  return m;
}

PlanarWord PlanarWord::operator*(const PlanarWord& other) const {
  std::vector<PlanarTree> joined = trees_;
  joined.insert(joined.end(), other.trees_.begin(), other.trees_.end());
  return PlanarWord(std::move(joined));
}

std::strong_ordering PlanarWord::operator<=>(const PlanarWord& other) const {
  if (vertices_ != other.vertices_) return vertices_ <=> other.vertices_;
  return std::lexicographical_compare_three_way(trees_.begin(), trees_.end(), other.trees_.begin(),
                                                other.trees_.end());
}

std::string PlanarWord::to_string() const {
  if (trees_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i) s += '*';
    s += trees_[i].code();
  }
  return s;
}

PlanarWord PlanarWord::parse(std::string_view text) {
  detail::Cursor cur(text);
  cur.skip_space();
  PlanarWord w = detail::parse_planar_word(cur);
  cur.skip_space();
  if (!cur.done()) cur.fail("trailing input after planar word");
  return w;
}

namespace detail {

PlanarTree parse_planar_tree(Cursor& cur) {
  cur.expect('[');
  std::vector<PlanarEdge> edges;
  if (!cur.accept(']')) {
    do {
      const std::size_t at = cur.position();
      const std::string digits = cur.digits();
      if (digits.size() > 6) throw ParseError("colour too large", at);
      const int colour = std::stoi(digits);
      if (colour < 1) throw ParseError("colour must be >= 1", at);
      cur.expect(':');
      edges.push_back({colour, parse_planar_tree(cur)});
    } while (cur.accept(','));
    cur.expect(']');
  }
  return PlanarTree::make(std::move(edges));
}

PlanarWord parse_planar_word(Cursor& cur) {
  if (cur.peek() == '1') {
    cur.advance();
    return PlanarWord();
  }
  std::vector<PlanarTree> trees;
  trees.push_back(parse_planar_tree(cur));
  while (cur.peek() == '*' && cur.peek(1) == '[') {
    cur.advance();
    trees.push_back(parse_planar_tree(cur));
  }
  return PlanarWord(std::move(trees));
}

} // namespace detail

// ---------------------------------------------------------------------------
// Construction and enumeration

PlanarTree planar_lambda(std::span<const PlanarWord> words) {
  const int n = static_cast<int>(words.size());
  std::vector<PlanarEdge> edges;
  for (int i = 0; i < n; ++i) {
    const PlanarWord& w = words[static_cast<std::size_t>(i)];
    if (w.max_colour() > n)
      throw ColourError("word in slot " + std::to_string(i + 1) + " uses colour " + std::to_string(w.max_colour()) +
                        " > " + std::to_string(n));
    for (const auto& t : w.trees()) edges.push_back({i + 1, t});
  }
  return PlanarTree::make(std::move(edges));
}

PlanarTree planar_lambda(std::initializer_list<PlanarWord> words) {
  return planar_lambda(std::span<const PlanarWord>(words.begin(), words.size()));
}

std::vector<PlanarWord> planar_decompose(const PlanarTree& t, int n) {
  if (t.max_colour() > n) throw ColourError("tree uses colours beyond " + std::to_string(n));
  std::vector<std::vector<PlanarTree>> slots(static_cast<std::size_t>(n));
  for (const auto& e : t.edges()) slots[static_cast<std::size_t>(e.colour - 1)].push_back(e.child);
  std::vector<PlanarWord> out;
  for (auto& s : slots) out.emplace_back(std::move(s));
  return out;
}

namespace {

class PlanarEnumerator {
public:
  explicit PlanarEnumerator(int n) : n_(n) {}

  const std::vector<PlanarTree>& trees(std::size_t m) {
    auto it = trees_.find(m);
    if (it != trees_.end()) return it->second;
    std::vector<PlanarTree> out;
    if (m == 1) {
      out.emplace_back();
    } else if (m > 1) {
      std::vector<PlanarWord> slots;
      fill_slots(m - 1, slots, out);
    }
    std::sort(out.begin(), out.end());
    return trees_.emplace(m, std::move(out)).first->second;
  }

  const std::vector<PlanarWord>& words(std::size_t k) {
    auto it = words_.find(k);
    if (it != words_.end()) return it->second;
    std::vector<PlanarWord> out;
    if (k == 0) {
      out.emplace_back();
    } else {
      for (std::size_t a = 1; a <= k; ++a) {
        const auto heads = trees(a);
        const auto tails = words(k - a);
        for (const auto& h : heads)
          for (const auto& rest : tails) out.push_back(PlanarWord(h) * rest);
      }
    }
    return words_.emplace(k, std::move(out)).first->second;
  }

private:
  void fill_slots(std::size_t remaining, std::vector<PlanarWord>& slots, std::vector<PlanarTree>& out) {
    if (static_cast<int>(slots.size()) == n_) {
      if (remaining == 0) out.push_back(planar_lambda(slots));
      return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
      const auto choices = words(k);
      for (const auto& w : choices) {
        slots.push_back(w);
        fill_slots(remaining - k, slots, out);
        slots.pop_back();
      }
    }
  }

  int n_;
  std::map<std::size_t, std::vector<PlanarTree>> trees_;
  std::map<std::size_t, std::vector<PlanarWord>> words_;
};

} // namespace

std::vector<PlanarTree> enumerate_planar(int n, std::size_t vertices) {
  if (n < 0) throw ColourError("negative colour count");
  if (vertices == 0) return {};
  if (n == 0 && vertices > 1) return {};
  return PlanarEnumerator(n).trees(vertices);
}

std::vector<PlanarWord> enumerate_planar_words(int n, std::size_t vertices) {
  if (n < 0) throw ColourError("negative colour count");
  if (n == 0) {
    std::vector<PlanarWord> out{PlanarWord(std::vector<PlanarTree>(vertices, PlanarTree()))};
    return out;
  }
  return PlanarEnumerator(n).words(vertices);
}

PlanarElement planar_product(const PlanarElement& a, const PlanarElement& b) {
  a.check_colours(b);
  PlanarElement out(a.colours());
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) out.add(wa * wb, ca * cb);
  return out;
}

PlanarTensor planar_product(const PlanarTensor& a, const PlanarTensor& b) {
  a.check_colours(b);
  PlanarTensor out(a.colours());
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add({ka.first * kb.first, ka.second * kb.second}, ca * cb);
  return out;
}

// ---------------------------------------------------------------------------
// Coproduct and antipode

namespace {

void flatten(const PlanarTree& t, int parent, Colour colour, Shape& shape) {
  const int self = static_cast<int>(shape.size());
  shape.parent.push_back(parent);
  shape.colour.push_back(colour);
  for (const auto& e : t.edges()) flatten(e.child, self, e.colour, shape);
}

Shape planar_shape(const PlanarWord& w) {
  Shape shape;
  for (const auto& t : w.trees()) flatten(t, -1, 0, shape);
  return shape;
}

PlanarTree build(const Shape& shape, const std::vector<std::vector<int>>& children, int v) {
  std::vector<PlanarEdge> edges;
  for (int c : children[static_cast<std::size_t>(v)])
    edges.push_back({shape.colour[static_cast<std::size_t>(c)], build(shape, children, c)});
  return PlanarTree::make(std::move(edges));
}

// Vertices in preorder; children and roots keep that order.
PlanarWord word_of(const Shape& shape) {
  std::vector<std::vector<int>> children(shape.size());
  std::vector<int> roots;
  for (std::size_t v = 0; v < shape.size(); ++v) {
    if (shape.parent[v] == -1)
      roots.push_back(static_cast<int>(v));
    else
      children[static_cast<std::size_t>(shape.parent[v])].push_back(static_cast<int>(v));
  }
  std::vector<PlanarTree> trees;
  for (int r : roots) trees.push_back(build(shape, children, r));
  return PlanarWord(std::move(trees));
}

} // namespace

PlanarTensor planar_coproduct(const PlanarWord& w, const HopfContext& ctx) {
  if (w.max_colour() > ctx.n) throw ColourError("word uses colours beyond the context");
  if (w.vertex_count() > kMaxSubsetVertices)
    throw BudgetExceeded("coproduct limited to " + std::to_string(kMaxSubsetVertices) + " vertices");
  const Shape shape = planar_shape(w);
  const VertexMask full = (VertexMask{1} << shape.size()) - 1;
  PlanarTensor out(ctx.n);
  for (VertexMask s = 0; s <= full; ++s) {
    Poly c = ctx.q.evaluate(q_exponents(shape, s));
    if (c.is_zero()) continue;
    out.add({word_of(induced_shape(shape, s)), word_of(induced_shape(shape, full & ~s))}, c);
  }
  return out;
}

PlanarTensor planar_coproduct(const PlanarElement& a, const HopfContext& ctx) {
  if (a.colours() != ctx.n) throw ColourError("element and context disagree on the colour count");
  PlanarTensor out(ctx.n);
  for (const auto& [w, c] : a) out += c * planar_coproduct(w, ctx);
  return out;
}

PlanarElement planar_antipode(const PlanarElement& a, const PlanarCoproductFn& delta) {
  using Chain = Combination<std::vector<PlanarWord>>;
  const int n = a.colours();
  PlanarElement result(n);
  for (const auto& [w, c] : a) {
    if (w.empty()) {
      result.add(w, c);
      continue;
    }
    Chain level(n, {w});
    Poly sign(-1L);
    for (std::size_t k = 0; k < w.vertex_count() && !level.is_zero(); ++k) {
      for (const auto& [parts, coef] : level) {
        PlanarWord joined;
        for (const auto& p : parts) joined = joined * p;
        result.add(joined, c * coef * sign);
      }
      Chain next(n);
      for (const auto& [parts, coef] : level) {
        PlanarTensor reduced = delta(parts.front());
        reduced.add({parts.front(), PlanarWord()}, Poly(-1L));
        reduced.add({PlanarWord(), parts.front()}, Poly(-1L));
        for (const auto& [lr, d] : reduced) {
          std::vector<PlanarWord> grown{lr.first, lr.second};
          grown.insert(grown.end(), parts.begin() + 1, parts.end());
          next.add(grown, coef * d);
        }
      }
      level = std::move(next);
      sign = -sign;
    }
  }
  return result;
}

PlanarElement planar_antipode(const PlanarElement& a, const HopfContext& ctx) {
  if (a.colours() != ctx.n) throw ColourError("element and context disagree on the colour count");
  std::map<PlanarWord, PlanarTensor> memo;
  PlanarCoproductFn delta = [&](const PlanarWord& w) -> PlanarTensor {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    return memo.emplace(w, planar_coproduct(w, ctx)).first->second;
  };
  return planar_antipode(a, delta);
}

// ---------------------------------------------------------------------------
// Dual product

PlanarBulletTable::PlanarBulletTable(HopfContext ctx, std::size_t max_degree)
    : ctx_(std::move(ctx)), max_degree_(max_degree), done_(max_degree + 1, false), zero_(ctx_.n) {}

const PlanarDualElement& PlanarBulletTable::constants(const PlanarTree& sub, const PlanarTree& complement) {
  const std::size_t degree = sub.vertex_count() + complement.vertex_count();
  if (degree > max_degree_)
    throw BudgetExceeded("planar bullet of degree " + std::to_string(degree) + " exceeds the budget " +
                         std::to_string(max_degree_));
  if (std::max(sub.max_colour(), complement.max_colour()) > ctx_.n)
    throw ColourError("tree uses colours beyond the context");
  if (!done_[degree]) tabulate(degree);
  auto it = table_.find({sub, complement});
  return it == table_.end() ? zero_ : it->second;
}

void PlanarBulletTable::tabulate(std::size_t degree) {
  for (const auto& w : enumerate_planar(ctx_.n, degree)) {
    const Shape shape = planar_shape(PlanarWord(w));
    const VertexMask full = (VertexMask{1} << shape.size()) - 1;
    for (VertexMask s = 1; s < full; ++s) {
      Poly q = ctx_.q.evaluate(q_exponents(shape, s));
      if (q.is_zero()) continue;
      const PlanarWord sub = word_of(induced_shape(shape, s));
      if (sub.trees().size() != 1) continue;
      const PlanarWord rest = word_of(induced_shape(shape, full & ~s));
      if (rest.trees().size() != 1) continue;
      auto [it, inserted] = table_.try_emplace({sub.trees().front(), rest.trees().front()}, ctx_.n);
      it->second.add(w, q);
    }
  }
  done_[degree] = true;
}

PlanarDualElement planar_bullet(const PlanarDualElement& a, const PlanarDualElement& b, PlanarBulletTable& table) {
  a.check_colours(b);
  if (a.colours() != table.context().n) throw ColourError("dual element over the wrong colour count");
  PlanarDualElement out(a.colours());
  for (const auto& [s, cs] : a)
    for (const auto& [t, ct] : b) out += (cs * ct) * table.constants(s, t);
  return out;
}

PlanarDualElement planar_bullet(const PlanarDualElement& a, const PlanarDualElement& b, const HopfContext& ctx,
                                std::size_t budget) {
  PlanarBulletTable table(ctx, budget);
  return planar_bullet(a, b, table);
}

// ---------------------------------------------------------------------------
// Forgetful map

Tree forget(const PlanarTree& t) {
  std::vector<TreeEdge> edges;
  for (const auto& e : t.edges()) edges.push_back({e.colour, forget(e.child)});
  return Tree::make(std::move(edges));
}

Forest forget(const PlanarWord& w) {
  std::vector<Tree> trees;
  for (const auto& t : w.trees()) trees.push_back(forget(t));
  return Forest(std::move(trees));
}

Element forget(const PlanarElement& a) {
  Element out(a.colours());
  for (const auto& [w, c] : a) out.add(forget(w), c);
  return out;
}

TensorElement forget(const PlanarTensor& a) {
  TensorElement out(a.colours());
  for (const auto& [lr, c] : a) out.add({forget(lr.first), forget(lr.second)}, c);
  return out;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

class PlanarChecker {
public:
  PlanarChecker(const HopfContext& ctx, std::size_t max_degree, PlanarCoproductFn delta)
      : ctx_(ctx), max_degree_(max_degree), raw_(std::move(delta)) {
    for (std::size_t d = 0; d <= max_degree; ++d) {
      auto level = enumerate_planar_words(ctx.n, d);
      words_.insert(words_.end(), level.begin(), level.end());
    }
  }

  VerificationReport run() {
    VerificationReport report;
    report.checks.push_back(coassociativity());
    report.checks.push_back(counit());
    report.checks.push_back(grading());
    report.checks.push_back(multiplicativity());
    report.checks.push_back(defining_square());
    report.checks.push_back(antipode());
    return report;
  }

private:
  const PlanarTensor& delta(const PlanarWord& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(w, raw_(w)).first->second;
  }

  PlanarElement basis_of(const PlanarWord& w) const { return PlanarElement(ctx_.n, w); }

  static CheckResult fail(CheckResult r, std::string why) {
    r.counterexample = std::move(why);
    return r;
  }

  CheckResult coassociativity() {
    using Triple = Combination<std::vector<PlanarWord>>;
    CheckResult r{"coassociativity", 0, std::nullopt};
    for (const auto& w : words_) {
      ++r.cases;
      Triple left(ctx_.n);
      Triple right(ctx_.n);
      for (const auto& [lr, c] : delta(w)) {
        for (const auto& [ab, d] : delta(lr.first)) left.add({ab.first, ab.second, lr.second}, c * d);
        for (const auto& [ab, d] : delta(lr.second)) right.add({lr.first, ab.first, ab.second}, c * d);
      }
      if (!(left == right)) return fail(r, "word " + w.to_string());
    }
    return r;
  }

  CheckResult counit() {
    CheckResult r{"counit", 0, std::nullopt};
    for (const auto& w : words_) {
      ++r.cases;
      PlanarElement left(ctx_.n);
      PlanarElement right(ctx_.n);
      for (const auto& [lr, c] : delta(w)) {
        if (lr.first.empty()) left.add(lr.second, c);
        if (lr.second.empty()) right.add(lr.first, c);
      }
      if (!(left == basis_of(w)) || !(right == basis_of(w))) return fail(r, "word " + w.to_string());
    }
    return r;
  }

  CheckResult grading() {
    CheckResult r{"grading", 0, std::nullopt};
    for (const auto& w : words_) {
      ++r.cases;
      for (const auto& [lr, c] : delta(w))
        if (lr.first.vertex_count() + lr.second.vertex_count() != w.vertex_count())
          return fail(r, "word " + w.to_string());
    }
    return r;
  }

  CheckResult multiplicativity() {
    CheckResult r{"multiplicativity", 1, std::nullopt};
    if (!(delta(PlanarWord()) == PlanarTensor(ctx_.n, {PlanarWord(), PlanarWord()}))) return fail(r, "unit");
    for (const auto& a : words_) {
      if (a.empty()) continue;
      for (const auto& b : words_) {
        if (b.empty() || a.vertex_count() + b.vertex_count() > max_degree_) continue;
        ++r.cases;
        if (!(delta(a * b) == planar_product(delta(a), delta(b))))
          return fail(r, "words " + a.to_string() + ", " + b.to_string());
      }
    }
    return r;
  }

  CheckResult defining_square() {
    CheckResult r{"lambda-square", 0, std::nullopt};
    if (max_degree_ == 0) return r;
    const int n = ctx_.n;
    std::vector<std::vector<PlanarWord>> tuples{{}};
    for (int j = 0; j < n; ++j) {
      std::vector<std::vector<PlanarWord>> next;
      for (const auto& prefix : tuples) {
        std::size_t used = 0;
        for (const auto& w : prefix) used += w.vertex_count();
        for (const auto& w : words_) {
          if (used + w.vertex_count() > max_degree_ - 1) continue;
          auto grown = prefix;
          grown.push_back(w);
          next.push_back(std::move(grown));
        }
      }
      tuples = std::move(next);
    }
    for (const auto& tuple : tuples) {
      ++r.cases;
      PlanarTensor expected(n);
      std::vector<const PlanarTensor*> deltas;
      for (const auto& w : tuple) deltas.push_back(&delta(w));
      expand(tuple, deltas, 0, Poly(1L), {}, {}, expected);
      if (!(delta(PlanarWord(planar_lambda(tuple))) == expected)) {
        std::string s = "lambda(";
        for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? ", " : "") + tuple[i].to_string();
        return fail(r, s + ")");
      }
    }
    return r;
  }

  // Accumulates (sigma_1, sigma_2) o Delta^n over one choice of term per slot.
  void expand(const std::vector<PlanarWord>& tuple, const std::vector<const PlanarTensor*>& deltas, std::size_t j,
              const Poly& c, std::vector<PlanarWord> left, std::vector<PlanarWord> right, PlanarTensor& out) {
    if (j == tuple.size()) {
      Poly w1(1L);
      Poly w2(1L);
      PlanarWord left_word;
      PlanarWord right_word;
      for (std::size_t k = 0; k < left.size(); ++k) {
        const Colour colour = static_cast<Colour>(k + 1);
        w1 *= ctx_.q.value(1, colour).pow(static_cast<unsigned>(left[k].vertex_count()));
        w2 *= ctx_.q.value(2, colour).pow(static_cast<unsigned>(right[k].vertex_count()));
        left_word = left_word * left[k];
        right_word = right_word * right[k];
      }
      out.add({left_word, PlanarWord(planar_lambda(right))}, c * w1);
      out.add({PlanarWord(planar_lambda(left)), right_word}, c * w2);
      return;
    }
    for (const auto& [lr, d] : *deltas[j]) {
      auto l = left;
      auto rr = right;
      l.push_back(lr.first);
      rr.push_back(lr.second);
      expand(tuple, deltas, j + 1, c * d, std::move(l), std::move(rr), out);
    }
  }

  CheckResult antipode() {
    CheckResult r{"antipode", 0, std::nullopt};
    PlanarCoproductFn fn = [this](const PlanarWord& w) { return delta(w); };
    std::map<PlanarWord, PlanarElement> s_memo;
    auto s_of = [&](const PlanarWord& w) -> const PlanarElement& {
      auto it = s_memo.find(w);
      if (it != s_memo.end()) return it->second;
      return s_memo.emplace(w, planar_antipode(basis_of(w), fn)).first->second;
    };
    for (const auto& w : words_) {
      ++r.cases;
      PlanarElement left(ctx_.n);
      PlanarElement right(ctx_.n);
      for (const auto& [lr, c] : delta(w)) {
        left += c * planar_product(s_of(lr.first), basis_of(lr.second));
        right += c * planar_product(basis_of(lr.first), s_of(lr.second));
      }
      const PlanarElement expected = w.empty() ? basis_of(PlanarWord()) : PlanarElement(ctx_.n);
      if (!(left == expected)) return fail(r, "S * id on " + w.to_string());
      if (!(right == expected)) return fail(r, "id * S on " + w.to_string());
    }
    return r;
  }

  const HopfContext& ctx_;
  std::size_t max_degree_;
  PlanarCoproductFn raw_;
  std::map<PlanarWord, PlanarTensor> memo_;
  std::vector<PlanarWord> words_;
};

} // namespace

VerificationReport verify_planar(const HopfContext& ctx, std::size_t max_degree, const PlanarCoproductFn& delta) {
  return PlanarChecker(ctx, max_degree, delta).run();
}

VerificationReport verify_planar(const HopfContext& ctx, std::size_t max_degree, std::uint64_t seed) {
  VerificationReport report =
      verify_planar(ctx, max_degree, [&ctx](const PlanarWord& w) { return planar_coproduct(w, ctx); });
  if (!ctx.q.has_symbols()) return report;

  CheckResult r{"specialization", 0, std::nullopt};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::map<std::size_t, Rational> values;
  for (int side = 1; side <= 2; ++side)
    for (Colour j = 1; j <= ctx.n; ++j)
      if (!ctx.q.entry(side, j)) {
        Rational v(num(rng), den(rng));
        v.canonicalize();
        values[variable_index(side, j)] = v;
      }
  const HopfContext special(ctx.q.specialize(values));
  for (std::size_t d = 0; d <= max_degree && r.passed(); ++d)
    for (const auto& w : enumerate_planar_words(ctx.n, d)) {
      ++r.cases;
      const PlanarElement x(ctx.n, w);
      if (!(substitute(planar_coproduct(x, ctx), values) == planar_coproduct(x, special)) ||
          !(substitute(planar_antipode(x, ctx), values) == planar_antipode(x, special))) {
        r.counterexample = "word " + w.to_string();
        break;
      }
    }
  report.checks.push_back(r);
  return report;
}

} // namespace treehopf
