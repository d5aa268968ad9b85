#include "treehopf/hopf.hpp"

#include "treehopf/errors.hpp"

#include <bit>
#include <map>

namespace treehopf {

namespace {

using MultiTensor = Combination<std::vector<Forest>>;

void check_context(const Element& a, const HopfContext& ctx) {
  if (a.colours() != ctx.n)
    throw ColourError("element over " + std::to_string(a.colours()) + " colours, context has " +
                      std::to_string(ctx.n));
}

Element product_of(const std::vector<Forest>& parts, int n) {
  Forest f;
  for (const auto& p : parts) f = f * p;
  return basis(n, f);
}

// Bit positions of `local` re-expressed inside the ambient mask `within`.
VertexMask compress(VertexMask within, VertexMask sub) {
  VertexMask out = 0;
  std::size_t k = 0;
  for (std::size_t v = 0; v < 64 && (within >> v) != 0; ++v) {
    if (((within >> v) & 1u) == 0) continue;
    if ((sub >> v) & 1u) out |= VertexMask{1} << k;
    ++k;
  }
  return out;
}

} // namespace

Poly q_coeff(const Shape& host, VertexMask s, const QSpec& q) { return q.evaluate(q_exponents(host, s)); }

Poly q_coeff(const Subforest& s, const HopfContext& ctx) {
  if (s.host().max_colour() > ctx.n) throw ColourError("subforest host uses colours beyond the context");
  return q_coeff(s.layout().shape(), s.mask(), ctx.q);
}

// ---------------------------------------------------------------------------
// Coproducts

TensorElement coproduct(const Forest& f, const HopfContext& ctx) {
  if (f.max_colour() > ctx.n) throw ColourError("forest uses colours beyond the context");
  if (f.vertex_count() > kMaxSubsetVertices)
    throw BudgetExceeded("coproduct limited to " + std::to_string(kMaxSubsetVertices) + " vertices");
  const ForestLayout layout(f);
  const VertexMask full = layout.full_mask();
  TensorElement out(ctx.n);
  for (VertexMask s = 0; s <= full; ++s) {
    Poly c = q_coeff(layout.shape(), s, ctx.q);
    if (c.is_zero()) continue;
    out.add({layout.induced(s), layout.induced(full & ~s)}, c);
  }
  return out;
}

TensorElement coproduct(const Element& a, const HopfContext& ctx) {
  check_context(a, ctx);
  TensorElement out(ctx.n);
  for (const auto& [f, c] : a) out += c * coproduct(f, ctx);
  return out;
}

TensorElement lambda_sigma(const HopfContext& ctx, std::span<const TensorElement> deltas) {
  const int n = ctx.n;
  if (static_cast<int>(deltas.size()) != n) throw ColourError("lambda_sigma needs n coproducts");
  TensorElement out(n);
  std::vector<TensorElement::const_iterator> pos;
  for (const auto& d : deltas) {
    if (d.is_zero()) return out;
    pos.push_back(d.begin());
  }
  std::vector<Forest> left(static_cast<std::size_t>(n));
  std::vector<Forest> right(static_cast<std::size_t>(n));
  for (;;) {
    Poly c(1L);
    Poly w1(1L);
    Poly w2(1L);
    Forest left_product;
    Forest right_product;
    for (int j = 0; j < n; ++j) {
      const auto& [key, cj] = *pos[static_cast<std::size_t>(j)];
      c *= cj;
      left[static_cast<std::size_t>(j)] = key.first;
      right[static_cast<std::size_t>(j)] = key.second;
      left_product = left_product * key.first;
      right_product = right_product * key.second;
      w1 *= ctx.q.value(1, j + 1).pow(static_cast<unsigned>(key.first.vertex_count()));
      w2 *= ctx.q.value(2, j + 1).pow(static_cast<unsigned>(key.second.vertex_count()));
    }
    // sigma_1 (x) lambda  +  lambda (x) sigma_2
    out.add({left_product, Forest(lambda(right))}, c * w1);
    out.add({Forest(lambda(left)), right_product}, c * w2);

    int j = n - 1;
    while (j >= 0) {
      auto& it = pos[static_cast<std::size_t>(j)];
      if (++it != deltas[static_cast<std::size_t>(j)].end()) break;
      it = deltas[static_cast<std::size_t>(j)].begin();
      --j;
    }
    if (j < 0) break;
  }
  if (n == 0) {
    // lambda_0() is the single vertex; sigma_i() = 1.
    out.add({Forest(Tree()), Forest()}, Poly(1L));
    out.add({Forest(), Forest(Tree())}, Poly(1L));
  }
  return out;
}

namespace {

class InductiveCoproduct {
public:
  explicit InductiveCoproduct(const HopfContext& ctx) : ctx_(ctx) {}

  const TensorElement& tree(const Tree& t) {
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
    std::vector<TensorElement> deltas;
    for (const auto& f : decompose(t, ctx_.n)) deltas.push_back(forest(f));
    return memo_.emplace(t, lambda_sigma(ctx_, deltas)).first->second;
  }

  TensorElement forest(const Forest& f) {
    TensorElement out(ctx_.n, {Forest(), Forest()});
    for (const auto& t : f.trees()) out = product(out, tree(t));
    return out;
  }

private:
  const HopfContext& ctx_;
  std::map<Tree, TensorElement> memo_;
};

} // namespace

TensorElement coproduct_inductive(const Element& a, const HopfContext& ctx) {
  check_context(a, ctx);
  InductiveCoproduct rec(ctx);
  TensorElement out(ctx.n);
  for (const auto& [f, c] : a) out += c * rec.forest(f);
  return out;
}

// ---------------------------------------------------------------------------
// Antipodes

Element antipode_recursive(const Element& a, const CoproductFn& delta) {
  const int n = a.colours();
  Element result(n);
  for (const auto& [f, c] : a) {
    if (f.empty()) {
      result.add(f, c);
      continue;
    }
    MultiTensor level(n, {f});
    Poly sign(-1L);
    for (std::size_t k = 0; k < f.vertex_count() && !level.is_zero(); ++k) {
      for (const auto& [parts, coef] : level) result += (c * coef * sign) * product_of(parts, n);
      MultiTensor next(n);
      for (const auto& [parts, coef] : level) {
        TensorElement reduced = delta(parts.front());
        reduced.add({parts.front(), Forest()}, Poly(-1L));
        reduced.add({Forest(), parts.front()}, Poly(-1L));
        for (const auto& [lr, d] : reduced) {
          std::vector<Forest> grown;
          grown.reserve(parts.size() + 1);
          grown.push_back(lr.first);
          grown.push_back(lr.second);
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

Element antipode_recursive(const Element& a, const HopfContext& ctx) {
  check_context(a, ctx);
  std::map<Forest, TensorElement> memo;
  CoproductFn delta = [&](const Forest& f) -> TensorElement {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    return memo.emplace(f, coproduct(f, ctx)).first->second;
  };
  return antipode_recursive(a, delta);
}

namespace {

class PartitionAntipode {
public:
  PartitionAntipode(const ForestLayout& layout, const HopfContext& ctx) : layout_(layout), ctx_(ctx) {}

  // Sum over ordered partitions of the vertex set `u`.
  const Element& over(VertexMask u) {
    auto it = memo_.find(u);
    if (it != memo_.end()) return it->second;
    Element out(ctx_.n);
    if (u == 0) {
      out = unit(ctx_.n);
    } else {
      const Shape host = induced_shape(layout_.shape(), u);
      // nonempty submasks s of u
      for (VertexMask s = u; s != 0; s = (s - 1) & u) {
        const VertexMask local = compress(u, s);
        Poly q = q_coeff(host, local, ctx_.q);
        if (q.is_zero()) continue;
        const Forest block = canonicalize_forest(induced_shape(host, local), ctx_.n);
        const Element& rest = over(u & ~s);
        for (const auto& [f, c] : rest) out.add(block * f, -(q * c));
      }
    }
    return memo_.emplace(u, std::move(out)).first->second;
  }

private:
  const ForestLayout& layout_;
  const HopfContext& ctx_;
  std::map<VertexMask, Element> memo_;
};

} // namespace

Element antipode_partitions(const Element& a, const HopfContext& ctx) {
  check_context(a, ctx);
  Element result(ctx.n);
  for (const auto& [f, c] : a) {
    if (f.vertex_count() > kMaxSubsetVertices) throw BudgetExceeded("antipode_partitions: forest too large");
    const ForestLayout layout(f);
    PartitionAntipode rec(layout, ctx);
    result += c * rec.over(layout.full_mask());
  }
  return result;
}

// ---------------------------------------------------------------------------
// Connes-Kreimer admissible cuts

namespace {

struct PlainTree {
  std::vector<std::vector<int>> children;  // vertex 0 is the root
};

void plain_add(const Tree& t, PlainTree& out) {
  const int self = static_cast<int>(out.children.size());
  out.children.emplace_back();
  for (const auto& e : t.edges()) {
    const int child = static_cast<int>(out.children.size());
    out.children[static_cast<std::size_t>(self)].push_back(child);
    plain_add(e.child, out);
  }
}

Tree plain_subtree(const PlainTree& p, int v, const std::vector<bool>& removed) {
  std::vector<TreeEdge> edges;
  for (int c : p.children[static_cast<std::size_t>(v)])
    if (!removed[static_cast<std::size_t>(c)]) edges.push_back({1, plain_subtree(p, c, removed)});
  return Tree::make(std::move(edges));
}

TensorElement ck_tree(const Tree& t) {
  PlainTree p;
  plain_add(t, p);
  const int size = static_cast<int>(p.children.size());
  std::vector<int> parent(static_cast<std::size_t>(size), -1);
  for (int v = 0; v < size; ++v)
    for (int c : p.children[static_cast<std::size_t>(v)]) parent[static_cast<std::size_t>(c)] = v;

  TensorElement out(1);
  out.add({Forest(t), Forest()}, Poly(1L));
  // cut sets are subsets of non-root vertices (the edge above each)
  const std::uint64_t cuts = std::uint64_t{1} << (size - 1);
  for (std::uint64_t cut = 0; cut < cuts; ++cut) {
    std::vector<bool> is_cut(static_cast<std::size_t>(size), false);
    for (int v = 1; v < size; ++v) is_cut[static_cast<std::size_t>(v)] = ((cut >> (v - 1)) & 1u) != 0;
    bool admissible = true;
    for (int v = 1; v < size && admissible; ++v) {
      if (!is_cut[static_cast<std::size_t>(v)]) continue;
      for (int a = parent[static_cast<std::size_t>(v)]; a > 0; a = parent[static_cast<std::size_t>(a)])
        if (is_cut[static_cast<std::size_t>(a)]) admissible = false;
    }
    if (!admissible) continue;
    const std::vector<bool> none(static_cast<std::size_t>(size), false);
    std::vector<Tree> pruned;
    for (int v = 1; v < size; ++v)
      if (is_cut[static_cast<std::size_t>(v)]) pruned.push_back(plain_subtree(p, v, none));
    out.add({Forest(std::move(pruned)), Forest(plain_subtree(p, 0, is_cut))}, Poly(1L));
  }
  return out;
}

} // namespace

TensorElement ck_coproduct_oracle(const Element& a) {
  if (a.colours() != 1) throw ColourError("the admissible-cut oracle is defined for n = 1 only");
  TensorElement out(1);
  for (const auto& [f, c] : a) {
    TensorElement term(1, {Forest(), Forest()});
    for (const auto& t : f.trees()) term = product(term, ck_tree(t));
    out += c * term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simplicial structure

namespace {

Forest face_tree(int i, int n, const Tree& t) {
  std::vector<Forest> x = decompose(t, n);
  for (auto& f : x) f = simplicial_d(i, n, f);
  if (i == 0) {
    std::vector<Forest> rest(x.begin() + 1, x.end());
    return x.front() * Forest(lambda(rest));
  }
  if (i == n) {
    std::vector<Forest> rest(x.begin(), x.end() - 1);
    return Forest(lambda(rest)) * x.back();
  }
  std::vector<Forest> merged;
  for (int j = 0; j < n; ++j) {
    if (j == i - 1) {
      merged.push_back(x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j + 1)]);
      ++j;
    } else {
      merged.push_back(x[static_cast<std::size_t>(j)]);
    }
  }
  return Forest(lambda(merged));
}

Tree degeneracy_tree(int i, int n, const Tree& t) {
  std::vector<Forest> x = decompose(t, n);
  for (auto& f : x) f = simplicial_s(i, n, f);
  x.insert(x.begin() + i, Forest());
  return lambda(x);
}

} // namespace

Forest simplicial_d(int i, int n, const Forest& f) {
  if (n < 1) throw ColourError("face maps need n >= 1");
  if (i < 0 || i > n) throw std::out_of_range("face index " + std::to_string(i) + " outside 0.." + std::to_string(n));
  Forest out;
  for (const auto& t : f.trees()) out = out * face_tree(i, n, t);
  return out;
}

Forest simplicial_s(int i, int n, const Forest& f) {
  if (n < 0) throw ColourError("negative colour count");
  if (i < 0 || i > n)
    throw std::out_of_range("degeneracy index " + std::to_string(i) + " outside 0.." + std::to_string(n));
  std::vector<Tree> trees;
  for (const auto& t : f.trees()) trees.push_back(degeneracy_tree(i, n, t));
  return Forest(std::move(trees));
}

Element simplicial_d(int i, const Element& a) {
  const int n = a.colours();
  if (n < 1) throw ColourError("face maps need n >= 1");
  Element out(n - 1);
  for (const auto& [f, c] : a) out.add(simplicial_d(i, n, f), c);
  return out;
}

Element simplicial_s(int i, const Element& a) {
  const int n = a.colours();
  Element out(n + 1);
  for (const auto& [f, c] : a) out.add(simplicial_s(i, n, f), c);
  return out;
}

} // namespace treehopf
