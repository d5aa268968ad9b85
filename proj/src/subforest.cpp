#include "treehopf/subforest.hpp"

#include "treehopf/errors.hpp"

#include <bit>

namespace treehopf {

namespace {

bool in_mask(VertexMask mask, std::size_t v) { return ((mask >> v) & 1u) != 0; }

} // namespace

Shape induced_shape(const Shape& host, VertexMask mask) {
  std::vector<int> remap(host.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < host.size(); ++v)
    if (in_mask(mask, v)) remap[v] = next++;

  Shape out;
  out.parent.reserve(static_cast<std::size_t>(next));
  out.colour.reserve(static_cast<std::size_t>(next));
  for (std::size_t v = 0; v < host.size(); ++v) {
    if (!in_mask(mask, v)) continue;
    std::size_t x = v;
    while (host.parent[x] != -1 && !in_mask(mask, static_cast<std::size_t>(host.parent[x])))
      x = static_cast<std::size_t>(host.parent[x]);
    if (host.parent[x] == -1) {
      out.parent.push_back(-1);
      out.colour.push_back(0);
    } else {
      out.parent.push_back(remap[static_cast<std::size_t>(host.parent[x])]);
      out.colour.push_back(host.colour[x]);
    }
  }
  return out;
}

unsigned path_count(const Shape& host, Colour k, std::size_t v, VertexMask mask) {
  const bool side = in_mask(mask, v);
  unsigned count = 0;
  for (std::size_t x = v; host.parent[x] != -1; x = static_cast<std::size_t>(host.parent[x])) {
    if (host.colour[x] == k && in_mask(mask, static_cast<std::size_t>(host.parent[x])) != side) ++count;
  }
  return count;
}

std::vector<std::uint16_t> q_exponents(const Shape& host, VertexMask mask) {
  std::vector<std::uint16_t> exps;
  for (std::size_t v = 0; v < host.size(); ++v) {
    const bool side = in_mask(mask, v);
    const int which = side ? 1 : 2;
    for (std::size_t x = v; host.parent[x] != -1; x = static_cast<std::size_t>(host.parent[x])) {
      if (in_mask(mask, static_cast<std::size_t>(host.parent[x])) == side) continue;
      const std::size_t idx = variable_index(which, host.colour[x]);
      if (exps.size() <= idx) exps.resize(idx + 1, 0);
      ++exps[idx];
    }
  }
  return exps;
}

// ---------------------------------------------------------------------------
// ForestLayout

namespace {

void flatten(const Tree& t, int parent, Colour colour, VertexRef ref, Shape& shape,
             std::vector<VertexRef>& refs) {
  const int self = static_cast<int>(shape.size());
  shape.parent.push_back(parent);
  shape.colour.push_back(colour);
  refs.push_back(ref);
  std::size_t same_colour_index = 0;
  Colour last = 0;
  for (const auto& e : t.edges()) {
    if (e.colour != last) {
      last = e.colour;
      same_colour_index = 0;
    }
    VertexRef child = ref;
    child.steps.emplace_back(e.colour, same_colour_index++);
    flatten(e.child, self, e.colour, std::move(child), shape, refs);
  }
}

} // namespace

ForestLayout::ForestLayout(const Forest& forest) : forest_(forest) {
  for (std::size_t i = 0; i < forest.trees().size(); ++i) {
    VertexRef root;
    root.tree = i;
    flatten(forest.trees()[i], -1, 0, root, shape_, refs_);
  }
}

VertexMask ForestLayout::full_mask() const {
  if (size() >= 64) throw BudgetExceeded("forest too large for vertex masks");
  return (VertexMask{1} << size()) - 1;
}

std::size_t ForestLayout::index_of(const VertexRef& ref) const {
  for (std::size_t i = 0; i < refs_.size(); ++i)
    if (refs_[i] == ref) return i;
  throw InvalidStructure("vertex reference does not resolve in this forest");
}

Forest ForestLayout::induced(VertexMask mask) const {
  return canonicalize_forest(induced_shape(shape_, mask), forest_.max_colour());
}

// ---------------------------------------------------------------------------
// Subforest

Subforest::Subforest(std::shared_ptr<const ForestLayout> layout, VertexMask selected)
    : layout_(std::move(layout)), mask_(selected) {
  if ((mask_ & ~layout_->full_mask()) != 0) throw InvalidStructure("mask selects missing vertices");
}

std::size_t Subforest::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

bool Subforest::contains(const VertexRef& v) const { return in_mask(mask_, layout_->index_of(v)); }

std::vector<VertexRef> Subforest::selected() const {
  std::vector<VertexRef> out;
  for (std::size_t v = 0; v < layout_->size(); ++v)
    if (in_mask(mask_, v)) out.push_back(layout_->ref(v));
  return out;
}

Subforest Subforest::complement() const { return Subforest(layout_, layout_->full_mask() & ~mask_); }

Forest Subforest::induced() const { return layout_->induced(mask_); }

SubforestRange::SubforestRange(const Forest& forest)
    : layout_(std::make_shared<const ForestLayout>(forest)) {
  if (layout_->size() > kMaxSubsetVertices)
    throw BudgetExceeded("subforest enumeration limited to " + std::to_string(kMaxSubsetVertices) +
                         " vertices");
  count_ = VertexMask{1} << layout_->size();
}

SubforestRange subforests(const Forest& forest) { return SubforestRange(forest); }

unsigned p_count(Colour k, const VertexRef& v, const Subforest& s) {
  const std::size_t idx = s.layout().index_of(v);
  if (!in_mask(s.mask(), idx)) throw InvalidStructure("p_count: vertex is not in the subforest");
  return path_count(s.layout().shape(), k, idx, s.mask());
}

} // namespace treehopf
