#pragma once

#include "treehopf/tree.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace treehopf {

using VertexMask = std::uint64_t;

/// Largest forest whose vertex subsets we are willing to enumerate.
inline constexpr std::size_t kMaxSubsetVertices = 30;

/// Address of a vertex in the canonical representative of a forest: the
/// index of its tree, then (colour, index among same-colour children) steps
/// from that tree's root.
struct VertexRef {
  std::size_t tree = 0;
  std::vector<std::pair<Colour, std::size_t>> steps;

  bool operator==(const VertexRef&) const = default;
};

// Induced structure on a vertex subset. A selected vertex hangs below its
// nearest selected ancestor; the edge takes the colour of the host edge that
// leaves that ancestor towards it. Vertex order is preserved.
Shape induced_shape(const Shape& host, VertexMask mask);

/// Number of colour-k edges on the path from v to its root whose lower
/// vertex lies on the other side of the partition (mask, complement) from v.
unsigned path_count(const Shape& host, Colour k, std::size_t v, VertexMask mask);

/// Exponent vector (indexed by `variable_index`) of q(s, host) for s = mask.
std::vector<std::uint16_t> q_exponents(const Shape& host, VertexMask mask);

/// The canonical representative of a forest flattened in preorder (trees in
/// forest order, children in canonical order).
class ForestLayout {
public:
  explicit ForestLayout(const Forest& forest);

  const Forest& forest() const { return forest_; }
  const Shape& shape() const { return shape_; }
  std::size_t size() const { return shape_.size(); }
  VertexMask full_mask() const;

  std::size_t index_of(const VertexRef& ref) const;
  const VertexRef& ref(std::size_t index) const { return refs_[index]; }

  Forest induced(VertexMask mask) const;

private:
  Forest forest_;
  Shape shape_;
  std::vector<VertexRef> refs_;
};

/// A subset of the vertices of a forest's representative.
class Subforest {
public:
  Subforest(std::shared_ptr<const ForestLayout> layout, VertexMask selected);

  const Forest& host() const { return layout_->forest(); }
  const ForestLayout& layout() const { return *layout_; }
  VertexMask mask() const { return mask_; }
  std::size_t size() const;

  bool contains(const VertexRef& v) const;
  std::vector<VertexRef> selected() const;
  Subforest complement() const;
  /// The forest carried by the induced partial order.
  Forest induced() const;

  bool operator==(const Subforest& other) const {
    return layout_->forest() == other.layout_->forest() && mask_ == other.mask_;
  }

private:
  std::shared_ptr<const ForestLayout> layout_;
  VertexMask mask_;
};

/// All 2^|f| subforests, in increasing mask order.
class SubforestRange {
public:
  class iterator {
  public:
    using value_type = Subforest;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const SubforestRange* range, VertexMask mask) : range_(range), mask_(mask) {}
    Subforest operator*() const { return Subforest(range_->layout_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++mask_;
      return old;
    }
    bool operator==(const iterator& o) const { return mask_ == o.mask_; }

  private:
    const SubforestRange* range_ = nullptr;
    VertexMask mask_ = 0;
  };

  explicit SubforestRange(const Forest& forest);

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, count_); }
  VertexMask size() const { return count_; }

private:
  std::shared_ptr<const ForestLayout> layout_;
  VertexMask count_;
};

SubforestRange subforests(const Forest& forest);

/// p_k(v, s, host): colour-k edges on the path from v to the root of its
/// component whose lower vertex is outside s. Throws if v is not in s.
unsigned p_count(Colour k, const VertexRef& v, const Subforest& s);

} // namespace treehopf
