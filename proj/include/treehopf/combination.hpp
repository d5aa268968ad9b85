#pragma once

#include "treehopf/errors.hpp"
#include "treehopf/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace treehopf {

/// Finite linear combination of basis keys over Poly, living over a fixed
/// colour count. Zero coefficients are never stored, so equality is map
/// equality. `Key` must provide `max_colour(const Key&)` via ADL.
template <class Key>
class Combination {
public:
  using Terms = std::map<Key, Poly>;
  using const_iterator = typename Terms::const_iterator;

  explicit Combination(int colours) : colours_(colours) {}
  Combination(int colours, const Key& key, const Poly& coefficient = Poly(1L)) : colours_(colours) {
    add(key, coefficient);
  }

  int colours() const { return colours_; }

  void add(const Key& key, const Poly& coefficient) {
    if (coefficient.is_zero()) return;
    check_key(key);
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Coefficient of `key`; zero if absent.
  Poly coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Poly() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  Combination& operator+=(const Combination& other) {
    check_colours(other);
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    check_colours(other);
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  Combination& operator*=(const Poly& scalar) {
    if (scalar.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= scalar;
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Poly& s, Combination a) { return a *= s; }
  Combination operator-() const {
    Combination out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
  }

  bool operator==(const Combination& other) const {
    return colours_ == other.colours_ && terms_ == other.terms_;
  }

  /// Apply `f` to every coefficient (e.g. substitution), re-pruning zeros.
  template <class F>
  Combination map_coefficients(F&& f) const {
    Combination out(colours_);
    for (const auto& [k, c] : terms_) out.add(k, f(c));
    return out;
  }

  void check_colours(const Combination& other) const {
    if (other.colours_ != colours_)
      throw ColourError("colour count mismatch: " + std::to_string(colours_) + " vs " +
                        std::to_string(other.colours_));
  }

private:
  void check_key(const Key& key) const {
    if (max_colour(key) > colours_)
      throw ColourError("colour " + std::to_string(max_colour(key)) + " exceeds colour count " +
                        std::to_string(colours_));
  }

  int colours_;
  Terms terms_;
};

template <class A, class B>
int max_colour(const std::pair<A, B>& p) {
  const int a = max_colour(p.first);
  const int b = max_colour(p.second);
  return a > b ? a : b;
}

template <class T>
int max_colour(const std::vector<T>& items) {
  int m = 0;
  for (const auto& x : items) {
    const int c = max_colour(x);
    if (c > m) m = c;
  }
  return m;
}

} // namespace treehopf
