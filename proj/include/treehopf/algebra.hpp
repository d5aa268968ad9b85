#pragma once

#include "treehopf/combination.hpp"
#include "treehopf/poly.hpp"
#include "treehopf/tree.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treehopf {

/// Values of the deformation parameters q_{ij}, i in {1,2}, j in 1..n. Each
/// entry is a rational constant or symbolic (the indeterminate q_ij itself).
class QSpec {
public:
  /// Entries ordered q11..q1n, q21..q2n; nullopt means symbolic.
  QSpec(int n, std::vector<std::optional<Rational>> entries);

  static QSpec symbolic(int n);
  static QSpec constant(int n, const std::vector<Rational>& entries);
  /// Connes-Kreimer point for n = 1 style specs: q1j = 1, q2j = 0.
  static QSpec connes_kreimer(int n);
  /// q1j = 1 for j in p, else 0; q2j = 0.
  static QSpec characteristic(int n, const std::vector<Colour>& p);

  /// `sym`, or a comma list of 2n entries each a rational literal or `sym`.
  static QSpec parse(std::string_view text, int n);

  int colours() const { return n_; }
  const std::optional<Rational>& entry(int side, Colour colour) const;
  bool has_symbols() const;
  Poly value(int side, Colour colour) const;

  /// Product of q_{ij}^{e} over an exponent vector indexed by `variable_index`,
  /// with constants substituted.
  Poly evaluate(const std::vector<std::uint16_t>& exponents) const;

  /// Replace the symbolic entries listed in `values` (indexed by variable_index).
  QSpec specialize(const std::map<std::size_t, Rational>& values) const;

  std::string to_string() const;

private:
  int n_;
  std::vector<std::optional<Rational>> entries_;  // by variable_index
};

using Element = Combination<Forest>;
using ForestPair = std::pair<Forest, Forest>;
using TensorElement = Combination<ForestPair>;

/// The unit `1` (empty forest).
Element unit(int n);
Element basis(int n, const Forest& f, const Poly& coefficient = Poly(1L));

Element product(const Element& a, const Element& b);
/// Coefficient of the empty forest.
Poly counit(const Element& a);
/// Homogeneous part of degree d (vertex count).
Element grade(const Element& a, std::size_t degree);

/// sigma_i(f_1..f_n) = (prod_j q_ij^{|f_j|}) f_1...f_n, extended multilinearly.
Element sigma(int side, const QSpec& q, std::span<const Element> args);

TensorElement tensor(const Element& a, const Element& b);
/// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
TensorElement product(const TensorElement& a, const TensorElement& b);
TensorElement swap(const TensorElement& a);
/// mu: multiply the two legs.
Element multiply_legs(const TensorElement& a);

/// Substitute rational values for some q variables in every coefficient.
template <class Key>
Combination<Key> substitute(const Combination<Key>& a, const std::map<std::size_t, Rational>& values) {
  return a.map_coefficients([&](const Poly& c) { return c.substitute(values); });
}

} // namespace treehopf
