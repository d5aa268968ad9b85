#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace treehopf {

using Rational = mpq_class;
using Colour = int;

/// Index of the deformation parameter q_{side,colour} (side 1 or 2, colour >= 1).
/// The layout is independent of the colour count, so coefficients survive
/// maps between different n.
constexpr std::size_t variable_index(int side, Colour colour) {
  return 2 * static_cast<std::size_t>(colour - 1) + static_cast<std::size_t>(side - 1);
}
constexpr int variable_side(std::size_t index) { return static_cast<int>(index % 2) + 1; }
constexpr Colour variable_colour(std::size_t index) { return static_cast<Colour>(index / 2) + 1; }

std::string variable_name(std::size_t index);

/// Power product of the q variables. Exponent vectors carry no trailing zeros.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint16_t> exponents);

  static Monomial variable(std::size_t index, unsigned exponent = 1);

  unsigned exponent(std::size_t index) const {
    return index < exps_.size() ? exps_[index] : 0;
  }
  unsigned degree() const;
  bool is_one() const { return exps_.empty(); }
  const std::vector<std::uint16_t>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;

  std::string to_string() const;

private:
  void trim();
  std::vector<std::uint16_t> exps_;
};

/// Graded order: lower total degree first, then q11 before q21 before q12 ...
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial over Q in the q variables. Zero has no terms.
class Poly {
public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& value);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& coefficient, Monomial monomial);

  static Poly variable(int side, Colour colour);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; nullopt when a variable occurs.
  std::optional<Rational> constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Largest variable index occurring plus one (0 for constants).
  std::size_t variable_span() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& other) const;

  Poly pow(unsigned exponent) const;

  /// Replace the listed variables by rational values; others stay symbolic.
  Poly substitute(const std::map<std::size_t, Rational>& values) const;

  std::string to_string() const;
  static Poly parse(std::string_view text);

private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

std::string to_string(const Rational& r);

} // namespace treehopf
