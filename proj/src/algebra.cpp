#include "treehopf/algebra.hpp"

#include "cursor.hpp"
#include "poly_parse.hpp"

#include <algorithm>

namespace treehopf {

// ---------------------------------------------------------------------------
// QSpec

QSpec::QSpec(int n, std::vector<std::optional<Rational>> entries) : n_(n) {
  if (n < 0) throw ColourError("negative colour count");
  if (entries.size() != 2 * static_cast<std::size_t>(n))
    throw ColourError("q specification needs " + std::to_string(2 * n) + " entries, got " +
                      std::to_string(entries.size()));
  entries_.resize(entries.size());
  for (Colour j = 1; j <= n; ++j) {
    entries_[variable_index(1, j)] = entries[static_cast<std::size_t>(j - 1)];
    entries_[variable_index(2, j)] = entries[static_cast<std::size_t>(n + j - 1)];
  }
}

QSpec QSpec::symbolic(int n) {
  return QSpec(n, std::vector<std::optional<Rational>>(2 * static_cast<std::size_t>(n)));
}

QSpec QSpec::constant(int n, const std::vector<Rational>& entries) {
  std::vector<std::optional<Rational>> e(entries.begin(), entries.end());
  return QSpec(n, std::move(e));
}

QSpec QSpec::connes_kreimer(int n) {
  std::vector<Rational> e(2 * static_cast<std::size_t>(n), Rational(0));
  std::fill(e.begin(), e.begin() + n, Rational(1));
  return constant(n, e);
}

QSpec QSpec::characteristic(int n, const std::vector<Colour>& p) {
  std::vector<Rational> e(2 * static_cast<std::size_t>(n), Rational(0));
  for (Colour c : p) {
    if (c < 1 || c > n) throw ColourError("colour " + std::to_string(c) + " outside 1.." + std::to_string(n));
    e[static_cast<std::size_t>(c - 1)] = 1;
  }
  return constant(n, e);
}

QSpec QSpec::parse(std::string_view text, int n) {
  if (text == "sym") return symbolic(n);
  std::vector<std::optional<Rational>> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "sym") {
      entries.emplace_back();
    } else {
      detail::Cursor cur(text, start);
      cur.skip_space();
      Poly p = detail::parse_product(cur);
      cur.skip_space();
      if (cur.position() != comma) throw ParseError("bad q entry", cur.position());
      auto value = p.constant();
      if (!value) throw ParseError("q entries must be rational or 'sym'", start);
      entries.emplace_back(*value);
    }
    start = comma + 1;
  }
  if (entries.size() != 2 * static_cast<std::size_t>(n))
    throw ColourError("q specification needs " + std::to_string(2 * n) + " entries, got " +
                      std::to_string(entries.size()));
  return QSpec(n, std::move(entries));
}

const std::optional<Rational>& QSpec::entry(int side, Colour colour) const {
  if (colour < 1 || colour > n_ || (side != 1 && side != 2))
    throw ColourError("no q entry for side " + std::to_string(side) + ", colour " + std::to_string(colour));
  return entries_[variable_index(side, colour)];
}

bool QSpec::has_symbols() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const auto& e) { return !e.has_value(); });
}

Poly QSpec::value(int side, Colour colour) const {
  const auto& e = entry(side, colour);
  return e ? Poly(*e) : Poly::variable(side, colour);
}

Poly QSpec::evaluate(const std::vector<std::uint16_t>& exponents) const {
  Rational c = 1;
  std::vector<std::uint16_t> symbolic_part(exponents.size(), 0);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (i >= entries_.size()) throw ColourError("q exponent for a colour beyond the specification");
    if (entries_[i]) {
      if (*entries_[i] == 0) return Poly();
      for (unsigned k = 0; k < exponents[i]; ++k) c *= *entries_[i];
    } else {
      symbolic_part[i] = exponents[i];
    }
  }
  return Poly(c, Monomial(std::move(symbolic_part)));
}

QSpec QSpec::specialize(const std::map<std::size_t, Rational>& values) const {
  QSpec out = *this;
  for (const auto& [idx, v] : values)
    if (idx < out.entries_.size() && !out.entries_[idx]) out.entries_[idx] = v;
  return out;
}

std::string QSpec::to_string() const {
  std::string s;
  for (int side = 1; side <= 2; ++side)
    for (Colour j = 1; j <= n_; ++j) {
      if (!s.empty()) s += ',';
      const auto& e = entries_[variable_index(side, j)];
      s += e ? e->get_str() : "sym";
    }
  return s;
}

// ---------------------------------------------------------------------------
// Elements

Element unit(int n) { return Element(n, Forest()); }

Element basis(int n, const Forest& f, const Poly& coefficient) { return Element(n, f, coefficient); }

Element product(const Element& a, const Element& b) {
  a.check_colours(b);
  Element out(a.colours());
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) out.add(fa * fb, ca * cb);
  return out;
}

Poly counit(const Element& a) { return a.coefficient(Forest()); }

Element grade(const Element& a, std::size_t degree) {
  Element out(a.colours());
  for (const auto& [f, c] : a)
    if (f.vertex_count() == degree) out.add(f, c);
  return out;
}

Element sigma(int side, const QSpec& q, std::span<const Element> args) {
  const int n = q.colours();
  if (static_cast<int>(args.size()) != n)
    throw ColourError("sigma takes " + std::to_string(n) + " arguments");
  for (const auto& a : args)
    if (a.colours() != n) throw ColourError("sigma argument over the wrong colour count");
  if (n == 0) return unit(0);

  Element out(n);
  // cartesian product over the terms of each argument
  std::vector<Element::const_iterator> pos;
  for (const auto& a : args) {
    if (a.is_zero()) return out;
    pos.push_back(a.begin());
  }
  for (;;) {
    Forest f;
    Poly c(1L);
    for (int j = 0; j < n; ++j) {
      const auto& [fj, cj] = *pos[static_cast<std::size_t>(j)];
      c *= cj * q.value(side, j + 1).pow(static_cast<unsigned>(fj.vertex_count()));
      f = f * fj;
    }
    out.add(f, c);
    int j = n - 1;
    while (j >= 0) {
      auto& it = pos[static_cast<std::size_t>(j)];
      if (++it != args[static_cast<std::size_t>(j)].end()) break;
      it = args[static_cast<std::size_t>(j)].begin();
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

TensorElement tensor(const Element& a, const Element& b) {
  a.check_colours(b);
  TensorElement out(a.colours());
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) out.add({fa, fb}, ca * cb);
  return out;
}

TensorElement product(const TensorElement& a, const TensorElement& b) {
  a.check_colours(b);
  TensorElement out(a.colours());
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add({ka.first * kb.first, ka.second * kb.second}, ca * cb);
  return out;
}

TensorElement swap(const TensorElement& a) {
  TensorElement out(a.colours());
  for (const auto& [k, c] : a) out.add({k.second, k.first}, c);
  return out;
}

Element multiply_legs(const TensorElement& a) {
  Element out(a.colours());
  for (const auto& [k, c] : a) out.add(k.first * k.second, c);
  return out;
}

} // namespace treehopf
