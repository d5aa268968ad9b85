#include "treehopf/poly.hpp"

#include "poly_parse.hpp"

#include <algorithm>
#include <numeric>

namespace treehopf {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string variable_name(std::size_t index) {
  const int side = variable_side(index);
  const Colour colour = variable_colour(index);
  if (colour < 10) return "q" + std::to_string(side) + std::to_string(colour);
  return "q" + std::to_string(side) + "_" + std::to_string(colour);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint16_t> exponents) : exps_(std::move(exponents)) { trim(); }

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  std::vector<std::uint16_t> e(index + 1, 0);
  e[index] = static_cast<std::uint16_t>(exponent);
  return Monomial(std::move(e));
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const {
  const auto& a = exps_.size() >= other.exps_.size() ? exps_ : other.exps_;
  const auto& b = exps_.size() >= other.exps_.size() ? other.exps_ : exps_;
  Monomial out;
  out.exps_ = a;
  for (std::size_t i = 0; i < b.size(); ++i) out.exps_[i] = static_cast<std::uint16_t>(out.exps_[i] + b[i]);
  return out;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += variable_name(i);
    if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
  }
  return s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  const std::size_t len = std::max(a.exponents().size(), b.exponents().size());
  for (std::size_t i = 0; i < len; ++i) {
    const unsigned ea = a.exponent(i);
    const unsigned eb = b.exponent(i);
    if (ea != eb) return ea > eb;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(long value) {
  if (value != 0) terms_.emplace(Monomial{}, Rational(value));
}

Poly::Poly(const Rational& value) {
  if (value != 0) terms_.emplace(Monomial{}, value);
}

Poly::Poly(const Rational& coefficient, Monomial monomial) {
  if (coefficient != 0) terms_.emplace(std::move(monomial), coefficient);
}

Poly Poly::variable(int side, Colour colour) {
  return Poly(Rational(1), Monomial::variable(variable_index(side, colour)));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> Poly::constant() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

std::size_t Poly::variable_span() const {
  std::size_t span = 0;
  for (const auto& [m, c] : terms_) span = std::max(span, m.exponents().size());
  return span;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool Poly::operator==(const Poly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  auto it = other.terms_.begin();
  for (const auto& [m, c] : terms_) {
    if (!(m == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1L);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::substitute(const std::map<std::size_t, Rational>& values) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    std::vector<std::uint16_t> rest = m.exponents();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == 0) continue;
      auto it = values.find(i);
      if (it == values.end()) continue;
      Rational p = 1;
      for (unsigned k = 0; k < rest[i]; ++k) p *= it->second;
      coeff *= p;
      rest[i] = 0;
    }
    out.add_term(Monomial(std::move(rest)), coeff);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string body;
    if (m.is_one()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = m.to_string();
    } else {
      body = mag.get_str() + "*" + m.to_string();
    }
    if (first) {
      s = negative ? "-" + body : body;
      first = false;
    } else {
      s += negative ? " - " : " + ";
      s += body;
    }
  }
  return s;
}

Poly Poly::parse(std::string_view text) {
  detail::Cursor cur(text);
  cur.skip_space();
  Poly p = detail::parse_poly(cur);
  cur.skip_space();
  if (!cur.done()) cur.fail("unexpected trailing input in polynomial");
  return p;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

namespace {

Rational parse_rational(Cursor& cur) {
  std::string num = cur.digits();
  if (cur.peek() == '/' && std::isdigit(static_cast<unsigned char>(cur.peek(1)))) {
    cur.advance();
    std::string den = cur.digits();
    if (std::all_of(den.begin(), den.end(), [](char ch) { return ch == '0'; }))
      cur.fail("zero denominator");
    Rational r(num + "/" + den);
    r.canonicalize();
    return r;
  }
  return Rational(num);
}

Poly parse_factor(Cursor& cur);

Poly parse_power(Cursor& cur, Poly base) {
  if (cur.accept('^')) {
    const std::size_t at = cur.position();
    const std::string e = cur.digits();
    if (e.size() > 4) throw ParseError("exponent too large", at);
    return base.pow(static_cast<unsigned>(std::stoul(e)));
  }
  return base;
}

Poly parse_factor(Cursor& cur) {
  if (cur.accept('(')) {
    cur.skip_space();
    Poly inner = parse_poly(cur);
    cur.skip_space();
    cur.expect(')');
    return parse_power(cur, std::move(inner));
  }
  if (cur.peek() == 'q') {
    const std::size_t at = cur.position();
    cur.advance();
    const char side = cur.peek();
    if (side != '1' && side != '2') throw ParseError("variable side must be 1 or 2", cur.position());
    cur.advance();
    cur.accept('_');
    const std::string colour = cur.digits();
    if (colour.size() > 6 || std::stol(colour) < 1) throw ParseError("bad variable colour", at);
    Poly v = Poly::variable(side - '0', static_cast<Colour>(std::stol(colour)));
    return parse_power(cur, std::move(v));
  }
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    return parse_power(cur, Poly(parse_rational(cur)));
  }
  cur.fail("expected a number, variable or '('");
}

Poly parse_term(Cursor& cur, bool allow_space) {
  Poly p = parse_factor(cur);
  for (;;) {
    const std::size_t save = cur.position();
    if (allow_space) cur.skip_space();
    if (cur.peek() == '*' && cur.peek(1) != '[') {
      cur.advance();
      if (allow_space) cur.skip_space();
      p *= parse_factor(cur);
    } else {
      cur.reset(save);
      return p;
    }
  }
}

} // namespace

Poly parse_poly(Cursor& cur) {
  bool negative = false;
  if (cur.accept('-')) {
    negative = true;
    cur.skip_space();
  } else if (cur.accept('+')) {
    cur.skip_space();
  }
  Poly total = parse_term(cur, true);
  if (negative) total = -total;
  for (;;) {
    const std::size_t save = cur.position();
    cur.skip_space();
    if (cur.accept('+')) {
      cur.skip_space();
      total += parse_term(cur, true);
    } else if (cur.accept('-')) {
      cur.skip_space();
      total -= parse_term(cur, true);
    } else {
      cur.reset(save);
      return total;
    }
  }
}

Poly parse_product(Cursor& cur) {
  bool negative = cur.accept('-');
  Poly p = parse_term(cur, false);
  return negative ? -p : p;
}

} // namespace detail

} // namespace treehopf
