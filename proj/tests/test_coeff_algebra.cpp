#include "treehopf/algebra.hpp"
#include "treehopf/errors.hpp"

#include <doctest.h>

#include <random>

using namespace treehopf;

namespace {

// Hand-rolled generator: small random polynomials in q11, q21, q12, q22.
Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 3);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  std::uniform_int_distribution<int> exp(0, 2);
  Poly p;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<std::uint16_t> e(4);
    for (auto& x : e) x = static_cast<std::uint16_t>(exp(rng));
    Rational c(num(rng), den(rng));
    c.canonicalize();
    p += Poly(c, Monomial(e));
  }
  return p;
}

Element random_element(std::mt19937& rng, int n, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::uniform_int_distribution<int> terms(0, 3);
  Element out(n);
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) {
    const auto forests = enumerate_forests(n, deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, forests.size() - 1);
    out.add(forests[pick(rng)], random_poly(rng));
  }
  return out;
}

Forest F(const char* s) { return Forest::parse(s); }

} // namespace

TEST_CASE("polynomial ring axioms on random inputs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Poly a = random_poly(rng);
    const Poly b = random_poly(rng);
    const Poly c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly());
    CHECK(a * Poly(1L) == a);
    CHECK((a * Poly()).is_zero());
  }
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> num(1, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a(num(rng), num(rng));
    a.canonicalize();
    CHECK(Poly(a) * Poly(Rational(1) / a) == Poly(1L));
  }
  CHECK(Poly(Rational(0)) == Poly());
  CHECK(Poly(Rational(0)).is_zero());
}

TEST_CASE("polynomial printing and parsing") {
  const Poly q11 = Poly::variable(1, 1);
  const Poly q22 = Poly::variable(2, 2);
  CHECK(q11.to_string() == "q11");
  CHECK((Poly(Rational(2, 3)) * q11.pow(2) * q22).to_string() == "2/3*q11^2*q22");
  CHECK(Poly().to_string() == "0");
  CHECK(Poly::variable(1, 10).to_string() == "q1_10");
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly p = random_poly(rng);
    CHECK(Poly::parse(p.to_string()) == p);
  }
  CHECK(Poly::parse("(q11 + q21)^2") == q11 * q11 + Poly(2L) * q11 * Poly::variable(2, 1) +
                                            Poly::variable(2, 1) * Poly::variable(2, 1));
  CHECK_THROWS_AS(Poly::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Poly::parse("q31"), ParseError);
  CHECK_THROWS_AS(Poly::parse("q11 +"), ParseError);
}

TEST_CASE("substitution") {
  const Poly p = Poly::variable(1, 1) * Poly::variable(2, 1) + Poly(3L);
  CHECK(p.substitute({{variable_index(1, 1), Rational(2)}}) == Poly(2L) * Poly::variable(2, 1) + Poly(3L));
  CHECK(p.substitute({{variable_index(1, 1), Rational(0)}}) == Poly(3L));
}

TEST_CASE("QSpec parsing") {
  const QSpec sym = QSpec::parse("sym", 2);
  CHECK(sym.has_symbols());
  CHECK(sym.value(1, 2) == Poly::variable(1, 2));
  const QSpec ck = QSpec::parse("1,0", 1);
  CHECK_FALSE(ck.has_symbols());
  CHECK(ck.value(1, 1) == Poly(1L));
  CHECK(ck.value(2, 1).is_zero());
  const QSpec mixed = QSpec::parse("1/2, sym, -3, 0", 2);
  CHECK(mixed.value(1, 1) == Poly(Rational(1, 2)));
  CHECK(mixed.value(1, 2) == Poly::variable(1, 2));
  CHECK(mixed.value(2, 1) == Poly(-3L));
  CHECK(mixed.to_string() == "1/2,sym,-3,0");
  CHECK_THROWS_AS(QSpec::parse("1,0,1", 1), ColourError);
  CHECK_THROWS_AS(QSpec::parse("1,x", 1), ParseError);
  CHECK_THROWS_AS(QSpec::parse("1,q11", 1), ParseError);
}

TEST_CASE("product examples") {
  const Element one = unit(1);
  const Element f = basis(1, F("[1:[]]"));
  CHECK(product(one, f) == f);
  CHECK(product(basis(1, F("[]")), basis(1, F("[]"))) == basis(1, F("[]*[]")));
  CHECK(product(basis(1, F("[]"), Poly(2L)), basis(1, F("[1:[]]"), Poly(3L))) ==
        basis(1, F("[]*[1:[]]"), Poly(6L)));
}

TEST_CASE("product rejects different colour counts") {
  CHECK_THROWS_AS(product(unit(1), unit(2)), ColourError);
  CHECK_THROWS_AS(basis(1, F("[2:[]]")), ColourError);
}

TEST_CASE("counit examples") {
  CHECK(counit(unit(1)) == Poly(1L));
  CHECK(counit(basis(1, F("[]"))).is_zero());
  CHECK(counit(basis(1, F("1"), Poly(5L)) + basis(1, F("[1:[]]"), Poly(7L))) == Poly(5L));
}

TEST_CASE("sigma examples") {
  const QSpec sym = QSpec::symbolic(2);
  std::vector<Element> ones{unit(2), unit(2)};
  CHECK(sigma(1, sym, ones) == unit(2));

  std::vector<Element> args{basis(2, F("[]")), basis(2, F("[1:[]]"))};
  const Poly expected = Poly::variable(1, 1) * Poly::variable(1, 2).pow(2);
  CHECK(sigma(1, sym, args) == basis(2, F("[]*[1:[]]"), expected));

  std::vector<Element> single{basis(1, F("[]"))};
  CHECK(sigma(2, QSpec::parse("1,0", 1), single).is_zero());
  CHECK_THROWS_AS(sigma(1, sym, single), ColourError);
}

TEST_CASE("grade examples") {
  CHECK(grade(unit(1), 0) == unit(1));
  const Element x = basis(1, F("[]*[]")) + basis(1, F("[1:[]]"));
  CHECK(grade(x, 2) == x);
  CHECK(grade(basis(1, F("[]")), 3).is_zero());
}

TEST_CASE("element algebra: commutative monoid with multiplicative grading") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Element a = random_element(rng, 2, 2);
    const Element b = random_element(rng, 2, 2);
    const Element c = random_element(rng, 2, 2);
    CHECK(product(a, b) == product(b, a));
    CHECK(product(product(a, b), c) == product(a, product(b, c)));
    CHECK(product(a, unit(2)) == a);
    Element sum(2);
    for (std::size_t d = 0; d <= 4; ++d) {
      Element expected(2);
      for (std::size_t k = 0; k <= d; ++k) expected += product(grade(a, k), grade(b, d - k));
      CHECK(grade(product(a, b), d) == expected);
      sum += grade(a, d);
    }
    CHECK(sum == a);
  }
}

TEST_CASE("zero coefficients are pruned") {
  Element x = basis(1, F("[]"), Poly(2L));
  x.add(F("[]"), Poly(-2L));
  CHECK(x.is_zero());
  CHECK(x == Element(1));
}

TEST_CASE("tensor helpers") {
  const Element a = basis(1, F("[]"));
  const Element b = basis(1, F("[1:[]]"), Poly(2L));
  const TensorElement t = tensor(a, b);
  CHECK(t.coefficient({F("[]"), F("[1:[]]")}) == Poly(2L));
  CHECK(swap(swap(t)) == t);
  CHECK(multiply_legs(t) == product(a, b));
}
