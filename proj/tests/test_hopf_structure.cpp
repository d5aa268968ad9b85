#include "treehopf/hopf.hpp"
#include "treehopf/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace treehopf;

namespace {

Forest F(const char* s) { return Forest::parse(s); }
Element E(int n, const char* s, const Poly& c = Poly(1L)) { return basis(n, F(s), c); }
Poly q(int side, Colour j) { return Poly::variable(side, j); }

TensorElement pair_term(int n, const char* l, const char* r, const Poly& c = Poly(1L)) {
  return TensorElement(n, {F(l), F(r)}, c);
}

Element convolve_s_id(const TensorElement& delta, const HopfContext& ctx) {
  Element out(ctx.n);
  for (const auto& [p, c] : delta)
    out += c * product(antipode_recursive(basis(ctx.n, p.first), ctx), basis(ctx.n, p.second));
  return out;
}

Element convolve_id_s(const TensorElement& delta, const HopfContext& ctx) {
  Element out(ctx.n);
  for (const auto& [p, c] : delta)
    out += c * product(basis(ctx.n, p.first), antipode_recursive(basis(ctx.n, p.second), ctx));
  return out;
}

Element basis_of(int n, const Tree& t) { return basis(n, Forest(t)); }

} // namespace

TEST_CASE("q_coeff examples") {
  const QSpec sym = QSpec::symbolic(2);
  for (Colour j = 1; j <= 2; ++j) {
    const ForestLayout edge(F(j == 1 ? "[1:[]]" : "[2:[]]"));
    CHECK(q_coeff(edge.shape(), 0b00, sym) == Poly(1L));
    CHECK(q_coeff(edge.shape(), 0b11, sym) == Poly(1L));
    CHECK(q_coeff(edge.shape(), 0b10, sym) == q(1, j));
    CHECK(q_coeff(edge.shape(), 0b01, sym) == q(2, j));
  }
  const ForestLayout chain(F("[1:[1:[]]]"));
  CHECK(q_coeff(chain.shape(), 0b100, QSpec::symbolic(1)) == q(1, 1).pow(2));
}

TEST_CASE("coproduct examples") {
  const HopfContext ctx(QSpec::symbolic(2));
  CHECK(coproduct(unit(2), ctx) == pair_term(2, "1", "1"));
  CHECK(coproduct(E(2, "[]"), ctx) == pair_term(2, "[]", "1") + pair_term(2, "1", "[]"));
  for (Colour j = 1; j <= 2; ++j) {
    const char* t = j == 1 ? "[1:[]]" : "[2:[]]";
    const TensorElement expected =
        pair_term(2, t, "1") + pair_term(2, "1", t) + pair_term(2, "[]", "[]", q(1, j) + q(2, j));
    CHECK(coproduct(E(2, t), ctx) == expected);
    CHECK(coproduct_inductive(E(2, t), ctx) == expected);
  }
  CHECK(coproduct(Element(2), ctx).is_zero());
}

TEST_CASE("coproduct of the 3-chain") {
  const HopfContext ctx(QSpec::symbolic(1));
  const TensorElement d = coproduct(E(1, "[1:[1:[]]]"), ctx);
  const Poly q11 = q(1, 1), q21 = q(2, 1);
  CHECK(d.coefficient({F("[1:[]]"), F("[]")}) == q11 * q11 + q11 * q21 + q21 * q21);
  CHECK(d.coefficient({F("[]"), F("[1:[]]")}) == q11 * q11 + q11 * q21 + q21 * q21);
  // every two-vertex subset of a chain is itself a chain
  CHECK(d.coefficient({F("[]*[]"), F("[]")}).is_zero());
  CHECK(d.size() == 4);
}

TEST_CASE("antipode examples") {
  const HopfContext ctx(QSpec::symbolic(2));
  CHECK(antipode_recursive(unit(2), ctx) == unit(2));
  CHECK(antipode_recursive(E(2, "[]"), ctx) == -E(2, "[]"));
  CHECK(antipode_partitions(E(2, "[]"), ctx) == -E(2, "[]"));
  for (Colour j = 1; j <= 2; ++j) {
    const char* t = j == 1 ? "[1:[]]" : "[2:[]]";
    const Element expected = -E(2, t) + E(2, "[]*[]", q(1, j) + q(2, j));
    CHECK(antipode_recursive(E(2, t), ctx) == expected);
    CHECK(antipode_partitions(E(2, t), ctx) == expected);
  }
  const HopfContext ck(QSpec::connes_kreimer(1));
  CHECK(antipode_partitions(E(1, "[1:[1:[]]]"), ck) == antipode_recursive(E(1, "[1:[1:[]]]"), ck));
  CHECK(antipode_recursive(Element(2), ctx).is_zero());
}

TEST_CASE("closed formula equals the inductive construction") {
  for (auto [n, d] : {std::pair{1, 5}, std::pair{2, 4}}) {
    const HopfContext ctx(QSpec::symbolic(n));
    for (const auto& f : forests_up_to(n, d)) {
      INFO(f.to_string());
      CHECK(coproduct(f, ctx) == coproduct_inductive(basis(n, f), ctx));
    }
  }
}

TEST_CASE("recursive and partition antipodes agree") {
  for (auto [n, d] : {std::pair{1, 5}, std::pair{2, 4}}) {
    const HopfContext ctx(QSpec::symbolic(n));
    for (const auto& f : forests_up_to(n, d)) {
      INFO(f.to_string());
      CHECK(antipode_recursive(basis(n, f), ctx) == antipode_partitions(basis(n, f), ctx));
    }
  }
}

TEST_CASE("antipode is the convolution inverse of the identity") {
  for (auto [n, d] : {std::pair{1, 4}, std::pair{2, 3}}) {
    const HopfContext ctx(QSpec::symbolic(n));
    for (const auto& f : forests_up_to(n, d)) {
      INFO(f.to_string());
      const TensorElement delta = coproduct(f, ctx);
      const Element expected = f.empty() ? unit(n) : Element(n);
      CHECK(convolve_s_id(delta, ctx) == expected);
      CHECK(convolve_id_s(delta, ctx) == expected);
    }
  }
}

TEST_CASE("coproduct preserves degree") {
  const HopfContext ctx(QSpec::symbolic(2));
  for (const auto& f : forests_up_to(2, 4))
    for (const auto& [p, c] : coproduct(f, ctx))
      CHECK(p.first.vertex_count() + p.second.vertex_count() == f.vertex_count());
}

TEST_CASE("Connes-Kreimer point matches admissible cuts") {
  const HopfContext ctx(QSpec::connes_kreimer(1));
  CHECK(ck_coproduct_oracle(E(1, "[1:[]]")) ==
        pair_term(1, "[1:[]]", "1") + pair_term(1, "1", "[1:[]]") + pair_term(1, "[]", "[]"));
  for (const auto& f : forests_up_to(1, 5)) {
    INFO(f.to_string());
    CHECK(coproduct(f, ctx) == ck_coproduct_oracle(basis(1, f)));
  }
  CHECK(coproduct(E(1, "[1:[1:[]]]"), ctx).coefficient({F("[]"), F("[1:[]]")}) == Poly(1L));
}

TEST_CASE("coproduct is cocommutative when q1j = q2j") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Rational> values;
    for (int j = 0; j < 2; ++j) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      values.push_back(r);
    }
    const HopfContext ctx(QSpec::constant(2, {values[0], values[1], values[0], values[1]}));
    for (const auto& f : forests_up_to(2, 3)) {
      const TensorElement d = coproduct(f, ctx);
      CHECK(swap(d) == d);
    }
  }
  const HopfContext asym(QSpec::symbolic(1));
  const TensorElement d = coproduct(E(1, "[1:[],1:[]]"), asym);
  CHECK(d.coefficient({F("[]*[]"), F("[]")}) == q(1, 1).pow(2));
  CHECK(d.coefficient({F("[]"), F("[]*[]")}) == q(2, 1).pow(2));
  CHECK_FALSE(swap(d) == d);
}

TEST_CASE("simplicial examples") {
  for (int n = 1; n <= 3; ++n) CHECK(simplicial_d(0, E(n, "[]")) == E(n - 1, "[]"));
  CHECK(simplicial_d(1, E(2, "[1:[],2:[]]")) == E(1, "[1:[],1:[]]"));
  CHECK(simplicial_d(0, E(1, "[1:[]]")) == E(0, "[]*[]"));
  CHECK(simplicial_s(0, E(1, "[]")) == E(2, "[]"));
  CHECK(simplicial_s(0, E(1, "[1:[]]")) == E(2, "[2:[]]"));
  CHECK(simplicial_s(1, E(1, "[1:[]]")) == E(2, "[1:[]]"));
  CHECK_THROWS_AS(simplicial_d(3, E(2, "[]")), std::out_of_range);
  CHECK_THROWS_AS(simplicial_s(-1, E(2, "[]")), std::out_of_range);
  CHECK_THROWS_AS(simplicial_d(0, unit(0)), ColourError);
}

TEST_CASE("simplicial identities") {
  for (int n = 0; n <= 3; ++n) {
    for (std::size_t v = 1; v <= 4; ++v) {
      for (const auto& t : enumerate_trees(n, v)) {
        const Element x = basis_of(n, t);
        INFO("n=" << n << " t=" << t.code());
        if (n >= 2)
          for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i)
              CHECK(simplicial_d(i, simplicial_d(j, x)) == simplicial_d(j - 1, simplicial_d(i, x)));
        for (int j = 0; j <= n; ++j) {
          const Element sj = simplicial_s(j, x);
          CHECK(simplicial_d(j, sj) == x);
          CHECK(simplicial_d(j + 1, sj) == x);
          for (int i = 0; i < j; ++i)
            if (n >= 1) CHECK(simplicial_d(i, sj) == simplicial_s(j - 1, simplicial_d(i, x)));
          for (int i = j + 2; i <= n + 1; ++i)
            CHECK(simplicial_d(i, sj) == simplicial_s(j, simplicial_d(i - 1, x)));
          for (int i = 0; i <= j; ++i)
            CHECK(simplicial_s(i, sj) == simplicial_s(j + 1, simplicial_s(i, x)));
        }
      }
    }
  }
}

TEST_CASE("verification suites pass for the family") {
  const VerificationReport one = verify_bialgebra(HopfContext(QSpec::symbolic(1)), 4);
  CHECK_MESSAGE(one.passed(), one.to_string());
  CHECK(one.find("coassociativity") != nullptr);
  CHECK(one.find("specialization") != nullptr);
  const VerificationReport two = verify_bialgebra(HopfContext(QSpec::symbolic(2)), 3);
  CHECK_MESSAGE(two.passed(), two.to_string());
  const VerificationReport ck = verify_bialgebra(HopfContext(QSpec::connes_kreimer(1)), 4);
  CHECK(ck.passed());
  CHECK(ck.find("specialization") == nullptr);
}

TEST_CASE("verification catches corrupted coproducts") {
  const HopfContext ctx(QSpec::symbolic(1));

  // Every subset weighted 1: this is the q = 1 member, so only the defining square breaks.
  const CoproductFn unweighted = [&](const Forest& f) {
    TensorElement out(ctx.n);
    for (const Subforest& s : subforests(f)) out.add({s.induced(), s.complement().induced()}, Poly(1L));
    return out;
  };
  const VerificationReport a = verify_bialgebra(ctx, 3, unweighted);
  CHECK_FALSE(a.passed());
  CHECK(a.find("coassociativity")->passed());
  CHECK_FALSE(a.find("lambda-square")->passed());

  // Exponents capped at 1 break coassociativity.
  const CoproductFn capped = [&](const Forest& f) {
    TensorElement out(ctx.n);
    for (const Subforest& s : subforests(f)) {
      auto e = q_exponents(s.layout().shape(), s.mask());
      for (auto& x : e) x = std::min<std::uint16_t>(x, 1);
      out.add({s.induced(), s.complement().induced()}, ctx.q.evaluate(e));
    }
    return out;
  };
  const VerificationReport b = verify_bialgebra(ctx, 3, capped);
  CHECK_FALSE(b.find("coassociativity")->passed());
  CHECK(b.find("coassociativity")->counterexample->size() > 0);
}
