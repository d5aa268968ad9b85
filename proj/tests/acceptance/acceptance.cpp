// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include "treehopf/planar.hpp"
#include "treehopf/prelie.hpp"
#include "treehopf/verify.hpp"

#include "oracles/brute_force.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

using namespace treehopf;

namespace {

// nullopt on success, otherwise a description of the first failure.
using Outcome = std::optional<std::string>;

std::vector<Tree> trees_up_to(int n, std::size_t d) {
  std::vector<Tree> out;
  for (std::size_t v = 1; v <= d; ++v)
    for (const auto& t : enumerate_trees(n, v)) out.push_back(t);
  return out;
}

std::vector<std::vector<Colour>> colour_subsets(int n) {
  std::vector<std::vector<Colour>> out;
  for (unsigned m = 0; m < (1u << n); ++m) {
    std::vector<Colour> p;
    for (Colour j = 1; j <= n; ++j)
      if (m & (1u << (j - 1))) p.push_back(j);
    out.push_back(p);
  }
  return out;
}

std::vector<Colour> all_colours(int n) { return colour_subsets(n).back(); }

Outcome report_failures(const VerificationReport& r, const std::string& label) {
  for (const auto& c : r.checks)
    if (!c.passed()) return label + " " + c.name + ": " + *c.counterexample;
  return std::nullopt;
}

Outcome hopf_axioms() {
  const std::pair<int, std::size_t> ranges[] = {{1, 5}, {2, 4}};
  for (auto [n, d] : ranges) {
    const VerificationReport r = verify_bialgebra(HopfContext(QSpec::symbolic(n)), d);
    for (const char* name : {"coassociativity", "counit", "multiplicativity", "antipode"})
      if (!r.find(name)) return std::string("missing check ") + name;
    if (auto f = report_failures(r, "n=" + std::to_string(n))) return f;
  }
  return std::nullopt;
}

Outcome closed_equals_inductive() {
  const std::pair<int, std::size_t> ranges[] = {{1, 5}, {2, 4}};
  for (auto [n, d] : ranges) {
    const HopfContext ctx(QSpec::symbolic(n));
    for (const auto& f : forests_up_to(n, d))
      if (!(coproduct(f, ctx) == coproduct_inductive(basis(n, f), ctx))) return "forest " + f.to_string();
  }
  return std::nullopt;
}

Outcome antipodes_agree() {
  const std::pair<int, std::size_t> ranges[] = {{1, 5}, {2, 4}};
  for (auto [n, d] : ranges) {
    const HopfContext ctx(QSpec::symbolic(n));
    for (const auto& f : forests_up_to(n, d))
      if (!(antipode_recursive(basis(n, f), ctx) == antipode_partitions(basis(n, f), ctx)))
        return "forest " + f.to_string();
  }
  return std::nullopt;
}

Outcome connes_kreimer() {
  const HopfContext ctx(QSpec::connes_kreimer(1));
  for (const auto& f : forests_up_to(1, 5))
    if (!(coproduct(f, ctx) == ck_coproduct_oracle(basis(1, f)))) return "forest " + f.to_string();
  return std::nullopt;
}

Outcome pre_lie_identity() {
  for (int n = 1; n <= 2; ++n) {
    const auto trees = trees_up_to(n, 4);
    for (const auto& p : colour_subsets(n)) {
      BulletTable table(HopfContext(QSpec::characteristic(n, p)), 6);
      for (const auto& x : trees)
        for (const auto& y : trees)
          for (const auto& z : trees) {
            if (x.vertex_count() + y.vertex_count() + z.vertex_count() > 6) continue;
            const DualElement a(n, x), b(n, y), c(n, z);
            auto m = [&](const DualElement& u, const DualElement& v) { return bullet(u, v, table); };
            if (!(m(m(a, b), c) - m(a, m(b, c)) == m(m(a, c), b) - m(a, m(c, b))))
              return "n=" + std::to_string(n) + " triple " + x.code() + " " + y.code() + " " + z.code();
          }
    }
  }
  return std::nullopt;
}

Outcome rescaling_and_phi() {
  for (int n = 1; n <= 2; ++n) {
    const auto p = all_colours(n);
    BulletTable table(HopfContext(QSpec::characteristic(n, p)), 6);
    const auto trees = trees_up_to(n, 5);
    for (const auto& x : trees)
      for (const auto& y : trees) {
        const std::size_t total = x.vertex_count() + y.vertex_count();
        if (total > 6) continue;
        const DualElement a(n, x), b(n, y);
        if (!(aut_rescale(bullet_prime(a, b, p)) == bullet(aut_rescale(a), aut_rescale(b), table)))
          return "rescaling on " + x.code() + " , " + y.code();
        if (total <= 5 && !(phi(bullet_prime(a, b, p)) == free_bullet(phi(a), phi(b))))
          return "phi on " + x.code() + " , " + y.code();
      }
    std::set<LabelledTree> seen;
    for (const auto& t : trees)
      for (const auto& [l, c] : phi(DualElement(n, t)))
        if (!seen.insert(l).second) return "phi images overlap at " + l.code();
  }
  return std::nullopt;
}

Outcome duality() {
  const HopfContext ctx(QSpec::symbolic(1));
  BulletTable table(ctx, 4);
  for (std::size_t d = 1; d <= 4; ++d)
    for (const auto& w : enumerate_trees(1, d)) {
      const TensorElement delta = coproduct(Forest(w), ctx);
      for (std::size_t k = 1; k < d; ++k)
        for (const auto& t : enumerate_trees(1, d - k))
          for (const auto& s : enumerate_trees(1, k))
            if (!(bullet(DualElement(1, t), DualElement(1, s), table).coefficient(w) ==
                  delta.coefficient({Forest(s), Forest(t)})))
              return "w=" + w.code() + " t=" + t.code() + " s=" + s.code();
    }
  return std::nullopt;
}

Outcome simplicial_identities() {
  for (int n = 0; n <= 3; ++n)
    for (std::size_t v = 1; v <= 4; ++v)
      for (const auto& t : enumerate_trees(n, v)) {
        const Element x = basis(n, Forest(t));
        const std::string where = "n=" + std::to_string(n) + " " + t.code();
        if (n >= 2)
          for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i)
              if (!(simplicial_d(i, simplicial_d(j, x)) == simplicial_d(j - 1, simplicial_d(i, x))))
                return "dd at " + where;
        for (int j = 0; j <= n; ++j) {
          const Element sj = simplicial_s(j, x);
          if (!(simplicial_d(j, sj) == x) || !(simplicial_d(j + 1, sj) == x)) return "ds=id at " + where;
          for (int i = 0; i < j; ++i)
            if (!(simplicial_d(i, sj) == simplicial_s(j - 1, simplicial_d(i, x)))) return "ds (i<j) at " + where;
          for (int i = j + 2; i <= n + 1; ++i)
            if (!(simplicial_d(i, sj) == simplicial_s(j, simplicial_d(i - 1, x)))) return "ds (i>j+1) at " + where;
          for (int i = 0; i <= j; ++i)
            if (!(simplicial_s(i, sj) == simplicial_s(j + 1, simplicial_s(i, x)))) return "ss at " + where;
        }
      }
  return std::nullopt;
}

Outcome enumeration_counts() {
  const std::size_t trees[] = {1, 1, 2, 4, 9, 20, 48, 115};
  for (int m = 1; m <= 8; ++m) {
    const auto got = enumerate_trees(1, static_cast<std::size_t>(m));
    if (got.size() != trees[m - 1]) return "tree count at " + std::to_string(m);
    std::set<std::string> codes;
    for (const auto& t : got) codes.insert(oracle::encode(oracle::parse_bracket(t.code())));
    if (codes != oracle::tree_classes(1, m)) return "tree classes differ from the oracle at " + std::to_string(m);
  }
  const std::size_t planar[] = {1, 1, 2, 5, 14};
  for (int m = 1; m <= 5; ++m) {
    const auto got = enumerate_planar(1, static_cast<std::size_t>(m));
    if (got.size() != planar[m - 1]) return "planar count at " + std::to_string(m);
    std::set<std::string> codes;
    for (const auto& t : got) codes.insert(oracle::encode_planar(oracle::parse_bracket(t.code())));
    if (codes != oracle::planar_classes(1, m)) return "planar classes differ from the oracle at " + std::to_string(m);
  }
  return std::nullopt;
}

Outcome planar_axioms() {
  for (int n = 1; n <= 2; ++n)
    if (auto f = report_failures(verify_planar(HopfContext(QSpec::symbolic(n)), 4), "n=" + std::to_string(n)))
      return f;
  const HopfContext ctx(QSpec::symbolic(1));
  for (std::size_t v = 1; v <= 4; ++v)
    for (const auto& t : enumerate_planar(1, v))
      if (!(forget(planar_coproduct(PlanarWord(t), ctx)) == coproduct(Forest(forget(t)), ctx)))
        return "forgetful map at " + t.code();
  return std::nullopt;
}

} // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"bialgebra and Hopf axioms, symbolic q", hopf_axioms},
      {"closed coproduct equals inductive coproduct", closed_equals_inductive},
      {"recursive and partition antipodes agree", antipodes_agree},
      {"Connes-Kreimer point equals admissible cuts", connes_kreimer},
      {"pre-Lie identity at characteristic q", pre_lie_identity},
      {"rescaling isomorphism and phi embedding", rescaling_and_phi},
      {"duality of bullet with the coproduct", duality},
      {"simplicial identities", simplicial_identities},
      {"enumeration counts against the oracle", enumeration_counts},
      {"planar axioms and forgetful consistency", planar_axioms},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (outcome ? "FAIL" : "PASS") << " criterion " << index << ": " << name << " (" << seconds
         << " s)";
    if (outcome) line << ": " << *outcome;
    std::cout << line.str() << std::endl;
    failures += outcome ? 1 : 0;
    ++index;
  }
  return failures == 0 ? 0 : 1;
}
