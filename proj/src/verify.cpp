#include "treehopf/verify.hpp"

#include <map>
#include <random>
#include <sstream>

namespace treehopf {

namespace {

using MultiTensor = Combination<std::vector<Forest>>;

std::string tuple_string(const std::vector<Forest>& fs) {
  std::string s = "(";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += ", ";
    s += fs[i].to_string();
  }
  return s + ")";
}

class MemoCoproduct {
public:
  explicit MemoCoproduct(CoproductFn delta) : delta_(std::move(delta)) {}

  const TensorElement& operator()(const Forest& f) {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(f, delta_(f)).first->second;
  }

  TensorElement apply(const Element& a) {
    TensorElement out(a.colours());
    for (const auto& [f, c] : a) out += c * (*this)(f);
    return out;
  }

  CoproductFn as_fn() {
    return [this](const Forest& f) { return (*this)(f); };
  }

private:
  CoproductFn delta_;
  std::map<Forest, TensorElement> memo_;
};

class Checker {
public:
  Checker(const HopfContext& ctx, std::size_t max_degree, CoproductFn delta)
      : ctx_(ctx), max_degree_(max_degree), delta_(std::move(delta)),
        forests_(forests_up_to(ctx.n, max_degree)) {}

  VerificationReport run() {
    VerificationReport report;
    report.checks.push_back(coassociativity());
    report.checks.push_back(counit());
    report.checks.push_back(grading());
    report.checks.push_back(multiplicativity());
    report.checks.push_back(sigma_counit());
    report.checks.push_back(sigma_coproduct(1));
    report.checks.push_back(sigma_coproduct(2));
    report.checks.push_back(defining_square());
    report.checks.push_back(antipode());
    return report;
  }

private:
  CheckResult coassociativity() {
    CheckResult r{"coassociativity", 0, std::nullopt};
    for (const auto& f : forests_) {
      ++r.cases;
      MultiTensor left(ctx_.n);
      MultiTensor right(ctx_.n);
      for (const auto& [lr, c] : delta_(f)) {
        for (const auto& [ab, d] : delta_(lr.first)) left.add({ab.first, ab.second, lr.second}, c * d);
        for (const auto& [ab, d] : delta_(lr.second)) right.add({lr.first, ab.first, ab.second}, c * d);
      }
      if (!(left == right)) return fail(r, "forest " + f.to_string());
    }
    return r;
  }

  CheckResult counit() {
    CheckResult r{"counit", 0, std::nullopt};
    for (const auto& f : forests_) {
      ++r.cases;
      Element left(ctx_.n);
      Element right(ctx_.n);
      for (const auto& [lr, c] : delta_(f)) {
        if (lr.first.empty()) left.add(lr.second, c);
        if (lr.second.empty()) right.add(lr.first, c);
      }
      const Element expected = basis(ctx_.n, f);
      if (!(left == expected) || !(right == expected)) return fail(r, "forest " + f.to_string());
    }
    return r;
  }

  CheckResult grading() {
    CheckResult r{"grading", 0, std::nullopt};
    for (const auto& f : forests_) {
      ++r.cases;
      for (const auto& [lr, c] : delta_(f))
        if (lr.first.vertex_count() + lr.second.vertex_count() != f.vertex_count())
          return fail(r, "forest " + f.to_string());
    }
    return r;
  }

  CheckResult multiplicativity() {
    CheckResult r{"multiplicativity", 1, std::nullopt};
    if (!(delta_(Forest()) == TensorElement(ctx_.n, {Forest(), Forest()}))) return fail(r, "unit");
    for (const auto& a : forests_) {
      if (a.empty()) continue;
      for (const auto& b : forests_) {
        if (b.empty() || a.vertex_count() + b.vertex_count() > max_degree_) continue;
        ++r.cases;
        if (!(delta_(a * b) == product(delta_(a), delta_(b))))
          return fail(r, "forests " + a.to_string() + ", " + b.to_string());
      }
    }
    return r;
  }

  CheckResult sigma_counit() {
    CheckResult r{"sigma-counit", 0, std::nullopt};
    for (const auto& tuple : forest_tuples(ctx_.n, max_degree_)) {
      for (int side = 1; side <= 2; ++side) {
        ++r.cases;
        std::vector<Element> args;
        Poly expected(1L);
        for (const auto& f : tuple) {
          args.push_back(basis(ctx_.n, f));
          expected *= treehopf::counit(args.back());
        }
        if (!(treehopf::counit(sigma(side, ctx_.q, args)) == expected))
          return fail(r, "sigma_" + std::to_string(side) + tuple_string(tuple));
      }
    }
    return r;
  }

  CheckResult sigma_coproduct(int side) {
    CheckResult r{"sigma" + std::to_string(side) + "-coproduct", 0, std::nullopt};
    for (const auto& tuple : forest_tuples(ctx_.n, max_degree_)) {
      ++r.cases;
      std::vector<Element> args;
      for (const auto& f : tuple) args.push_back(basis(ctx_.n, f));
      const TensorElement lhs = delta_.apply(sigma(side, ctx_.q, args));
      std::vector<TensorElement> deltas;
      for (const auto& f : tuple) deltas.push_back(delta_(f));
      if (!(lhs == sigma_tensor(side, deltas))) return fail(r, "sigma_" + std::to_string(side) + tuple_string(tuple));
    }
    return r;
  }

  // (sigma_i (x) sigma_i) o tau applied to Delta(f_1) (x) ... (x) Delta(f_n).
  TensorElement sigma_tensor(int side, const std::vector<TensorElement>& deltas) {
    const int n = ctx_.n;
    TensorElement out(n);
    if (n == 0) return TensorElement(n, {Forest(), Forest()});
    std::vector<TensorElement::const_iterator> pos;
    for (const auto& d : deltas) {
      if (d.is_zero()) return out;
      pos.push_back(d.begin());
    }
    for (;;) {
      Poly c(1L);
      Forest left;
      Forest right;
      for (int j = 0; j < n; ++j) {
        const auto& [lr, cj] = *pos[static_cast<std::size_t>(j)];
        const Poly q = ctx_.q.value(side, j + 1);
        c *= cj * q.pow(static_cast<unsigned>(lr.first.vertex_count())) *
             q.pow(static_cast<unsigned>(lr.second.vertex_count()));
        left = left * lr.first;
        right = right * lr.second;
      }
      out.add({left, right}, c);
      int j = n - 1;
      while (j >= 0) {
        auto& it = pos[static_cast<std::size_t>(j)];
        if (++it != deltas[static_cast<std::size_t>(j)].end()) break;
        it = deltas[static_cast<std::size_t>(j)].begin();
        --j;
      }
      if (j < 0) break;
    }
    return out;
  }

  CheckResult defining_square() {
    CheckResult r{"lambda-square", 0, std::nullopt};
    if (max_degree_ == 0) return r;
    for (const auto& tuple : forest_tuples(ctx_.n, max_degree_ - 1)) {
      ++r.cases;
      std::vector<TensorElement> deltas;
      for (const auto& f : tuple) deltas.push_back(delta_(f));
      if (!(delta_(Forest(lambda(tuple))) == lambda_sigma(ctx_, deltas)))
        return fail(r, "lambda" + tuple_string(tuple));
    }
    return r;
  }

  CheckResult antipode() {
    CheckResult r{"antipode", 0, std::nullopt};
    const CoproductFn fn = delta_.as_fn();
    std::map<Forest, Element> s_memo;
    auto s_of = [&](const Forest& f) -> const Element& {
      auto it = s_memo.find(f);
      if (it != s_memo.end()) return it->second;
      return s_memo.emplace(f, antipode_recursive(basis(ctx_.n, f), fn)).first->second;
    };
    for (const auto& f : forests_) {
      ++r.cases;
      Element left(ctx_.n);
      Element right(ctx_.n);
      for (const auto& [lr, c] : delta_(f)) {
        left += c * product(s_of(lr.first), basis(ctx_.n, lr.second));
        right += c * product(basis(ctx_.n, lr.first), s_of(lr.second));
      }
      const Element expected = f.empty() ? unit(ctx_.n) : Element(ctx_.n);
      if (!(left == expected)) return fail(r, "S * id on " + f.to_string());
      if (!(right == expected)) return fail(r, "id * S on " + f.to_string());
    }
    return r;
  }

  static CheckResult fail(CheckResult r, std::string why) {
    r.counterexample = std::move(why);
    return r;
  }

  const HopfContext& ctx_;
  std::size_t max_degree_;
  MemoCoproduct delta_;
  std::vector<Forest> forests_;
};

CheckResult specialization(const HopfContext& ctx, std::size_t max_degree, std::uint64_t seed) {
  CheckResult r{"specialization", 0, std::nullopt};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::map<std::size_t, Rational> values;
  for (int side = 1; side <= 2; ++side)
    for (Colour j = 1; j <= ctx.n; ++j)
      if (!ctx.q.entry(side, j)) {
        Rational v(num(rng), den(rng));
        v.canonicalize();
        values[variable_index(side, j)] = v;
      }
  const HopfContext special(ctx.q.specialize(values));
  for (const auto& f : forests_up_to(ctx.n, max_degree)) {
    ++r.cases;
    const Element x = basis(ctx.n, f);
    if (!(substitute(coproduct(x, ctx), values) == coproduct(x, special))) {
      r.counterexample = "coproduct of " + f.to_string();
      return r;
    }
    if (!(substitute(antipode_recursive(x, ctx), values) == antipode_recursive(x, special))) {
      r.counterexample = "antipode of " + f.to_string();
      return r;
    }
  }
  return r;
}

} // namespace

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::to_string() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    if (c.passed())
      out << "PASS " << c.name << " (" << c.cases << " cases)\n";
    else
      out << "FAIL " << c.name << ": " << *c.counterexample << "\n";
  }
  return out.str();
}

std::vector<Forest> forests_up_to(int n, std::size_t max_degree) {
  std::vector<Forest> out;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    auto level = enumerate_forests(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<std::vector<Forest>> forest_tuples(int n, std::size_t max_degree) {
  std::vector<std::vector<Forest>> out{{}};
  const std::vector<Forest> all = forests_up_to(n, max_degree);
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<Forest>> next;
    for (const auto& prefix : out) {
      std::size_t used = 0;
      for (const auto& f : prefix) used += f.vertex_count();
      for (const auto& f : all) {
        if (used + f.vertex_count() > max_degree) continue;
        auto grown = prefix;
        grown.push_back(f);
        next.push_back(std::move(grown));
      }
    }
    out = std::move(next);
  }
  return out;
}

VerificationReport verify_bialgebra(const HopfContext& ctx, std::size_t max_degree, const CoproductFn& delta) {
  return Checker(ctx, max_degree, delta).run();
}

VerificationReport verify_bialgebra(const HopfContext& ctx, std::size_t max_degree, std::uint64_t seed) {
  VerificationReport report =
      verify_bialgebra(ctx, max_degree, [&ctx](const Forest& f) { return coproduct(f, ctx); });
  if (ctx.q.has_symbols()) report.checks.push_back(specialization(ctx, max_degree, seed));
  return report;
}

} // namespace treehopf
