#include "treehopf/cli.hpp"

#include "treehopf/errors.hpp"
#include "treehopf/format.hpp"

#include <CLI11.hpp>

#include <optional>

namespace treehopf::cli {

namespace {

struct Invocation {
  int n = 1;
  std::string q = "sym";
  bool planar = false;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_degree = 3;
  std::optional<std::size_t> budget;

  // subcommand inputs
  std::string expr;
  std::string other;
  std::size_t vertices = 1;
  bool count = false;
  bool forests = false;
  std::string method = "recursive";
  bool inductive = false;
  bool prime = false;
  std::string p;
  std::optional<int> face;
  std::optional<int> degeneracy;
};

bool json(const Invocation& inv) { return inv.format == "json"; }

std::size_t budget_or(const Invocation& inv, std::size_t fallback) { return inv.budget.value_or(fallback); }

void check_vertices(std::size_t vertices, std::size_t budget) {
  if (vertices > budget)
    throw BudgetExceeded("input of " + std::to_string(vertices) + " vertices exceeds the budget " +
                         std::to_string(budget));
}

template <class T>
void emit(const Invocation& inv, std::ostream& out, const T& value) {
  if (json(inv))
    out << to_json(value).dump() << "\n";
  else
    out << to_text(value) << "\n";
}

HopfContext context(const Invocation& inv) { return HopfContext(QSpec::parse(inv.q, inv.n)); }

std::vector<Colour> parse_colours(const std::string& text, int n) {
  std::vector<Colour> out;
  if (text.empty()) {
    for (Colour j = 1; j <= n; ++j) out.push_back(j);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("colour list entries must be positive integers", start);
    out.push_back(std::stoi(item));
    start = comma + 1;
  }
  return out;
}

int cmd_enumerate(const Invocation& inv, std::ostream& out) {
  check_vertices(inv.vertices, budget_or(inv, 10));
  std::vector<std::string> items;
  if (inv.planar) {
    if (inv.forests)
      for (const auto& w : enumerate_planar_words(inv.n, inv.vertices)) items.push_back(w.to_string());
    else
      for (const auto& t : enumerate_planar(inv.n, inv.vertices)) items.push_back(t.code());
  } else {
    if (inv.forests)
      for (const auto& f : enumerate_forests(inv.n, inv.vertices)) items.push_back(f.to_string());
    else
      for (const auto& t : enumerate_trees(inv.n, inv.vertices)) items.push_back(t.code());
  }
  if (inv.count) {
    if (json(inv))
      out << nlohmann::json{{"count", items.size()}}.dump() << "\n";
    else
      out << items.size() << "\n";
  } else if (json(inv)) {
    out << nlohmann::json(items).dump() << "\n";
  } else {
    for (const auto& s : items) out << s << "\n";
  }
  return kOk;
}

template <class Combo>
void check_input_size(const Combo& a, std::size_t budget) {
  for (const auto& [k, c] : a) check_vertices(k.vertex_count(), budget);
}

int cmd_coproduct(const Invocation& inv, std::ostream& out) {
  const HopfContext ctx = context(inv);
  if (inv.planar) {
    const PlanarElement a = parse_planar_element(inv.expr, inv.n);
    check_input_size(a, budget_or(inv, 16));
    emit(inv, out, planar_coproduct(a, ctx));
  } else {
    const Element a = parse_element(inv.expr, inv.n);
    check_input_size(a, budget_or(inv, 16));
    emit(inv, out, inv.inductive ? coproduct_inductive(a, ctx) : coproduct(a, ctx));
  }
  return kOk;
}

int cmd_antipode(const Invocation& inv, std::ostream& out) {
  const HopfContext ctx = context(inv);
  if (inv.planar) {
    const PlanarElement a = parse_planar_element(inv.expr, inv.n);
    check_input_size(a, budget_or(inv, 12));
    emit(inv, out, planar_antipode(a, ctx));
  } else {
    const Element a = parse_element(inv.expr, inv.n);
    check_input_size(a, budget_or(inv, 12));
    emit(inv, out, inv.method == "partitions" ? antipode_partitions(a, ctx) : antipode_recursive(a, ctx));
  }
  return kOk;
}

int cmd_products(const Invocation& inv, std::ostream& out, bool bracket) {
  const std::size_t budget = budget_or(inv, kDefaultBulletBudget);
  if (inv.planar) {
    PlanarBulletTable table(context(inv), budget);
    const PlanarDualElement a = parse_planar_dual(inv.expr, inv.n);
    const PlanarDualElement b = parse_planar_dual(inv.other, inv.n);
    emit(inv, out, bracket ? planar_bullet(b, a, table) - planar_bullet(a, b, table) : planar_bullet(a, b, table));
    return kOk;
  }
  const DualElement a = parse_dual(inv.expr, inv.n);
  const DualElement b = parse_dual(inv.other, inv.n);
  if (inv.prime) {
    for (const auto& [t, c] : a)
      for (const auto& [s, d] : b) check_vertices(t.vertex_count() + s.vertex_count(), budget);
    emit(inv, out, bullet_prime(a, b, parse_colours(inv.p, inv.n)));
    return kOk;
  }
  BulletTable table(context(inv), budget);
  emit(inv, out, bracket ? lie_bracket(a, b, table) : bullet(a, b, table));
  return kOk;
}

int cmd_simplicial(const Invocation& inv, std::ostream& out) {
  if (inv.face.has_value() == inv.degeneracy.has_value())
    throw CLI::ValidationError("simplicial", "give exactly one of --face or --degeneracy");
  const Element a = parse_element(inv.expr, inv.n);
  emit(inv, out, inv.face ? simplicial_d(*inv.face, a) : simplicial_s(*inv.degeneracy, a));
  return kOk;
}

int cmd_verify(const Invocation& inv, std::ostream& out) {
  if (inv.budget) check_vertices(inv.max_degree, *inv.budget);
  const HopfContext ctx = context(inv);
  const VerificationReport report =
      inv.planar ? verify_planar(ctx, inv.max_degree, inv.seed) : verify_bialgebra(ctx, inv.max_degree, inv.seed);
  if (json(inv)) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
      nlohmann::json item{{"name", c.name}, {"cases", c.cases}, {"passed", c.passed()}};
      if (c.counterexample) item["counterexample"] = *c.counterexample;
      checks.push_back(item);
    }
    out << nlohmann::json{{"passed", report.passed()}, {"checks", checks}}.dump() << "\n";
  } else {
    out << report.to_string();
  }
  return report.passed() ? kOk : kVerification;
}

int cmd_phi(const Invocation& inv, std::ostream& out) {
  emit(inv, out, phi(parse_dual(inv.expr, inv.n)));
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"Hopf algebras of coloured rooted trees", "treehopf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--n", inv.n, "number of edge colours")->check(CLI::Range(0, 64));
  app.add_option("--q", inv.q, "`sym`, or 2n comma-separated entries q11..q1n,q21..q2n (rational or `sym`)");
  app.add_flag("--planar", inv.planar, "use planar trees and the tensor algebra");
  app.add_option("--format", inv.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", inv.seed, "seed for randomized checks");
  app.add_option("--max-degree", inv.max_degree, "largest degree checked by verify");
  app.add_option("--budget", inv.budget, "largest vertex count a command may enumerate over")
      ->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "list trees (or forests) with a given vertex count");
  enumerate->add_option("--vertices", inv.vertices, "vertex count")->required();
  enumerate->add_flag("--count", inv.count, "print only the number");
  enumerate->add_flag("--forests", inv.forests, "forests (words with --planar) instead of trees");

  auto* coproduct_cmd = app.add_subcommand("coproduct", "coproduct of an element");
  coproduct_cmd->add_option("expr", inv.expr, "element")->required();
  coproduct_cmd->add_flag("--inductive", inv.inductive, "use the recursion through lambda");

  auto* antipode_cmd = app.add_subcommand("antipode", "antipode of an element");
  antipode_cmd->add_option("expr", inv.expr, "element")->required();
  antipode_cmd->add_option("--method", inv.method, "formula")->check(CLI::IsMember({"recursive", "partitions"}));

  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket [a, b] = b.a - a.b of dual elements");
  bracket_cmd->add_option("a", inv.expr, "first dual element")->required();
  bracket_cmd->add_option("b", inv.other, "second dual element")->required();

  auto* bullet_cmd = app.add_subcommand("bullet", "pre-Lie product of dual elements");
  bullet_cmd->add_option("a", inv.expr, "first dual element")->required();
  bullet_cmd->add_option("b", inv.other, "second dual element")->required();
  bullet_cmd->add_flag("--prime", inv.prime, "grafting product instead");
  bullet_cmd->add_option("--p", inv.p, "grafting colours for --prime, comma-separated (default all)");

  auto* simplicial_cmd = app.add_subcommand("simplicial", "face or degeneracy map");
  simplicial_cmd->add_option("expr", inv.expr, "element")->required();
  simplicial_cmd->add_option("--face", inv.face, "face index i in 0..n");
  simplicial_cmd->add_option("--degeneracy", inv.degeneracy, "degeneracy index i in 0..n");

  auto* verify_cmd = app.add_subcommand("verify", "check the Hopf axioms exhaustively");

  auto* phi_cmd = app.add_subcommand("phi", "embed a dual element into the free pre-Lie algebra");
  phi_cmd->add_option("expr", inv.expr, "dual element")->required();

  std::vector<const char*> argv{"treehopf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(inv, out);
    if (coproduct_cmd->parsed()) return cmd_coproduct(inv, out);
    if (antipode_cmd->parsed()) return cmd_antipode(inv, out);
    if (bracket_cmd->parsed()) return cmd_products(inv, out, true);
    if (bullet_cmd->parsed()) return cmd_products(inv, out, false);
    if (simplicial_cmd->parsed()) return cmd_simplicial(inv, out);
    if (verify_cmd->parsed()) return cmd_verify(inv, out);
    if (phi_cmd->parsed()) return cmd_phi(inv, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidStructure& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ColourError& e) {
    err << "colour mismatch: " << e.what() << "\n";
    return kColour;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

} // namespace treehopf::cli
