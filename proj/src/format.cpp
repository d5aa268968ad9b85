#include "treehopf/format.hpp"

#include "cursor.hpp"
#include "planar_parse.hpp"
#include "poly_parse.hpp"
#include "prelie_parse.hpp"
#include "tree_parse.hpp"

#include <functional>
#include <optional>

namespace treehopf {

namespace {

constexpr std::string_view kTensorSign = "⊗";

// `key` empty means the unit term.
std::string format_terms(const std::vector<std::pair<std::string, Poly>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [key, c] = terms[i];
    bool negative = false;
    std::string coef;
    if (c.term_count() == 1) {
      const auto& [m, r] = *c.terms().begin();
      negative = r < 0;
      const Poly magnitude(negative ? Rational(-r) : r, m);
      if (!(magnitude == Poly(1L)) || key.empty()) coef = magnitude.to_string();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    std::string body = coef;
    if (!key.empty()) body += (coef.empty() ? "" : " ") + key;
    if (i == 0)
      out += (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

template <class Key, class Print>
std::string format_combination(const Combination<Key>& a, Print print) {
  std::vector<std::pair<std::string, Poly>> terms;
  for (const auto& [k, c] : a) terms.emplace_back(print(k), c);
  return format_terms(terms);
}

std::string forest_key(const Forest& f) { return f.empty() ? "" : f.to_string(); }
std::string word_key(const PlanarWord& w) { return w.empty() ? "" : w.to_string(); }

// Returns the key, or nullopt if the cursor is not at the start of one.
template <class Key>
using KeyParser = std::function<std::optional<Key>(detail::Cursor&)>;

template <class Key>
Combination<Key> parse_combination(std::string_view text, int n, const KeyParser<Key>& key,
                                   const std::optional<Key>& unit_key) {
  detail::Cursor cur(text);
  cur.skip_space();
  Combination<Key> out(n);
  if (cur.peek() == '0' && !std::isdigit(static_cast<unsigned char>(cur.peek(1))) && cur.peek(1) != '/') {
    cur.advance();
    cur.skip_space();
    if (!cur.done()) cur.fail("trailing input after 0");
    return out;
  }
  bool first = true;
  while (true) {
    bool negative = false;
    if (first) {
      negative = cur.accept('-');
    } else {
      if (cur.accept('-'))
        negative = true;
      else if (!cur.accept('+'))
        cur.fail("expected '+' or '-'");
    }
    cur.skip_space();
    first = false;

    Poly coef(1L);
    std::optional<Key> k = key(cur);
    if (!k) {
      coef = detail::parse_product(cur);
      const std::size_t after = cur.position();
      cur.skip_space();
      k = key(cur);
      if (!k) {
        cur.reset(after);
        if (!unit_key) cur.fail("expected a basis element after the coefficient");
        k = unit_key;
      }
    }
    out.add(*k, negative ? -coef : coef);
    cur.skip_space();
    if (cur.done()) break;
  }
  return out;
}

std::optional<Forest> forest_at(detail::Cursor& cur) {
  if (!detail::starts_forest(cur)) return std::nullopt;
  return detail::parse_forest(cur);
}

std::optional<PlanarWord> word_at(detail::Cursor& cur) {
  if (!detail::starts_forest(cur)) return std::nullopt;
  return detail::parse_planar_word(cur);
}

template <class Leg, class LegParser>
std::optional<std::pair<Leg, Leg>> pair_at(detail::Cursor& cur, LegParser leg) {
  std::optional<Leg> left = leg(cur);
  if (!left) return std::nullopt;
  cur.skip_space();
  if (!cur.accept(kTensorSign)) cur.fail("expected '⊗'");
  cur.skip_space();
  std::optional<Leg> right = leg(cur);
  if (!right) cur.fail("expected the right tensor leg");
  return std::pair<Leg, Leg>{*left, *right};
}

bool starts_labelled(const detail::Cursor& cur) {
  if (cur.peek() != '(') return false;
  std::size_t k = 1;
  if (!std::isdigit(static_cast<unsigned char>(cur.peek(k)))) return false;
  while (std::isdigit(static_cast<unsigned char>(cur.peek(k)))) ++k;
  return cur.peek(k) == ')' && cur.peek(k + 1) == '[';
}

std::optional<LabelledTree> labelled_at(detail::Cursor& cur) {
  if (!starts_labelled(cur)) return std::nullopt;
  return detail::parse_labelled_tree(cur);
}

std::string coef_string(const Poly& c) { return c.to_string(); }

} // namespace

// ---------------------------------------------------------------------------
// Text

std::string to_text(const Element& a) { return format_combination(a, forest_key); }

std::string to_text(const TensorElement& a) {
  return format_combination(a, [](const ForestPair& p) {
    return p.first.to_string() + " " + std::string(kTensorSign) + " " + p.second.to_string();
  });
}

std::string to_text(const DualElement& a) {
  return format_combination(a, [](const Tree& t) { return t.code(); });
}

std::string to_text(const PreLieElement& a) {
  return format_combination(a, [](const LabelledTree& t) { return t.code(); });
}

std::string to_text(const PlanarElement& a) { return format_combination(a, word_key); }

std::string to_text(const PlanarTensor& a) {
  return format_combination(a, [](const std::pair<PlanarWord, PlanarWord>& p) {
    return p.first.to_string() + " " + std::string(kTensorSign) + " " + p.second.to_string();
  });
}

std::string to_text(const PlanarDualElement& a) {
  return format_combination(a, [](const PlanarTree& t) { return t.code(); });
}

Element parse_element(std::string_view text, int n) {
  return parse_combination<Forest>(text, n, forest_at, Forest());
}

TensorElement parse_tensor(std::string_view text, int n) {
  return parse_combination<ForestPair>(
      text, n, [](detail::Cursor& cur) { return pair_at<Forest>(cur, forest_at); }, std::nullopt);
}

DualElement parse_dual(std::string_view text, int n) {
  return parse_combination<Tree>(
      text, n,
      [](detail::Cursor& cur) -> std::optional<Tree> {
        if (cur.peek() != '[') return std::nullopt;
        return detail::parse_tree(cur);
      },
      std::nullopt);
}

PreLieElement parse_prelie(std::string_view text, int n) {
  return parse_combination<LabelledTree>(text, n, labelled_at, std::nullopt);
}

PlanarElement parse_planar_element(std::string_view text, int n) {
  return parse_combination<PlanarWord>(text, n, word_at, PlanarWord());
}

PlanarTensor parse_planar_tensor(std::string_view text, int n) {
  return parse_combination<std::pair<PlanarWord, PlanarWord>>(
      text, n, [](detail::Cursor& cur) { return pair_at<PlanarWord>(cur, word_at); }, std::nullopt);
}

PlanarDualElement parse_planar_dual(std::string_view text, int n) {
  return parse_combination<PlanarTree>(
      text, n,
      [](detail::Cursor& cur) -> std::optional<PlanarTree> {
        if (cur.peek() != '[') return std::nullopt;
        return detail::parse_planar_tree(cur);
      },
      std::nullopt);
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const Element& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [f, c] : a) out.push_back({{"forest", f.to_string()}, {"coef", coef_string(c)}});
  return out;
}

nlohmann::json to_json(const TensorElement& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [p, c] : a)
    out.push_back({{"left", p.first.to_string()}, {"right", p.second.to_string()}, {"coef", coef_string(c)}});
  return out;
}

nlohmann::json to_json(const DualElement& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [t, c] : a) out.push_back({{"tree", t.code()}, {"coef", coef_string(c)}});
  return out;
}

nlohmann::json to_json(const PreLieElement& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [t, c] : a) out.push_back({{"tree", t.code()}, {"coef", coef_string(c)}});
  return out;
}

nlohmann::json to_json(const PlanarElement& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : a) out.push_back({{"word", w.to_string()}, {"coef", coef_string(c)}});
  return out;
}

nlohmann::json to_json(const PlanarTensor& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [p, c] : a)
    out.push_back({{"left", p.first.to_string()}, {"right", p.second.to_string()}, {"coef", coef_string(c)}});
  return out;
}

nlohmann::json to_json(const PlanarDualElement& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [t, c] : a) out.push_back({{"tree", t.code()}, {"coef", coef_string(c)}});
  return out;
}

Element element_from_json(const nlohmann::json& j, int n) {
  Element out(n);
  for (const auto& term : j)
    out.add(Forest::parse(term.at("forest").get<std::string>()), Poly::parse(term.at("coef").get<std::string>()));
  return out;
}

TensorElement tensor_from_json(const nlohmann::json& j, int n) {
  TensorElement out(n);
  for (const auto& term : j)
    out.add({Forest::parse(term.at("left").get<std::string>()), Forest::parse(term.at("right").get<std::string>())},
            Poly::parse(term.at("coef").get<std::string>()));
  return out;
}

} // namespace treehopf
