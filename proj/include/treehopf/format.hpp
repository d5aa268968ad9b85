#pragma once

#include "treehopf/planar.hpp"
#include "treehopf/prelie.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace treehopf {

// Text form: terms joined by ` + ` / ` - `; a term is `[coef ]key`, the
// coefficient omitted when it is 1 and parenthesized when it has several
// terms. A unit term prints as its coefficient. Tensor keys print as
// `left ⊗ right` with the unit written `1`. The zero element prints as `0`.

std::string to_text(const Element& a);
std::string to_text(const TensorElement& a);
std::string to_text(const DualElement& a);
std::string to_text(const PreLieElement& a);
std::string to_text(const PlanarElement& a);
std::string to_text(const PlanarTensor& a);
std::string to_text(const PlanarDualElement& a);

Element parse_element(std::string_view text, int n);
TensorElement parse_tensor(std::string_view text, int n);
DualElement parse_dual(std::string_view text, int n);
PreLieElement parse_prelie(std::string_view text, int n);
PlanarElement parse_planar_element(std::string_view text, int n);
PlanarTensor parse_planar_tensor(std::string_view text, int n);
PlanarDualElement parse_planar_dual(std::string_view text, int n);

// JSON form: an array of objects, one per term, with the coefficient as a
// polynomial string under "coef" and the key under "forest", "tree", "word",
// or "left"/"right" for tensors.

nlohmann::json to_json(const Element& a);
nlohmann::json to_json(const TensorElement& a);
nlohmann::json to_json(const DualElement& a);
nlohmann::json to_json(const PreLieElement& a);
nlohmann::json to_json(const PlanarElement& a);
nlohmann::json to_json(const PlanarTensor& a);
nlohmann::json to_json(const PlanarDualElement& a);

Element element_from_json(const nlohmann::json& j, int n);
TensorElement tensor_from_json(const nlohmann::json& j, int n);

} // namespace treehopf
