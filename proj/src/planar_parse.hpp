#pragma once

#include "cursor.hpp"
#include "treehopf/planar.hpp"

namespace treehopf::detail {

PlanarTree parse_planar_tree(Cursor& cur);
// `1` or tree (`*` tree)*, order kept.
PlanarWord parse_planar_word(Cursor& cur);

} // namespace treehopf::detail
