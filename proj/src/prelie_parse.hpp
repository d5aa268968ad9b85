#pragma once

#include "cursor.hpp"
#include "treehopf/prelie.hpp"

namespace treehopf::detail {

LabelledTree parse_labelled_tree(Cursor& cur);

} // namespace treehopf::detail
