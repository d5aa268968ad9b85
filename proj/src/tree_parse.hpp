#pragma once

#include "cursor.hpp"
#include "treehopf/tree.hpp"

namespace treehopf::detail {

Tree parse_tree(Cursor& cur);
// `1` or tree (`*` tree)*; stops before anything that cannot continue a forest.
Forest parse_forest(Cursor& cur);

inline bool starts_forest(const Cursor& cur) {
  return cur.peek() == '[' || (cur.peek() == '1' && !std::isdigit(static_cast<unsigned char>(cur.peek(1))) &&
                               cur.peek(1) != '/' && cur.peek(1) != '*' && cur.peek(1) != '^');
}

} // namespace treehopf::detail
