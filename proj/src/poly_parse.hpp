#pragma once

#include "cursor.hpp"
#include "treehopf/poly.hpp"

namespace treehopf::detail {

// Full polynomial grammar; whitespace allowed between tokens.
Poly parse_poly(Cursor& cur);

// A single product of factors without whitespace, e.g. `-2/3*q11^2*q22` or `(q11 + q21)`.
Poly parse_product(Cursor& cur);

} // namespace treehopf::detail
