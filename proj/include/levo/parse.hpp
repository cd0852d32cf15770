#pragma once

#include <string>

#include "levo/polynomial.hpp"

namespace levo {

// Grammar: sums and differences of products of powers; literals are
// integers, `a/b` divides by a constant, `^` takes a non-negative integer and
// binds tighter than `*` and unary minus.
Polynomial parse_polynomial(const std::string& text, const Ring& ring);

}  // namespace levo
