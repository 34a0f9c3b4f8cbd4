#pragma once

#include "uqc/cartan.hpp"
#include "uqc/freealg.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace uqc {

/// Parse an element of one Borel half.
///
/// Grammar (whitespace is insignificant between tokens):
///   element := ["-"] term (("+" | "-") term)*
///   term    := coeff | [coeff "*"] factor (["*"] factor)*
///   factor  := "e1" | "e2" | "f1" | "f2" | "k(" int "," int ")"
///   coeff   := any QRat expression (parenthesise sums)
/// The side is taken from the generators; an element with no generators
/// gets `default_side`. Mixing e's and f's is a parse error. Factors are
/// multiplied with borel_mul, so `e2 k(0,2) e1` is normal-ordered.
BorelElem parse_element(std::string_view text, Side default_side = Side::plus);

/// `a,b` or `(a,b)`.
Weight parse_weight(std::string_view text);

/// Generator word such as `e2 e2 e1`, `f1f2`, `221` or the empty string.
/// When the text names generators, their side must match `expected` if given.
Word parse_word(std::string_view text, std::optional<Side> expected = std::nullopt);

} // namespace uqc
