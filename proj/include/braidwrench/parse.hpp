// Braid-word grammar:
//
//   word   := term*
//   term   := factor ('^' int)?
//   factor := gen | '(' word ')'
//   gen    := 's' uint | 'S' uint        (capital = inverse)
//   int    := '-'? uint
//
// Whitespace separates terms. Powers are expanded and parentheses resolved,
// so the result is a flat letter sequence. "s1 S2 s1" parses to the 3-braid
// a_1 a_2^{-1} a_1.

#pragma once

#include "braidwrench/braid.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace braidwrench {

struct ParsedInput {
    int strands;  // explicit, or inferred as 1 + max generator index
    BraidWord word;
};

// Throws ParseError (with byte offset) on grammar violations and BadParams
// when an explicit strand count is below 1 + max index.
ParsedInput parse_braid(std::string_view text,
                        std::optional<int> strands = std::nullopt);

// Canonical form: one token per letter, space separated. parse_braid is a
// left inverse of this printer.
std::string print_braid(const BraidWord& w);

}  // namespace braidwrench
