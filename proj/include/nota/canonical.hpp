#pragma once

#include <string>
#include <string_view>

#include "nota/rewrite.hpp"

namespace nota {

// Brings text to the one spelling the rules operate on:
//   - Arabic presentation forms (U+FB50..U+FDFF, U+FE70..U+FEFF) fold to
//     their base letters;
//   - tatweel is dropped;
//   - Alef/Waw/Yeh followed by a combining Hamza or Madda compose to the
//     precomposed letter;
//   - marks on a letter are ordered Shadda first, then vowel or Sukun, then
//     any other mark, otherwise keeping their relative order.
// Everything outside Arabic script passes through byte for byte.
std::string canonicalize(std::string_view text);

// Same, appending the two rewrite levels (folding, then cluster ordering) to
// `trace`, whose current text must equal `text`.
void canonicalize(RewriteTrace& trace);

}  // namespace nota
