#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "nota/rewrite.hpp"

namespace nota {

enum class TokenKind : std::uint8_t {
  Word,
  Whitespace,
  Punctuation,
  Foreign,
  Digits,
};

std::string_view token_kind_name(TokenKind kind);

// Tokens view into the tokenized text and must not outlive it.
struct Token {
  TokenKind kind = TokenKind::Word;
  std::string_view text;
  Span span;
};

// Lossless, maximal-munch split of `text` by character class. Arabic-script
// letters and marks form Word tokens; a change of script always starts a new
// token. Unclassified code points and malformed bytes join Punctuation runs.
std::vector<Token> tokenize(std::string_view text);

}  // namespace nota
