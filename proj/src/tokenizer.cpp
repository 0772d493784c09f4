#include "nota/tokenizer.hpp"

#include "nota/script.hpp"
#include "nota/utf8.hpp"

namespace nota {
namespace {

TokenKind kind_of(const DecodedCodePoint& d) {
  if (!d.valid) return TokenKind::Punctuation;
  if (is_word_char(d.cp)) return TokenKind::Word;
  switch (classify_codepoint(d.cp).kind) {
    case ScriptKind::Whitespace: return TokenKind::Whitespace;
    case ScriptKind::ArabicDigit: return TokenKind::Digits;
    case ScriptKind::ForeignLetter: return TokenKind::Foreign;
    default: return TokenKind::Punctuation;
  }
}

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Word: return "Word";
    case TokenKind::Whitespace: return "Whitespace";
    case TokenKind::Punctuation: return "Punctuation";
    case TokenKind::Foreign: return "Foreign";
    case TokenKind::Digits: return "Digits";
  }
  return "Punctuation";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    auto d = decode_utf8(text, pos);
    const TokenKind kind = kind_of(d);
    pos += d.length;
    while (pos < text.size()) {
      d = decode_utf8(text, pos);
      if (kind_of(d) != kind) break;
      pos += d.length;
    }
    tokens.push_back({kind, text.substr(start, pos - start), {start, pos}});
  }
  return tokens;
}

}  // namespace nota
