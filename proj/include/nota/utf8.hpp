#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace nota {

// Replacement value reported for bytes that do not start a valid sequence.
inline constexpr char32_t kInvalidCodePoint = 0xFFFD;

struct DecodedCodePoint {
  char32_t cp = kInvalidCodePoint;
  std::size_t length = 1;  // bytes consumed, always >= 1
  bool valid = false;
};

// Decodes one scalar value at `pos`. Malformed input consumes exactly one
// byte so that callers can walk arbitrary bytes losslessly.
DecodedCodePoint decode_utf8(std::string_view text, std::size_t pos);

void append_utf8(std::string& out, char32_t cp);
std::string to_utf8(char32_t cp);
std::string to_utf8(std::u32string_view cps);
std::u32string to_code_points(std::string_view text);

bool is_valid_utf8(std::string_view text);

// Number of scalar values (malformed bytes count one each).
std::size_t count_code_points(std::string_view text);

}  // namespace nota
