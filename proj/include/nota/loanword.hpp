#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nota/script.hpp"

namespace nota {

// A foreign word given phonemically.
struct PhonemicInput {
  std::vector<std::string> segments;        // IPA labels
  std::vector<std::size_t> syllable_starts; // segment index of each syllable
  std::set<std::size_t> stressed;           // syllable indices

  std::size_t syllable_of(std::size_t segment) const;
};

class TranslitError : public std::runtime_error {
 public:
  enum class Kind { UnknownPhoneme, EmptyInput, Malformed };

  TranslitError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Line format: space-separated IPA segments, "." between syllables and "ˈ"
// in front of the first segment of a stressed syllable (which also starts a
// syllable), e.g. "f r i . ˈk a . s e j".
PhonemicInput parse_phonemic_line(std::string_view line);

bool is_foreign_vowel(std::string_view phone);

class Transliterator {
 public:
  // `similarity` overrides entries of the default vowel table.
  explicit Transliterator(std::map<std::string, Vowel> similarity = {});

  // Nearest NOTA vowel quality of a foreign vowel.
  Vowel assimilate(std::string_view vowel) const;

  // Unstressed vowels are written long (mark + mater); the first vowel of a
  // stressed syllable is short, which leaves it unwritten in bare script,
  // unless it ends the word. A word-initial vowel sits on Alef: أ+و for /u/,
  // إ for /i/, ا otherwise.
  std::string transliterate(const PhonemicInput& input,
                            ScriptMode mode = ScriptMode::Bare) const;

 private:
  std::map<std::string, Vowel, std::less<>> similarity_;
};

Vowel assimilate_vowel(std::string_view vowel);
std::string transliterate_loanword(const PhonemicInput& input,
                                   ScriptMode mode = ScriptMode::Bare);

}  // namespace nota
