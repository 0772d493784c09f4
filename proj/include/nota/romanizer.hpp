#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nota/script.hpp"

namespace nota {

// Where a vowel segment came from. Diacritized and bare spellings agree on
// every vowel that a letter carries and differ on the rest.
enum class VowelCarrier : std::uint8_t {
  Diacritic,   // short vowel written only as a mark
  Alef,        // ا or ى: lengthening mater, or the seat of an initial vowel
  Waw,         // و as mater: /uː/
  Yeh,         // ي as mater: /iː/
  TaMarbuta,   // ة: final /a/
  AlefMadda,   // آ: /ʔaː/
};

struct PhonemeSegment {
  enum class Kind : std::uint8_t { Consonant, Vowel };

  Kind kind = Kind::Consonant;
  std::string label;            // consonants only
  std::optional<Vowel> quality; // vowels; nullopt is an unknown quality
  bool is_long = false;
  bool geminate = false;
  VowelCarrier carrier = VowelCarrier::Diacritic;

  friend bool operator==(const PhonemeSegment&, const PhonemeSegment&) = default;
};

using PhonemeString = std::vector<PhonemeSegment>;

// Unknown vowel qualities print as this placeholder.
inline constexpr std::string_view kVowelPlaceholder = "·";

class RomanizeError : public std::runtime_error {
 public:
  enum class Kind { NotAWord, MissingDiacritics };

  RomanizeError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Broad phonemic transcription of one word.
//
// Diacritized: every consonant needs a vowel, Shadda or Sukun; a vowel mark
// followed by its mater (ا/ى, و after Damma, ي after Kasra) is long; Shadda
// doubles the consonant. A bare word-initial ال reads /il/.
//
// Bare: consonants only, with ا/ى as a long vowel of unknown quality, و/ي
// after a consonant as /uː/ and /iː/, and ة as /a/.
PhonemeString romanize(std::string_view word, ScriptMode mode);

std::string to_string(const PhonemeString& phonemes);

inline std::string romanize_to_string(std::string_view word, ScriptMode mode) {
  return to_string(romanize(word, mode));
}

// What a bare spelling keeps of a diacritized transcription: vowels carried
// only by marks disappear, letter-carried vowels keep the quality the letter
// itself determines, and gemination is lost.
PhonemeString mask_vowels(const PhonemeString& phonemes);

}  // namespace nota
