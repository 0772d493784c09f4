#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nota {

// Code points the rules refer to by role.
namespace cp {
inline constexpr char32_t kHamza = 0x0621;
inline constexpr char32_t kAlefMadda = 0x0622;
inline constexpr char32_t kAlefHamzaAbove = 0x0623;
inline constexpr char32_t kAlefHamzaBelow = 0x0625;
inline constexpr char32_t kAlef = 0x0627;
inline constexpr char32_t kBeh = 0x0628;
inline constexpr char32_t kTehMarbuta = 0x0629;
inline constexpr char32_t kTeh = 0x062A;
inline constexpr char32_t kSheen = 0x0634;
inline constexpr char32_t kTatweel = 0x0640;
inline constexpr char32_t kFeh = 0x0641;
inline constexpr char32_t kQaf = 0x0642;
inline constexpr char32_t kKaf = 0x0643;
inline constexpr char32_t kLam = 0x0644;
inline constexpr char32_t kMeem = 0x0645;
inline constexpr char32_t kNoon = 0x0646;
inline constexpr char32_t kHeh = 0x0647;
inline constexpr char32_t kWaw = 0x0648;
inline constexpr char32_t kAlefMaqsura = 0x0649;
inline constexpr char32_t kYeh = 0x064A;
inline constexpr char32_t kFatha = 0x064E;
inline constexpr char32_t kDamma = 0x064F;
inline constexpr char32_t kKasra = 0x0650;
inline constexpr char32_t kShadda = 0x0651;
inline constexpr char32_t kSukun = 0x0652;
inline constexpr char32_t kZwarakai = 0x0659;
inline constexpr char32_t kPeh = 0x067E;   // /p/
inline constexpr char32_t kVeh = 0x06A4;   // /v/
inline constexpr char32_t kGaf = 0x06A8;   // /g/, qaf with three dots
}  // namespace cp

// The four NOTA vowel qualities.
enum class Vowel : std::uint8_t { A, E, I, U };

inline constexpr Vowel kAllVowels[] = {Vowel::A, Vowel::E, Vowel::I, Vowel::U};

char32_t vowel_mark(Vowel v);
std::optional<Vowel> vowel_from_mark(char32_t c);
// Broad phoneme label: a, ɛ, i, u.
std::string_view vowel_phoneme(Vowel v);
// Single-letter name as used in config tables: "A", "E", "I", "U".
std::string_view vowel_name(Vowel v);
std::optional<Vowel> parse_vowel_name(std::string_view name);
// Mater lectionis used for the long form of `v`.
char32_t vowel_mater(Vowel v);

enum class ScriptMode : std::uint8_t { Bare, Diacritized };

// One entry of the letter inventory.
struct Letter {
  enum class Role : std::uint8_t {
    Consonant,
    Glide,       // و ي: consonant or mater lectionis
    VowelSeat,   // ا ى
    TaMarbuta,   // ة
  };

  char32_t code = 0;
  std::string_view ipa;
  Role role = Role::Consonant;
  bool emphatic = false;
  bool supplemental = false;
};

std::span<const Letter> letter_inventory();
const Letter* find_letter(char32_t c);

inline bool is_supplemental_letter(char32_t c) {
  return c == cp::kPeh || c == cp::kVeh || c == cp::kGaf;
}

enum class ScriptKind : std::uint8_t {
  BaseLetter,
  VowelDiacritic,
  Shadda,
  Sukun,
  ArabicDigit,
  Punctuation,
  Whitespace,
  ForeignLetter,
  Unknown,
};

std::string_view script_kind_name(ScriptKind kind);

struct ScriptClass {
  ScriptKind kind = ScriptKind::Unknown;
  const Letter* letter = nullptr;  // set for BaseLetter
  Vowel vowel = Vowel::A;          // meaningful for VowelDiacritic

  friend bool operator==(const ScriptClass& a, const ScriptClass& b) {
    return a.kind == b.kind && a.letter == b.letter &&
           (a.kind != ScriptKind::VowelDiacritic || a.vowel == b.vowel);
  }
};

ScriptClass classify_codepoint(char32_t c);

// Vowel diacritic, Shadda or Sukun.
bool is_nota_mark(char32_t c);
// Any non-spacing mark of the Arabic blocks, NOTA or not.
bool is_arabic_mark(char32_t c);
// Code point that belongs inside an Arabic-script word: inventory letters and
// marks plus the Arabic-script letters, marks and presentation forms outside
// the inventory (those classify as Unknown).
bool is_word_char(char32_t c);

// A base letter and its attached NOTA marks.
struct Grapheme {
  char32_t base = 0;
  bool shadda = false;
  bool sukun = false;
  std::optional<Vowel> vowel;

  friend bool operator==(const Grapheme&, const Grapheme&) = default;
};

class GraphemeError : public std::runtime_error {
 public:
  enum class Kind {
    LeadingDiacritic,
    DuplicateVowel,
    VowelWithSukun,
    DuplicateMark,
    NotInInventory,
  };

  GraphemeError(Kind kind, std::size_t offset, const std::string& what)
      : std::runtime_error(what), kind_(kind), offset_(offset) {}

  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

// Splits a word into graphemes. Marks attach to the nearest preceding base
// letter; their order inside a cluster does not matter.
std::vector<Grapheme> parse_graphemes(std::string_view word);

// Emits Shadda before the vowel or Sukun.
std::string render_graphemes(std::span<const Grapheme> graphemes);

// Removes vowel diacritics, Shadda and Sukun; everything else is kept.
std::string strip_diacritics(std::string_view text);

}  // namespace nota
