#include "nota/script.hpp"

#include <algorithm>
#include <array>

#include "nota/utf8.hpp"

namespace nota {
namespace {

using Role = Letter::Role;

// Sorted by code point. ض and ظ share a label: the dialect merged them.
constexpr std::array kLetters = {
    Letter{0x0621, "ʔ"},
    Letter{0x0622, "ʔ"},
    Letter{0x0623, "ʔ"},
    Letter{0x0624, "ʔ"},
    Letter{0x0625, "ʔ"},
    Letter{0x0626, "ʔ"},
    Letter{0x0627, "aː", Role::VowelSeat},
    Letter{0x0628, "b"},
    Letter{0x0629, "a", Role::TaMarbuta},
    Letter{0x062A, "t"},
    Letter{0x062B, "θ"},
    Letter{0x062C, "ʒ"},
    Letter{0x062D, "ħ"},
    Letter{0x062E, "x"},
    Letter{0x062F, "d"},
    Letter{0x0630, "ð"},
    Letter{0x0631, "r"},
    Letter{0x0632, "z"},
    Letter{0x0633, "s"},
    Letter{0x0634, "ʃ"},
    Letter{0x0635, "sˤ", Role::Consonant, true},
    Letter{0x0636, "ðˤ", Role::Consonant, true},
    Letter{0x0637, "tˤ", Role::Consonant, true},
    Letter{0x0638, "ðˤ", Role::Consonant, true},
    Letter{0x0639, "ʕ"},
    Letter{0x063A, "ɣ"},
    Letter{0x0641, "f"},
    Letter{0x0642, "q"},
    Letter{0x0643, "k"},
    Letter{0x0644, "l"},
    Letter{0x0645, "m"},
    Letter{0x0646, "n"},
    Letter{0x0647, "h"},
    Letter{0x0648, "w", Role::Glide},
    Letter{0x0649, "aː", Role::VowelSeat},
    Letter{0x064A, "j", Role::Glide},
    Letter{0x067E, "p", Role::Consonant, false, true},
    Letter{0x06A4, "v", Role::Consonant, false, true},
    Letter{0x06A8, "g", Role::Consonant, false, true},
};

static_assert(std::is_sorted(kLetters.begin(), kLetters.end(),
                             [](const Letter& a, const Letter& b) {
                               return a.code < b.code;
                             }));

bool in(char32_t c, char32_t lo, char32_t hi) { return c >= lo && c <= hi; }

bool is_whitespace(char32_t c) {
  return in(c, 0x09, 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 ||
         c == 0x1680 || in(c, 0x2000, 0x200A) || c == 0x2028 ||
         c == 0x2029 || c == 0x202F || c == 0x205F || c == 0x3000;
}

bool is_digit(char32_t c) {
  return in(c, '0', '9') || in(c, 0x0660, 0x0669) || in(c, 0x06F0, 0x06F9);
}

bool is_foreign_letter(char32_t c) {
  if (in(c, 'A', 'Z') || in(c, 'a', 'z')) return true;
  if (c == 0xAA || c == 0xB5 || c == 0xBA) return true;
  if (in(c, 0xC0, 0x24F)) return c != 0xD7 && c != 0xF7;
  return in(c, 0x0250, 0x036F) ||  // IPA, modifier letters, combining marks
         in(c, 0x0370, 0x03FF) ||  // Greek
         in(c, 0x0400, 0x052F) ||  // Cyrillic
         in(c, 0x0531, 0x058F) ||  // Armenian
         in(c, 0x05D0, 0x05EA) ||  // Hebrew letters
         in(c, 0x1E00, 0x1EFF) || in(c, 0x2C60, 0x2C7F) ||
         in(c, 0xA720, 0xA7FF) || in(c, 0xFF21, 0xFF3A) ||
         in(c, 0xFF41, 0xFF5A);
}

bool is_punctuation(char32_t c) {
  if (in(c, 0x21, 0x2F) || in(c, 0x3A, 0x40) || in(c, 0x5B, 0x60) ||
      in(c, 0x7B, 0x7E)) {
    return true;
  }
  if (in(c, 0xA1, 0xBF)) return c != 0xAA && c != 0xB5 && c != 0xBA;
  return c == 0xD7 || c == 0xF7 || in(c, 0x2010, 0x2027) ||
         in(c, 0x2030, 0x205E) || c == 0x060C || c == 0x060D ||
         c == 0x061B || in(c, 0x061E, 0x061F) || in(c, 0x066A, 0x066D) ||
         c == 0x06D4 || c == 0xFD3E || c == 0xFD3F || in(c, 0x3001, 0x3003);
}

// Arabic-script letters and marks that are not part of the inventory.
bool is_arabic_script_extra(char32_t c) {
  if (in(c, 0x0600, 0x06FF)) {
    return !in(c, 0x0600, 0x0605) && c != 0x061C && c != 0x06DD &&
           !is_digit(c) && !is_punctuation(c);
  }
  if (in(c, 0xFB50, 0xFDFF)) {
    return c != 0xFD3E && c != 0xFD3F && c != 0xFDFC && c != 0xFDFD;
  }
  return in(c, 0x0750, 0x077F) || in(c, 0x08A0, 0x08FF) ||
         in(c, 0xFE70, 0xFEFC);
}

}  // namespace

char32_t vowel_mark(Vowel v) {
  switch (v) {
    case Vowel::A: return cp::kFatha;
    case Vowel::E: return cp::kZwarakai;
    case Vowel::I: return cp::kKasra;
    case Vowel::U: return cp::kDamma;
  }
  return cp::kFatha;
}

std::optional<Vowel> vowel_from_mark(char32_t c) {
  switch (c) {
    case cp::kFatha: return Vowel::A;
    case cp::kZwarakai: return Vowel::E;
    case cp::kKasra: return Vowel::I;
    case cp::kDamma: return Vowel::U;
    default: return std::nullopt;
  }
}

std::string_view vowel_phoneme(Vowel v) {
  switch (v) {
    case Vowel::A: return "a";
    case Vowel::E: return "ɛ";
    case Vowel::I: return "i";
    case Vowel::U: return "u";
  }
  return "a";
}

std::string_view vowel_name(Vowel v) {
  switch (v) {
    case Vowel::A: return "A";
    case Vowel::E: return "E";
    case Vowel::I: return "I";
    case Vowel::U: return "U";
  }
  return "A";
}

std::optional<Vowel> parse_vowel_name(std::string_view name) {
  for (Vowel v : kAllVowels) {
    if (vowel_name(v) == name) return v;
  }
  return std::nullopt;
}

char32_t vowel_mater(Vowel v) {
  switch (v) {
    case Vowel::A:
    case Vowel::E: return cp::kAlef;
    case Vowel::I: return cp::kYeh;
    case Vowel::U: return cp::kWaw;
  }
  return cp::kAlef;
}

std::span<const Letter> letter_inventory() { return kLetters; }

const Letter* find_letter(char32_t c) {
  const auto it = std::lower_bound(
      kLetters.begin(), kLetters.end(), c,
      [](const Letter& l, char32_t v) { return l.code < v; });
  if (it == kLetters.end() || it->code != c) return nullptr;
  return &*it;
}

std::string_view script_kind_name(ScriptKind kind) {
  switch (kind) {
    case ScriptKind::BaseLetter: return "BaseLetter";
    case ScriptKind::VowelDiacritic: return "VowelDiacritic";
    case ScriptKind::Shadda: return "Shadda";
    case ScriptKind::Sukun: return "Sukun";
    case ScriptKind::ArabicDigit: return "ArabicDigit";
    case ScriptKind::Punctuation: return "Punctuation";
    case ScriptKind::Whitespace: return "Whitespace";
    case ScriptKind::ForeignLetter: return "ForeignLetter";
    case ScriptKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

ScriptClass classify_codepoint(char32_t c) {
  if (const Letter* letter = find_letter(c)) {
    return {ScriptKind::BaseLetter, letter};
  }
  if (auto v = vowel_from_mark(c)) return {ScriptKind::VowelDiacritic, nullptr, *v};
  if (c == cp::kShadda) return {ScriptKind::Shadda};
  if (c == cp::kSukun) return {ScriptKind::Sukun};
  if (is_digit(c)) return {ScriptKind::ArabicDigit};
  if (is_whitespace(c)) return {ScriptKind::Whitespace};
  if (is_punctuation(c)) return {ScriptKind::Punctuation};
  if (is_foreign_letter(c)) return {ScriptKind::ForeignLetter};
  return {ScriptKind::Unknown};
}

bool is_nota_mark(char32_t c) {
  return vowel_from_mark(c).has_value() || c == cp::kShadda || c == cp::kSukun;
}

bool is_arabic_mark(char32_t c) {
  return in(c, 0x0610, 0x061A) || in(c, 0x064B, 0x065F) || c == 0x0670 ||
         in(c, 0x06D6, 0x06DC) || in(c, 0x06DF, 0x06E4) ||
         in(c, 0x06E7, 0x06E8) || in(c, 0x06EA, 0x06ED) ||
         in(c, 0x08D3, 0x08E1) || in(c, 0x08E3, 0x08FF);
}

bool is_word_char(char32_t c) {
  switch (classify_codepoint(c).kind) {
    case ScriptKind::BaseLetter:
    case ScriptKind::VowelDiacritic:
    case ScriptKind::Shadda:
    case ScriptKind::Sukun:
      return true;
    case ScriptKind::Unknown:
      return is_arabic_script_extra(c);
    default:
      return false;
  }
}

std::vector<Grapheme> parse_graphemes(std::string_view word) {
  std::vector<Grapheme> out;
  for (std::size_t pos = 0; pos < word.size();) {
    const auto d = decode_utf8(word, pos);
    const ScriptClass cls = classify_codepoint(d.cp);
    switch (cls.kind) {
      case ScriptKind::BaseLetter:
        out.push_back(Grapheme{d.cp, false, false, std::nullopt});
        break;
      case ScriptKind::VowelDiacritic:
      case ScriptKind::Shadda:
      case ScriptKind::Sukun: {
        if (out.empty()) {
          throw GraphemeError(GraphemeError::Kind::LeadingDiacritic, pos,
                              "diacritic without a preceding base letter");
        }
        Grapheme& g = out.back();
        if (cls.kind == ScriptKind::Shadda) {
          if (g.shadda) {
            throw GraphemeError(GraphemeError::Kind::DuplicateMark, pos,
                                "two Shaddas on one letter");
          }
          g.shadda = true;
        } else if (cls.kind == ScriptKind::Sukun) {
          if (g.sukun) {
            throw GraphemeError(GraphemeError::Kind::DuplicateMark, pos,
                                "two Sukuns on one letter");
          }
          if (g.vowel) {
            throw GraphemeError(GraphemeError::Kind::VowelWithSukun, pos,
                                "vowel and Sukun on one letter");
          }
          g.sukun = true;
        } else {
          if (g.vowel) {
            throw GraphemeError(GraphemeError::Kind::DuplicateVowel, pos,
                                "two vowel diacritics on one letter");
          }
          if (g.sukun) {
            throw GraphemeError(GraphemeError::Kind::VowelWithSukun, pos,
                                "vowel and Sukun on one letter");
          }
          g.vowel = cls.vowel;
        }
        break;
      }
      default:
        throw GraphemeError(GraphemeError::Kind::NotInInventory, pos,
                            "code point outside the letter inventory");
    }
    pos += d.length;
  }
  return out;
}

std::string render_graphemes(std::span<const Grapheme> graphemes) {
  std::string out;
  for (const Grapheme& g : graphemes) {
    append_utf8(out, g.base);
    if (g.shadda) append_utf8(out, cp::kShadda);
    if (g.vowel) {
      append_utf8(out, vowel_mark(*g.vowel));
    } else if (g.sukun) {
      append_utf8(out, cp::kSukun);
    }
  }
  return out;
}

std::string strip_diacritics(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const auto d = decode_utf8(text, pos);
    if (!(d.valid && is_nota_mark(d.cp))) out.append(text.substr(pos, d.length));
    pos += d.length;
  }
  return out;
}

}  // namespace nota
