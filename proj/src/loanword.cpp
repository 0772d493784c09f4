#include "nota/loanword.hpp"

#include <algorithm>
#include <sstream>

#include "nota/utf8.hpp"

namespace nota {
namespace {

struct VowelEntry {
  std::string_view phone;
  Vowel quality;
};

// [y]→I and [ə]→U are fixed; the rest is nearest quality. [œ ø] go to U to
// match the printed أوردينتور.
constexpr VowelEntry kDefaultVowels[] = {
    {"i", Vowel::I}, {"y", Vowel::I}, {"e", Vowel::E}, {"ɛ", Vowel::E},
    {"œ", Vowel::U}, {"ø", Vowel::U}, {"ə", Vowel::U}, {"a", Vowel::A},
    {"ɑ", Vowel::A}, {"o", Vowel::U}, {"ɔ", Vowel::U}, {"u", Vowel::U},
};

struct ConsonantEntry {
  std::string_view phone;
  std::u32string_view letters;
};

constexpr ConsonantEntry kConsonants[] = {
    {"p", U"پ"}, {"b", U"ب"}, {"t", U"ت"}, {"d", U"د"},
    {"k", U"ك"}, {"g", U"ڨ"}, {"f", U"ف"}, {"v", U"ڤ"},
    {"s", U"س"}, {"z", U"ز"}, {"ʃ", U"ش"}, {"ʒ", U"ج"},
    {"m", U"م"}, {"n", U"ن"}, {"ɲ", U"ني"}, {"l", U"ل"},
    {"r", U"ر"}, {"ʁ", U"ر"}, {"j", U"ي"}, {"w", U"و"},
    {"ɥ", U"و"}, {"h", U"ه"}, {"x", U"خ"},
};

const ConsonantEntry* find_consonant(std::string_view phone) {
  for (const auto& c : kConsonants) {
    if (c.phone == phone) return &c;
  }
  return nullptr;
}

char32_t initial_carrier(Vowel q) {
  switch (q) {
    case Vowel::U: return cp::kAlefHamzaAbove;
    case Vowel::I: return cp::kAlefHamzaBelow;
    default: return cp::kAlef;
  }
}

}  // namespace

std::size_t PhonemicInput::syllable_of(std::size_t segment) const {
  const auto it = std::upper_bound(syllable_starts.begin(), syllable_starts.end(), segment);
  return it == syllable_starts.begin() ? 0
                                       : static_cast<std::size_t>(it - syllable_starts.begin()) - 1;
}

PhonemicInput parse_phonemic_line(std::string_view line) {
  std::string spaced;
  for (std::size_t pos = 0; pos < line.size();) {
    const auto d = decode_utf8(line, pos);
    const auto piece = line.substr(pos, d.length);
    if (d.cp == U'.' || d.cp == U'ˈ') {
      spaced += ' ';
      spaced += piece;
      spaced += ' ';
    } else {
      spaced += piece;
    }
    pos += d.length;
  }

  PhonemicInput input;
  bool boundary = false;
  bool stress = false;
  std::istringstream in(spaced);
  for (std::string tok; in >> tok;) {
    if (tok == ".") {
      boundary = true;
    } else if (tok == "ˈ") {
      if (stress) throw TranslitError(TranslitError::Kind::Malformed, "repeated stress mark");
      stress = boundary = true;
    } else {
      if (input.segments.empty()) {
        input.syllable_starts.push_back(0);
      } else if (boundary) {
        input.syllable_starts.push_back(input.segments.size());
      }
      input.segments.push_back(tok);
      if (stress) input.stressed.insert(input.syllable_starts.size() - 1);
      boundary = stress = false;
    }
  }
  if (input.segments.empty()) {
    throw TranslitError(TranslitError::Kind::EmptyInput, "no phonemes");
  }
  if (stress) {
    throw TranslitError(TranslitError::Kind::Malformed, "stress mark without a syllable");
  }
  return input;
}

bool is_foreign_vowel(std::string_view phone) {
  return std::any_of(std::begin(kDefaultVowels), std::end(kDefaultVowels),
                     [&](const VowelEntry& e) { return e.phone == phone; });
}

Transliterator::Transliterator(std::map<std::string, Vowel> similarity) {
  for (const auto& e : kDefaultVowels) similarity_.emplace(std::string(e.phone), e.quality);
  for (auto& [phone, q] : similarity) similarity_[phone] = q;
}

Vowel Transliterator::assimilate(std::string_view vowel) const {
  const auto it = similarity_.find(vowel);
  if (it == similarity_.end()) {
    throw TranslitError(TranslitError::Kind::UnknownPhoneme,
                        "unknown vowel [" + std::string(vowel) + "]");
  }
  return it->second;
}

std::string Transliterator::transliterate(const PhonemicInput& input,
                                          ScriptMode mode) const {
  if (input.segments.empty()) {
    throw TranslitError(TranslitError::Kind::EmptyInput, "no phonemes");
  }
  const bool marks = mode == ScriptMode::Diacritized;
  const auto is_vowel = [&](std::size_t i) {
    return i < input.segments.size() && similarity_.contains(input.segments[i]);
  };

  std::u32string out;
  std::size_t stressed_seen = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < input.segments.size(); ++i) {
    const std::string& phone = input.segments[i];
    if (!is_vowel(i)) {
      const ConsonantEntry* c = find_consonant(phone);
      if (!c) {
        throw TranslitError(TranslitError::Kind::UnknownPhoneme,
                            "unknown phoneme [" + phone + "]");
      }
      for (std::size_t k = 0; k < c->letters.size(); ++k) {
        out += c->letters[k];
        const bool last = k + 1 == c->letters.size();
        if (marks && (!last || !is_vowel(i + 1))) out += cp::kSukun;
      }
      continue;
    }

    const Vowel q = assimilate(phone);
    const std::size_t syllable = input.syllable_of(i);
    const bool first_in_stressed =
        input.stressed.contains(syllable) && stressed_seen != syllable;
    if (input.stressed.contains(syllable)) stressed_seen = syllable;
    const bool is_long = !first_in_stressed || i + 1 == input.segments.size();

    if (i == 0) {
      out += initial_carrier(q);
      if (marks) out += vowel_mark(q);
      if (is_long && (q == Vowel::U || q == Vowel::I)) out += vowel_mater(q);
    } else if (is_vowel(i - 1)) {
      // Hiatus: no consonant to carry a mark, so the mater stands alone.
      out += vowel_mater(q);
    } else {
      if (marks) out += vowel_mark(q);
      if (is_long) out += vowel_mater(q);
    }
  }
  return to_utf8(out);
}

Vowel assimilate_vowel(std::string_view vowel) {
  static const Transliterator t;
  return t.assimilate(vowel);
}

std::string transliterate_loanword(const PhonemicInput& input, ScriptMode mode) {
  static const Transliterator t;
  return t.transliterate(input, mode);
}

}  // namespace nota
