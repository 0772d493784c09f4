#include "nota/romanizer.hpp"

#include <gtest/gtest.h>

#include "nota/script.hpp"
#include "nota/utf8.hpp"
#include "support.hpp"

namespace nota {
namespace {

std::string rom(std::string_view w, ScriptMode mode = ScriptMode::Diacritized) {
  return romanize_to_string(w, mode);
}

RomanizeError::Kind rom_error(std::string_view w, ScriptMode mode) {
  try {
    romanize(w, mode);
  } catch (const RomanizeError& e) {
    return e.kind();
  }
  ADD_FAILURE() << w;
  return RomanizeError::Kind::NotAWord;
}

TEST(Romanize, Examples) {
  EXPECT_EQ(rom("بَاش"), "baːʃ");
  EXPECT_EQ(rom("ڨ", ScriptMode::Bare), "g");
  EXPECT_EQ(rom("دَڨْلَة"), "dagla");
}

TEST(Romanize, LongVowelsAndGemination) {
  EXPECT_EQ(rom("كُول"), "kuːl");
  EXPECT_EQ(rom("بِيت"), "biːt");
  EXPECT_EQ(rom("مْشَى"), "mʃaː");
  EXPECT_EQ(rom("بٙات"), "bɛːt");
  EXPECT_EQ(rom("كَلّْمُو"), "kallmuː");
}

TEST(Romanize, ArticleReadsIl) { EXPECT_EQ(rom("الدَّار"), "ilddaːr"); }

TEST(Romanize, BareMode) {
  EXPECT_EQ(rom("باش", ScriptMode::Bare), "b·ːʃ");
  EXPECT_EQ(rom("بڨرة", ScriptMode::Bare), "bgra");
  EXPECT_EQ(rom("كول", ScriptMode::Bare), "kuːl");
}

TEST(Romanize, Errors) {
  EXPECT_EQ(rom_error("", ScriptMode::Bare), RomanizeError::Kind::NotAWord);
  EXPECT_EQ(rom_error("abc", ScriptMode::Bare), RomanizeError::Kind::NotAWord);
  EXPECT_EQ(rom_error("بٌ", ScriptMode::Bare), RomanizeError::Kind::NotAWord);
  EXPECT_EQ(rom_error("باش", ScriptMode::Diacritized), RomanizeError::Kind::MissingDiacritics);
}

TEST(RomanizeProperties, EveryLetterHasOneLabel) {
  for (const Letter& l : letter_inventory()) {
    const std::string w = to_utf8(std::u32string{l.code});
    const PhonemeString p = romanize(w, ScriptMode::Bare);
    ASSERT_FALSE(p.empty()) << w;
    ASSERT_EQ(romanize(w, ScriptMode::Bare), p);
    ASSERT_FALSE(l.ipa.empty());
  }
}

TEST(RomanizeProperties, DadZahMergeSupplementalLettersStayDistinct) {
  EXPECT_EQ(rom("ض", ScriptMode::Bare), rom("ظ", ScriptMode::Bare));
  EXPECT_NE(rom("پ", ScriptMode::Bare), rom("ب", ScriptMode::Bare));
  EXPECT_NE(rom("ڤ", ScriptMode::Bare), rom("ف", ScriptMode::Bare));
  EXPECT_NE(rom("ڨ", ScriptMode::Bare), rom("ق", ScriptMode::Bare));
  EXPECT_EQ(rom("ضَرْب"), rom("ظَرْب"));
}

// Diacritized words whose glide letters are either word-initial consonants
// or materes, so both readings of the letters agree.
std::string random_diacritized_word(testing::Rng& rng) {
  static const std::vector<char32_t> consonants = [] {
    std::vector<char32_t> out;
    for (const Letter& l : letter_inventory()) {
      if (l.role == Letter::Role::Consonant && l.code != cp::kAlefMadda) out.push_back(l.code);
    }
    return out;
  }();
  std::u32string w;
  const std::size_t syllables = 1 + testing::pick(rng, 4);
  for (std::size_t s = 0; s < syllables; ++s) {
    if (s == 0 && testing::chance(rng, 0.15)) {
      w += cp::kAlef;
      if (testing::chance(rng, 0.5)) w += vowel_mark(kAllVowels[testing::pick(rng, 4)]);
    } else if (s == 0 && testing::chance(rng, 0.1)) {
      w += testing::chance(rng, 0.5) ? cp::kWaw : cp::kYeh;
      w += vowel_mark(kAllVowels[testing::pick(rng, 4)]);
    } else {
      w += testing::pick(rng, consonants);
      if (testing::chance(rng, 0.2)) w += cp::kShadda;
      if (testing::chance(rng, 0.2)) {
        w += cp::kSukun;
        continue;
      }
      const Vowel v = kAllVowels[testing::pick(rng, 4)];
      w += vowel_mark(v);
      if (testing::chance(rng, 0.4)) {
        switch (v) {
          case Vowel::A: w += testing::chance(rng, 0.8) ? cp::kAlef : cp::kAlefMaqsura; break;
          case Vowel::E: w += cp::kAlef; break;
          case Vowel::U: w += cp::kWaw; break;
          case Vowel::I: w += cp::kYeh; break;
        }
      }
    }
  }
  if (testing::chance(rng, 0.2)) {
    w += testing::pick(rng, consonants);
    w += vowel_mark(Vowel::A);
    w += cp::kTehMarbuta;
  }
  return to_utf8(w);
}

TEST(RomanizeProperties, BareReadingMasksTheDiacritizedOne) {
  testing::Rng rng(71);
  for (int i = 0; i < 10000; ++i) {
    const std::string w = random_diacritized_word(rng);
    const PhonemeString full = romanize(w, ScriptMode::Diacritized);
    const PhonemeString bare = romanize(strip_diacritics(w), ScriptMode::Bare);
    ASSERT_EQ(bare, mask_vowels(full)) << w << " " << to_string(full) << " / " << to_string(bare);
  }
}

TEST(RomanizeProperties, OnlyTheFourVowelsAppear) {
  testing::Rng rng(72);
  for (int i = 0; i < 3000; ++i) {
    for (const PhonemeSegment& s : romanize(random_diacritized_word(rng), ScriptMode::Diacritized)) {
      if (s.kind == PhonemeSegment::Kind::Vowel && s.quality) {
        const std::string v(vowel_phoneme(*s.quality));
        ASSERT_TRUE(v == "a" || v == "ɛ" || v == "i" || v == "u") << v;
      }
    }
  }
}

}  // namespace
}  // namespace nota
