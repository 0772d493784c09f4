#include "nota/script.hpp"

#include <gtest/gtest.h>

#include "nota/canonical.hpp"
#include "nota/utf8.hpp"
#include "support.hpp"

namespace nota {
namespace {

using testing::Rng;

TEST(Classify, SupplementalLetterIsBaseLetter) {
  const ScriptClass c = classify_codepoint(0x067E);
  ASSERT_EQ(c.kind, ScriptKind::BaseLetter);
  EXPECT_EQ(c.letter->ipa, "p");
  EXPECT_TRUE(c.letter->supplemental);
}

TEST(Classify, ZwarakaiIsVowelE) {
  const ScriptClass c = classify_codepoint(0x0659);
  ASSERT_EQ(c.kind, ScriptKind::VowelDiacritic);
  EXPECT_EQ(c.vowel, Vowel::E);
}

TEST(Classify, LatinIsForeign) {
  EXPECT_EQ(classify_codepoint(U'A').kind, ScriptKind::ForeignLetter);
}

TEST(Classify, OtherClasses) {
  EXPECT_EQ(classify_codepoint(cp::kShadda).kind, ScriptKind::Shadda);
  EXPECT_EQ(classify_codepoint(cp::kSukun).kind, ScriptKind::Sukun);
  EXPECT_EQ(classify_codepoint(0x0663).kind, ScriptKind::ArabicDigit);
  EXPECT_EQ(classify_codepoint(U'7').kind, ScriptKind::ArabicDigit);
  EXPECT_EQ(classify_codepoint(0x060C).kind, ScriptKind::Punctuation);
  EXPECT_EQ(classify_codepoint(U' ').kind, ScriptKind::Whitespace);
  EXPECT_EQ(classify_codepoint(0x064B).kind, ScriptKind::Unknown);  // Tanwin
  EXPECT_EQ(classify_codepoint(0x06AF).kind, ScriptKind::Unknown);  // گ
}

TEST(Classify, TotalAndPureOverAllScalars) {
  for (char32_t c = 0; c <= 0x10FFFF; ++c) {
    if (c >= 0xD800 && c <= 0xDFFF) continue;
    const ScriptClass a = classify_codepoint(c);
    const ScriptClass b = classify_codepoint(c);
    ASSERT_EQ(a, b);
    ASSERT_EQ(a.kind == ScriptKind::BaseLetter, a.letter != nullptr);
  }
}

TEST(Inventory, ExactlyThreeSupplementalLetters) {
  std::vector<char32_t> supplemental;
  for (const Letter& l : letter_inventory()) {
    if (l.supplemental) supplemental.push_back(l.code);
  }
  EXPECT_EQ(supplemental, (std::vector<char32_t>{0x067E, 0x06A4, 0x06A8}));
  EXPECT_EQ(find_letter(0x067E)->ipa, "p");
  EXPECT_EQ(find_letter(0x06A4)->ipa, "v");
  EXPECT_EQ(find_letter(0x06A8)->ipa, "g");
}

TEST(Inventory, DadAndZahShareALabel) {
  EXPECT_EQ(find_letter(0x0636)->ipa, find_letter(0x0638)->ipa);
  EXPECT_NE(0x0636, 0x0638);
}

TEST(Vowels, FourQualitiesFourMarks) {
  EXPECT_EQ(vowel_mark(Vowel::A), 0x064Eu);
  EXPECT_EQ(vowel_mark(Vowel::E), 0x0659u);
  EXPECT_EQ(vowel_mark(Vowel::U), 0x064Fu);
  EXPECT_EQ(vowel_mark(Vowel::I), 0x0650u);
  for (Vowel v : kAllVowels) EXPECT_EQ(vowel_from_mark(vowel_mark(v)), v);
}

TEST(ParseGraphemes, Bash) {
  const auto gs = parse_graphemes("بَاش");
  ASSERT_EQ(gs.size(), 3u);
  EXPECT_EQ(gs[0], (Grapheme{cp::kBeh, false, false, Vowel::A}));
  EXPECT_EQ(gs[1], (Grapheme{cp::kAlef, false, false, std::nullopt}));
  EXPECT_EQ(gs[2], (Grapheme{cp::kSheen, false, false, std::nullopt}));
}

TEST(ParseGraphemes, Empty) { EXPECT_TRUE(parse_graphemes("").empty()); }

GraphemeError::Kind parse_error(std::string_view w) {
  try {
    parse_graphemes(w);
  } catch (const GraphemeError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << w;
  return GraphemeError::Kind::NotInInventory;
}

TEST(ParseGraphemes, StructuralErrors) {
  EXPECT_EQ(parse_error("َب"), GraphemeError::Kind::LeadingDiacritic);
  EXPECT_EQ(parse_error("بَُ"), GraphemeError::Kind::DuplicateVowel);
  EXPECT_EQ(parse_error("بَْ"), GraphemeError::Kind::VowelWithSukun);
  EXPECT_EQ(parse_error("بَْ"), GraphemeError::Kind::VowelWithSukun);
  EXPECT_EQ(parse_error("بّّ"), GraphemeError::Kind::DuplicateMark);
  EXPECT_EQ(parse_error("بa"), GraphemeError::Kind::NotInInventory);
}

TEST(ParseGraphemes, ShaddaCombinesWithVowelInEitherOrder) {
  const auto a = parse_graphemes("دَّ");
  const auto b = parse_graphemes("دَّ");
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a[0].shadda);
  EXPECT_EQ(a[0].vowel, Vowel::A);
}

TEST(RenderGraphemes, Examples) {
  const std::vector<Grapheme> bash = {{cp::kBeh, false, false, Vowel::A},
                                      {cp::kAlef, false, false, std::nullopt},
                                      {cp::kSheen, false, false, std::nullopt}};
  EXPECT_EQ(render_graphemes(bash), "بَاش");
  EXPECT_EQ(render_graphemes({}), "");
  const std::vector<Grapheme> dd = {{0x062F, true, false, Vowel::A}};
  EXPECT_EQ(render_graphemes(dd), "دَّ");
}

TEST(StripDiacritics, Examples) {
  EXPECT_EQ(strip_diacritics("بَاش"), "باش");
  EXPECT_EQ(strip_diacritics("باش"), "باش");
  EXPECT_EQ(strip_diacritics("abc"), "abc");
  EXPECT_EQ(strip_diacritics("بٌ"), "بٌ");  // Tanwin is not a NOTA mark
}

TEST(ScriptProperties, RoundTripOnRandomGraphemes) {
  Rng rng(11);
  for (int i = 0; i < 5000; ++i) {
    const auto gs = testing::random_graphemes(rng);
    const std::string rendered = render_graphemes(gs);
    ASSERT_EQ(parse_graphemes(rendered), gs) << rendered;
    const std::string shuffled = testing::render_shuffled(rng, gs);
    ASSERT_EQ(canonicalize(shuffled), rendered);
    ASSERT_EQ(render_graphemes(parse_graphemes(shuffled)), rendered);
  }
}

TEST(ScriptProperties, RenderStaysInsideInventory) {
  Rng rng(12);
  for (int i = 0; i < 2000; ++i) {
    for (char32_t c : to_code_points(render_graphemes(testing::random_graphemes(rng)))) {
      ASSERT_NE(classify_codepoint(c).kind, ScriptKind::Unknown);
    }
  }
}

TEST(ScriptProperties, StripIsIdempotentAndShrinks) {
  Rng rng(13);
  const auto words = testing::lexicon_words(Lexicon::builtin());
  for (int i = 0; i < 3000; ++i) {
    const std::string x = testing::random_text(rng, words);
    const std::string once = strip_diacritics(x);
    ASSERT_EQ(strip_diacritics(once), once);
    ASSERT_LE(count_code_points(once), count_code_points(x));
  }
}

}  // namespace
}  // namespace nota
