#include "nota/config.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace nota {
namespace {

TEST(RuleNames, RoundTrip) {
  for (RuleId id : kAllRules) EXPECT_EQ(parse_rule_name(rule_name(id)), id);
  EXPECT_EQ(rule_name(RuleId::Vow), "R-VOW");
  EXPECT_EQ(rule_name(RuleId::Sep), "R-SEP");
  EXPECT_EQ(parse_rule_name("R-XYZ"), std::nullopt);
}

TEST(RuleConfig, DefaultsEnableEverything) {
  const RuleConfig c;
  for (RuleId id : kAllRules) EXPECT_TRUE(c.is_enabled(id));
  EXPECT_EQ(c.max_passes, 4);
  EXPECT_TRUE(c.default_lexicon);
}

TEST(RuleConfig, OnlyEnablesOneRule) {
  const RuleConfig c = RuleConfig::only(RuleId::Fut);
  for (RuleId id : kAllRules) EXPECT_EQ(c.is_enabled(id), id == RuleId::Fut);
}

TEST(RuleConfig, ParsesAllSections) {
  const RuleConfig c = RuleConfig::parse(R"({
    "rules": {"R-SEP": false, "R-PRON": false},
    "lexicon": {"paths": ["extra", "/abs/lex"], "defaults": false},
    "tables": {"variant_letters": {"ڥ": "ڤ"},
               "fused_prepositions": {"مال": "مع ال"},
               "vowel_similarity": {"ø": "E"}},
    "max_passes": 6
  })",
                                         "/cfg");
  EXPECT_FALSE(c.is_enabled(RuleId::Sep));
  EXPECT_FALSE(c.is_enabled(RuleId::Pron));
  EXPECT_TRUE(c.is_enabled(RuleId::Fut));
  ASSERT_EQ(c.lexicon_paths.size(), 2u);
  EXPECT_EQ(c.lexicon_paths[0], std::filesystem::path("/cfg/extra"));
  EXPECT_EQ(c.lexicon_paths[1], std::filesystem::path("/abs/lex"));
  EXPECT_FALSE(c.default_lexicon);
  EXPECT_EQ(c.tables.variant_letters.at("ڥ"), "ڤ");
  EXPECT_EQ(c.tables.fused_prepositions.at("مال"), "مع ال");
  EXPECT_EQ(c.vowel_similarity.at("ø"), Vowel::E);
  EXPECT_EQ(c.max_passes, 6);
}

TEST(RuleConfig, EmptyDocumentIsDefault) {
  const RuleConfig c = RuleConfig::parse("{}");
  for (RuleId id : kAllRules) EXPECT_TRUE(c.is_enabled(id));
}

TEST(RuleConfig, RejectsBadDocuments) {
  for (const char* doc : {
           "not json",
           "[]",
           R"({"unknown": 1})",
           R"({"rules": {"R-XYZ": true}})",
           R"({"rules": {"R-SEP": "no"}})",
           R"({"lexicon": {"paths": "x"}})",
           R"({"lexicon": {"extra": 1}})",
           R"({"tables": {"vowel_similarity": {"œ": "O"}}})",
           R"({"tables": {"variant_letters": {"گ": 1}}})",
           R"({"max_passes": 0})",
           R"({"max_passes": 1.5})",
       }) {
    EXPECT_THROW(RuleConfig::parse(doc), ConfigError) << doc;
  }
}

TEST(RuleConfig, LoadResolvesRelativePaths) {
  const auto dir = std::filesystem::temp_directory_path() / "nota_config_test";
  std::filesystem::create_directories(dir / "lex");
  {
    std::ofstream(dir / "lex" / "known_words_extra.txt") << "سبسبس\n";
    std::ofstream(dir / "nota.json") << R"({"lexicon": {"paths": ["lex"]}})";
  }
  const RuleConfig c = RuleConfig::load(dir / "nota.json");
  ASSERT_EQ(c.lexicon_paths.size(), 1u);
  EXPECT_EQ(c.lexicon_paths[0], dir / "lex");

  const Lexicon lex = load_configured_lexicon(c);
  EXPECT_TRUE(lex.is_known_word("سبسبس"));
  // Other kinds keep their defaults.
  EXPECT_FALSE(lex.prepositions().empty());
  EXPECT_FALSE(lex.verbs().empty());
  std::filesystem::remove_all(dir);
}

TEST(RuleConfig, MissingFile) {
  EXPECT_THROW(RuleConfig::load("/nonexistent/nota.json"), ConfigError);
}

TEST(RuleConfig, TablesReachTheLexicon) {
  const RuleConfig c =
      RuleConfig::parse(R"({"tables": {"fused_prepositions": {"مال": "مع ال"}}})");
  EXPECT_EQ(load_configured_lexicon(c).fused_prepositions().at("مال"), "مع ال");
}

}  // namespace
}  // namespace nota
