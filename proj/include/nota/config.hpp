#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nota/lexicon.hpp"
#include "nota/script.hpp"

namespace nota {

// Declared in fix priority order: earlier rules win overlapping fixes.
enum class RuleId : std::uint8_t { Vow, Cons, Art, Amq, Imp, Fut, Pron, Sep };

inline constexpr std::array kAllRules = {
    RuleId::Vow, RuleId::Cons, RuleId::Art, RuleId::Amq,
    RuleId::Imp, RuleId::Fut,  RuleId::Pron, RuleId::Sep,
};

// Stable public names: "R-VOW", "R-CONS", ...
std::string_view rule_name(RuleId id);
std::optional<RuleId> parse_rule_name(std::string_view name);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Settings for one normalization run. Loaded from a JSON document:
//
//   {
//     "rules":   {"R-SEP": false, ...},
//     "lexicon": {"paths": ["dir-or-file", ...], "defaults": true},
//     "tables":  {"variant_letters":    {"گ": "ڨ"},
//                 "fused_prepositions": {"فال": "في ال"},
//                 "vowel_similarity":   {"œ": "U"}},
//     "max_passes": 4
//   }
//
// Every section is optional; unknown keys are errors. Relative lexicon paths
// resolve against the config file's directory.
struct RuleConfig {
  std::array<bool, kAllRules.size()> enabled{true, true, true, true,
                                             true, true, true, true};
  std::vector<std::filesystem::path> lexicon_paths;
  bool default_lexicon = true;
  LexiconOverrides tables;
  std::map<std::string, Vowel> vowel_similarity;
  int max_passes = 4;

  bool is_enabled(RuleId id) const {
    return enabled[static_cast<std::size_t>(id)];
  }
  void set_enabled(RuleId id, bool on) {
    enabled[static_cast<std::size_t>(id)] = on;
  }

  static RuleConfig only(RuleId id);
  static RuleConfig parse(std::string_view json,
                          const std::filesystem::path& base_dir = {});
  static RuleConfig load(const std::filesystem::path& file);
};

// Builtin sources overlaid with the configured paths and tables.
Lexicon load_configured_lexicon(const RuleConfig& config);

}  // namespace nota
