#include "nota/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nota {
namespace {

using json = nlohmann::json;

constexpr std::string_view kRuleNames[] = {
    "R-VOW", "R-CONS", "R-ART", "R-AMQ", "R-IMP", "R-FUT", "R-PRON", "R-SEP",
};

void reject_unknown(const json& object, std::initializer_list<std::string_view> keys,
                    std::string_view where) {
  if (!object.is_object()) {
    throw ConfigError(std::string(where) + " must be an object");
  }
  for (const auto& [key, _] : object.items()) {
    bool found = false;
    for (auto k : keys) found = found || k == key;
    if (!found) {
      throw ConfigError("unknown key '" + key + "' in " + std::string(where));
    }
  }
}

std::map<std::string, std::string> string_table(const json& j,
                                                std::string_view where) {
  if (!j.is_object()) throw ConfigError(std::string(where) + " must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) {
      throw ConfigError(std::string(where) + "." + key + " must be a string");
    }
    out.emplace(key, value.get<std::string>());
  }
  return out;
}

}  // namespace

std::string_view rule_name(RuleId id) {
  return kRuleNames[static_cast<std::size_t>(id)];
}

std::optional<RuleId> parse_rule_name(std::string_view name) {
  for (RuleId id : kAllRules) {
    if (rule_name(id) == name) return id;
  }
  return std::nullopt;
}

RuleConfig RuleConfig::only(RuleId id) {
  RuleConfig c;
  c.enabled.fill(false);
  c.set_enabled(id, true);
  return c;
}

RuleConfig RuleConfig::parse(std::string_view text,
                             const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(doc, {"rules", "lexicon", "tables", "max_passes"}, "config");

  RuleConfig config;
  if (doc.contains("rules")) {
    const json& rules = doc["rules"];
    if (!rules.is_object()) throw ConfigError("rules must be an object");
    for (const auto& [key, value] : rules.items()) {
      const auto id = parse_rule_name(key);
      if (!id) throw ConfigError("unknown rule id '" + key + "'");
      if (!value.is_boolean()) throw ConfigError("rules." + key + " must be a boolean");
      config.set_enabled(*id, value.get<bool>());
    }
  }
  if (doc.contains("lexicon")) {
    const json& lex = doc["lexicon"];
    reject_unknown(lex, {"paths", "defaults"}, "lexicon");
    if (lex.contains("paths")) {
      if (!lex["paths"].is_array()) throw ConfigError("lexicon.paths must be an array");
      for (const json& p : lex["paths"]) {
        if (!p.is_string()) throw ConfigError("lexicon.paths entries must be strings");
        std::filesystem::path path = p.get<std::string>();
        if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
        config.lexicon_paths.push_back(path);
      }
    }
    if (lex.contains("defaults")) {
      if (!lex["defaults"].is_boolean()) throw ConfigError("lexicon.defaults must be a boolean");
      config.default_lexicon = lex["defaults"].get<bool>();
    }
  }
  if (doc.contains("tables")) {
    const json& tables = doc["tables"];
    reject_unknown(tables, {"variant_letters", "fused_prepositions", "vowel_similarity"},
                   "tables");
    if (tables.contains("variant_letters")) {
      config.tables.variant_letters =
          string_table(tables["variant_letters"], "tables.variant_letters");
    }
    if (tables.contains("fused_prepositions")) {
      config.tables.fused_prepositions =
          string_table(tables["fused_prepositions"], "tables.fused_prepositions");
    }
    if (tables.contains("vowel_similarity")) {
      for (const auto& [phone, name] :
           string_table(tables["vowel_similarity"], "tables.vowel_similarity")) {
        const auto v = parse_vowel_name(name);
        if (!v) {
          throw ConfigError("tables.vowel_similarity." + phone +
                            " must be one of A, E, I, U");
        }
        config.vowel_similarity.emplace(phone, *v);
      }
    }
  }
  if (doc.contains("max_passes")) {
    const json& m = doc["max_passes"];
    if (!m.is_number_integer() || m.get<int>() < 1) {
      throw ConfigError("max_passes must be a positive integer");
    }
    config.max_passes = m.get<int>();
  }
  return config;
}

RuleConfig RuleConfig::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), file.parent_path());
}

Lexicon load_configured_lexicon(const RuleConfig& config) {
  std::vector<LexiconSource> user;
  if (!config.lexicon_paths.empty()) {
    user = read_lexicon_sources(config.lexicon_paths);
  }
  std::vector<LexiconSource> sources =
      config.default_lexicon
          ? merge_lexicon_sources(builtin_lexicon_sources(), std::move(user))
          : std::move(user);
  return Lexicon::load(sources, config.tables);
}

}  // namespace nota
