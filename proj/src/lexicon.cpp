#include "nota/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "nota/script.hpp"
#include "nota/tokenizer.hpp"
#include "nota/utf8.hpp"

namespace nota {

// Defined in the generated builtin_lexicon.cpp.
std::vector<LexiconSource> builtin_lexicon_sources();

namespace {

enum class FileKind {
  Verbs,
  Prepositions,
  KnownWords,
  VariantLetters,
  VariantWords,
  FusedPrepositions,
};

constexpr std::pair<std::string_view, FileKind> kFileKinds[] = {
    {"verbs", FileKind::Verbs},
    {"prepositions", FileKind::Prepositions},
    {"known_words", FileKind::KnownWords},
    {"variant_letters", FileKind::VariantLetters},
    {"variant_words", FileKind::VariantWords},
    {"fused_prepositions", FileKind::FusedPrepositions},
};

std::optional<FileKind> file_kind(std::string_view name) {
  const std::string base = std::filesystem::path(name).filename().string();
  for (const auto& [prefix, kind] : kFileKinds) {
    if (base.starts_with(prefix)) return kind;
  }
  return std::nullopt;
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      return fields;
    }
    fields.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

struct Line {
  std::size_t number;
  std::vector<std::string> fields;
};

std::vector<Line> data_lines(const LexiconSource& source) {
  std::vector<Line> lines;
  std::istringstream in(source.content);
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    if (!is_valid_utf8(raw)) {
      throw LexiconError(LexiconError::Kind::Parse, source.name, number,
                         "line is not valid UTF-8");
    }
    lines.push_back({number, split_tabs(raw)});
  }
  return lines;
}

bool ends_with_long_i(std::string_view word) {
  const std::u32string cps = to_code_points(word);
  return !cps.empty() && cps.back() == cp::kYeh;
}

std::optional<char32_t> single_code_point(std::string_view text) {
  const std::u32string cps = to_code_points(text);
  if (cps.size() != 1) return std::nullopt;
  return cps.front();
}

class Loader {
 public:
  Loader(std::string file) : file_(std::move(file)) {}

  [[noreturn]] void fail(LexiconError::Kind kind, std::size_t line,
                         const std::string& detail) const {
    throw LexiconError(kind, file_, line, detail);
  }

  void require_word(std::size_t line, std::string_view field,
                    std::string_view value) const {
    if (!is_bare_word(value)) {
      fail(LexiconError::Kind::InvalidScript, line,
           std::string(field) + " '" + std::string(value) +
               "' is not an undiacritized Arabic-script word");
    }
  }

  void require_columns(const Line& l, std::size_t min, std::size_t max) const {
    if (l.fields.size() < min || l.fields.size() > max) {
      fail(LexiconError::Kind::Parse, l.number,
           "expected " + std::to_string(min) + (min == max ? "" : "-" + std::to_string(max)) +
               " tab-separated columns, found " +
               std::to_string(l.fields.size()));
    }
  }

 private:
  std::string file_;
};

void check_variant_letter(const Loader& loader, std::size_t line,
                          std::string_view from, std::string_view to,
                          std::map<char32_t, char32_t>& out,
                          bool allow_replace) {
  const auto source = single_code_point(from);
  const auto target = single_code_point(to);
  if (!source || !target) {
    loader.fail(LexiconError::Kind::Parse, line,
                "variant letter entries map one letter to one letter");
  }
  if (!is_word_char(*source) || find_letter(*source) != nullptr ||
      is_arabic_mark(*source)) {
    loader.fail(LexiconError::Kind::InvalidScript, line,
                "variant letter '" + std::string(from) +
                    "' must be an Arabic-script letter outside the inventory");
  }
  if (!is_supplemental_letter(*target)) {
    loader.fail(LexiconError::Kind::InvalidScript, line,
                "variant letter target '" + std::string(to) +
                    "' must be one of پ ڤ ڨ");
  }
  if (!allow_replace && out.contains(*source)) {
    loader.fail(LexiconError::Kind::DuplicateEntry, line,
                "duplicate entry '" + std::string(from) + "'");
  }
  out[*source] = *target;
}

void check_fused(const Loader& loader, std::size_t line, std::string_view key,
                 std::string_view expansion) {
  loader.require_word(line, "fused prefix", key);
  if (expansion.empty() || expansion.front() == ' ' ||
      expansion.back() == ' ' || expansion.find("  ") != std::string::npos ||
      expansion.find(' ') == std::string::npos) {
    loader.fail(LexiconError::Kind::Parse, line,
                "fused expansion must be words separated by single spaces");
  }
  std::size_t start = 0;
  while (start <= expansion.size()) {
    const std::size_t space = expansion.find(' ', start);
    const std::size_t end = space == std::string_view::npos ? expansion.size() : space;
    loader.require_word(line, "fused expansion", expansion.substr(start, end - start));
    start = end + 1;
  }
}

}  // namespace

LexiconError::LexiconError(Kind kind, std::string file, std::size_t line,
                           const std::string& detail)
    : std::runtime_error(file + (line ? ":" + std::to_string(line) : "") +
                         ": " + detail),
      kind_(kind),
      file_(std::move(file)),
      line_(line) {}

bool is_bare_word(std::string_view word) {
  if (word.empty()) return false;
  for (std::size_t pos = 0; pos < word.size();) {
    const auto d = decode_utf8(word, pos);
    if (!d.valid || classify_codepoint(d.cp).kind != ScriptKind::BaseLetter) {
      return false;
    }
    pos += d.length;
  }
  const auto tokens = tokenize(word);
  return tokens.size() == 1 && tokens.front().kind == TokenKind::Word;
}

Lexicon Lexicon::load(std::span<const LexiconSource> sources,
                      const LexiconOverrides& overrides) {
  std::vector<const LexiconSource*> ordered;
  for (const auto& s : sources) ordered.push_back(&s);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const LexiconSource* a, const LexiconSource* b) {
                     return a->name < b->name;
                   });

  Lexicon lex;
  for (const LexiconSource* source : ordered) {
    const Loader loader(source->name);
    const auto kind = file_kind(source->name);
    if (!kind) {
      loader.fail(LexiconError::Kind::Parse, 0,
                  "unrecognized lexicon file name (expected verbs, "
                  "prepositions, known_words, variant_letters, variant_words "
                  "or fused_prepositions)");
    }
    for (const Line& l : data_lines(*source)) {
      const auto& f = l.fields;
      switch (*kind) {
        case FileKind::Verbs: {
          loader.require_columns(l, 3, 5);
          VerbEntry e;
          e.citation = f[0];
          e.present_3sg = f[1];
          loader.require_word(l.number, "citation form", e.citation);
          loader.require_word(l.number, "present 3sg", e.present_3sg);
          if (f[2] != "0" && f[2] != "1") {
            loader.fail(LexiconError::Kind::Parse, l.number,
                        "ends-long-i flag must be 0 or 1");
          }
          e.present_ends_long_i = f[2] == "1";
          if (e.present_ends_long_i != ends_with_long_i(e.present_3sg)) {
            loader.fail(LexiconError::Kind::Parse, l.number,
                        "ends-long-i flag disagrees with present form '" +
                            e.present_3sg + "'");
          }
          if (f.size() > 3 && !f[3].empty()) {
            loader.require_word(l.number, "present 2sg", f[3]);
            e.present_2sg = f[3];
          }
          if (f.size() > 4 && !f[4].empty()) {
            loader.require_word(l.number, "irregular imperative", f[4]);
            if (!e.present_2sg || !e.present_2sg->starts_with(to_utf8(cp::kTeh))) {
              loader.fail(LexiconError::Kind::Parse, l.number,
                          "an irregular imperative needs a present 2sg "
                          "starting with ت");
            }
            e.irregular_imperative = f[4];
          }
          if (lex.verbs_.contains(e.citation)) {
            loader.fail(LexiconError::Kind::DuplicateEntry, l.number,
                        "duplicate entry '" + e.citation + "'");
          }
          lex.verbs_.emplace(e.citation, e);
          break;
        }
        case FileKind::Prepositions:
        case FileKind::KnownWords: {
          loader.require_columns(l, 1, 1);
          auto& set = *kind == FileKind::Prepositions ? lex.prepositions_
                                                      : lex.known_words_;
          loader.require_word(l.number, "word", f[0]);
          if (!set.insert(f[0]).second) {
            loader.fail(LexiconError::Kind::DuplicateEntry, l.number,
                        "duplicate entry '" + f[0] + "'");
          }
          break;
        }
        case FileKind::VariantLetters:
          loader.require_columns(l, 2, 2);
          check_variant_letter(loader, l.number, f[0], f[1],
                               lex.variant_letters_, false);
          break;
        case FileKind::VariantWords: {
          loader.require_columns(l, 2, 2);
          loader.require_word(l.number, "variant word", f[0]);
          loader.require_word(l.number, "canonical spelling", f[1]);
          const std::u32string from = to_code_points(f[0]);
          const std::u32string to = to_code_points(f[1]);
          bool ok = from.size() == to.size() && from != to;
          for (std::size_t i = 0; ok && i < from.size(); ++i) {
            ok = from[i] == to[i] || is_supplemental_letter(to[i]);
          }
          if (!ok) {
            loader.fail(LexiconError::Kind::Parse, l.number,
                        "canonical spelling may only differ by supplemental "
                        "letters (پ ڤ ڨ)");
          }
          if (!lex.variant_words_.emplace(f[0], f[1]).second) {
            loader.fail(LexiconError::Kind::DuplicateEntry, l.number,
                        "duplicate entry '" + f[0] + "'");
          }
          break;
        }
        case FileKind::FusedPrepositions:
          loader.require_columns(l, 2, 2);
          check_fused(loader, l.number, f[0], f[1]);
          if (!lex.fused_prepositions_.emplace(f[0], f[1]).second) {
            loader.fail(LexiconError::Kind::DuplicateEntry, l.number,
                        "duplicate entry '" + f[0] + "'");
          }
          break;
      }
    }
  }

  const Loader config_loader("config tables");
  for (const auto& [from, to] : overrides.variant_letters) {
    check_variant_letter(config_loader, 0, from, to, lex.variant_letters_, true);
  }
  for (const auto& [key, expansion] : overrides.fused_prepositions) {
    check_fused(config_loader, 0, key, expansion);
    lex.fused_prepositions_[key] = expansion;
  }

  lex.build_indices();
  return lex;
}

void Lexicon::build_indices() {
  const std::string yeh = to_utf8(cp::kYeh);
  const std::string prefixes[] = {yeh, to_utf8(cp::kTeh), to_utf8(cp::kNoon)};
  const std::string plural = to_utf8(cp::kWaw);
  for (const auto& [citation, e] : verbs_) {
    surface_index_[e.citation].insert({0, citation});
    surface_index_[e.present_3sg].insert({1, citation});
    if (e.present_2sg) {
      surface_index_[*e.present_2sg].insert({2, citation});
      imperfective_.insert(*e.present_2sg);
    }
    if (e.irregular_imperative) {
      surface_index_[*e.irregular_imperative].insert({3, citation});
      irregular_index_.emplace(*e.irregular_imperative, citation);
    }
    imperfective_.insert(e.present_3sg);
    if (e.present_3sg.starts_with(yeh)) {
      const std::string stem = e.present_3sg.substr(yeh.size());
      for (const auto& p : prefixes) {
        imperfective_.insert(p + stem);
        imperfective_.insert(p + stem + plural);
      }
    }
  }
}

const VerbEntry* Lexicon::lookup_verb_by_surface(std::string_view word) const {
  const auto it = surface_index_.find(strip_diacritics(word));
  if (it == surface_index_.end() || it->second.empty()) return nullptr;
  return &verbs_.at(it->second.begin()->second);
}

const VerbEntry* Lexicon::find_citation(std::string_view citation) const {
  const auto it = verbs_.find(std::string(citation));
  return it == verbs_.end() ? nullptr : &it->second;
}

const VerbEntry* Lexicon::find_irregular_imperative(std::string_view word) const {
  const auto it = irregular_index_.find(std::string(word));
  return it == irregular_index_.end() ? nullptr : &verbs_.at(it->second);
}

bool Lexicon::is_imperfective(std::string_view word) const {
  return imperfective_.contains(std::string(word));
}

bool Lexicon::is_known_word(std::string_view word) const {
  return known_words_.contains(std::string(word));
}

bool Lexicon::is_preposition(std::string_view word) const {
  return prepositions_.contains(std::string(word));
}

bool Lexicon::is_listed(std::string_view word) const {
  return is_known_word(word) || is_preposition(word) ||
         surface_index_.contains(std::string(word)) || is_imperfective(word);
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon lex = load(builtin_lexicon_sources());
  return lex;
}

std::vector<LexiconSource> read_lexicon_sources(
    std::span<const std::filesystem::path> paths) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const fs::path& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
      }
    } else {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<LexiconSource> sources;
  for (const fs::path& f : files) {
    std::ifstream in(f, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read lexicon file " + f.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    sources.push_back({f.string(), buf.str()});
  }
  return sources;
}

std::vector<LexiconSource> merge_lexicon_sources(
    std::vector<LexiconSource> builtin, std::vector<LexiconSource> user) {
  std::set<FileKind> replaced;
  for (const auto& s : user) {
    if (auto k = file_kind(s.name)) replaced.insert(*k);
  }
  std::vector<LexiconSource> out;
  for (auto& s : builtin) {
    const auto k = file_kind(s.name);
    if (!k || !replaced.contains(*k)) out.push_back(std::move(s));
  }
  for (auto& s : user) out.push_back(std::move(s));
  return out;
}

}  // namespace nota
