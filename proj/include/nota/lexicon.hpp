#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nota {

struct VerbEntry {
  std::string citation;     // past 3sg masc, undiacritized
  std::string present_3sg;  // e.g. يمشي
  bool present_ends_long_i = false;
  std::optional<std::string> present_2sg;
  std::optional<std::string> irregular_imperative;

  friend bool operator==(const VerbEntry&, const VerbEntry&) = default;
};

// One named input file. The name's basename selects the format:
//   verbs*.tsv               citation, present-3sg, ends-long-i (0/1),
//                            present-2sg, irregular imperative
//   prepositions*            one preposition per line
//   known_words*             one undiacritized word per line
//   variant_letters*.tsv     letter, canonical supplemental letter
//   variant_words*.tsv       word, canonical spelling
//   fused_prepositions*.tsv  fused prefix, space-separated expansion
// Lines are UTF-8, tab separated; blank lines and '#' lines are ignored.
struct LexiconSource {
  std::string name;
  std::string content;
};

class LexiconError : public std::runtime_error {
 public:
  enum class Kind { Parse, DuplicateEntry, InvalidScript };

  LexiconError(Kind kind, std::string file, std::size_t line,
               const std::string& detail);

  Kind kind() const { return kind_; }
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::string file_;
  std::size_t line_;
};

// Table entries layered over the loaded files.
struct LexiconOverrides {
  std::map<std::string, std::string> variant_letters;
  std::map<std::string, std::string> fused_prepositions;
};

class Lexicon {
 public:
  Lexicon() = default;

  // Sources are processed in name order, so the result does not depend on
  // the order they are passed in.
  static Lexicon load(std::span<const LexiconSource> sources,
                      const LexiconOverrides& overrides = {});

  // The lexicon shipped with the library.
  static const Lexicon& builtin();

  const std::map<std::string, VerbEntry>& verbs() const { return verbs_; }
  const std::set<std::string>& prepositions() const { return prepositions_; }
  const std::set<std::string>& known_words() const { return known_words_; }
  const std::map<char32_t, char32_t>& variant_letters() const {
    return variant_letters_;
  }
  const std::map<std::string, std::string>& variant_words() const {
    return variant_words_;
  }
  const std::map<std::string, std::string>& fused_prepositions() const {
    return fused_prepositions_;
  }

  // Matches the citation form first, then present 3sg, present 2sg and the
  // irregular imperative. Diacritics on `word` are ignored.
  const VerbEntry* lookup_verb_by_surface(std::string_view word) const;
  const VerbEntry* find_citation(std::string_view citation) const;
  const VerbEntry* find_irregular_imperative(std::string_view word) const;

  // Imperfective forms: each present 3sg with its ي prefix swapped for
  // ي/ت/ن, with and without plural و, plus the listed present 2sg.
  bool is_imperfective(std::string_view word) const;

  bool is_known_word(std::string_view word) const;
  bool is_preposition(std::string_view word) const;
  // Known word, preposition or any listed verb form.
  bool is_listed(std::string_view word) const;

 private:
  void build_indices();

  std::map<std::string, VerbEntry> verbs_;
  std::set<std::string> prepositions_;
  std::set<std::string> known_words_;
  std::map<char32_t, char32_t> variant_letters_;
  std::map<std::string, std::string> variant_words_;
  std::map<std::string, std::string> fused_prepositions_;

  // surface form -> (priority, citation)
  std::map<std::string, std::set<std::pair<int, std::string>>> surface_index_;
  std::map<std::string, std::string> irregular_index_;
  std::set<std::string> imperfective_;
};

std::vector<LexiconSource> builtin_lexicon_sources();

// Reads files, or every regular file of a directory, as lexicon sources.
// Throws std::runtime_error when a path cannot be read.
std::vector<LexiconSource> read_lexicon_sources(
    std::span<const std::filesystem::path> paths);

// Builtin sources with every file kind present in `user` replaced by the
// user's files of that kind.
std::vector<LexiconSource> merge_lexicon_sources(
    std::vector<LexiconSource> builtin, std::vector<LexiconSource> user);

// True when `word` is non-empty and made only of inventory base letters.
bool is_bare_word(std::string_view word);

}  // namespace nota
