#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nota/pipeline.hpp"

namespace nota {

struct FileReport {
  std::string path;  // relative to the corpus root, '/' separated
  bool malformed = false;  // not valid UTF-8; counts stay zero
  std::size_t word_tokens = 0;
  std::size_t clean_words = 0;  // words no diagnostic touches
  std::map<std::string, std::size_t> diagnostics_per_rule;
};

struct CorpusReport {
  std::size_t files = 0;
  std::size_t word_tokens = 0;
  std::size_t clean_words = 0;
  std::map<std::string, std::size_t> diagnostics_per_rule;
  std::vector<FileReport> per_file;  // sorted by path

  // 0 for a corpus without words.
  double clean_word_ratio() const;
};

// Check-mode statistics for one document.
FileReport analyze_document(std::string path, std::string_view text,
                            const Normalizer& normalizer);

// Sorts by path and sums the totals.
CorpusReport aggregate(std::vector<FileReport> files);

// Every regular file below `root`, recursively. Throws
// std::filesystem::filesystem_error when the directory cannot be read.
CorpusReport collect_corpus(const std::filesystem::path& root,
                            const Normalizer& normalizer);

// Key-sorted JSON, two-space indent, trailing newline.
std::string to_json(const CorpusReport& report);

// One array per file of
// {"end","file","message","replacement","rule","severity","start"}.
std::string diagnostics_to_json(std::string_view file,
                                const std::vector<Diagnostic>& diagnostics);

}  // namespace nota
