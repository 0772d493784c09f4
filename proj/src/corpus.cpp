#include "nota/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nota/tokenizer.hpp"
#include "nota/utf8.hpp"

namespace nota {
namespace {

using json = nlohmann::json;

json rule_counts(const std::map<std::string, std::size_t>& counts) {
  json out = json::object();
  for (const auto& [rule, n] : counts) out[rule] = n;
  return out;
}

}  // namespace

double CorpusReport::clean_word_ratio() const {
  return word_tokens == 0 ? 0.0
                          : static_cast<double>(clean_words) /
                                static_cast<double>(word_tokens);
}

FileReport analyze_document(std::string path, std::string_view text,
                            const Normalizer& normalizer) {
  FileReport report;
  report.path = std::move(path);
  if (!is_valid_utf8(text)) {
    report.malformed = true;
    return report;
  }
  const RunResult result = normalizer.run(text, RunMode::Check);
  for (const Diagnostic& d : result.diagnostics) {
    ++report.diagnostics_per_rule[std::string(rule_name(d.rule))];
  }
  for (const Token& t : tokenize(text)) {
    if (t.kind != TokenKind::Word) continue;
    ++report.word_tokens;
    const bool touched =
        std::any_of(result.diagnostics.begin(), result.diagnostics.end(),
                    [&](const Diagnostic& d) {
                      return d.span.overlaps(t.span) ||
                             (d.span.length() == 0 && t.span.contains(d.span));
                    });
    if (!touched) ++report.clean_words;
  }
  return report;
}

CorpusReport aggregate(std::vector<FileReport> files) {
  std::sort(files.begin(), files.end(),
            [](const FileReport& a, const FileReport& b) { return a.path < b.path; });
  CorpusReport report;
  report.files = files.size();
  for (const FileReport& f : files) {
    report.word_tokens += f.word_tokens;
    report.clean_words += f.clean_words;
    for (const auto& [rule, n] : f.diagnostics_per_rule) {
      report.diagnostics_per_rule[rule] += n;
    }
  }
  report.per_file = std::move(files);
  return report;
}

CorpusReport collect_corpus(const std::filesystem::path& root,
                            const Normalizer& normalizer) {
  namespace fs = std::filesystem;
  std::vector<fs::path> paths;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file()) paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<FileReport> files;
  for (const fs::path& p : paths) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
      throw fs::filesystem_error("cannot read", p,
                                 std::make_error_code(std::errc::permission_denied));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    files.push_back(analyze_document(p.lexically_relative(root).generic_string(),
                                     buf.str(), normalizer));
  }
  return aggregate(std::move(files));
}

std::string to_json(const CorpusReport& report) {
  json files = json::array();
  for (const FileReport& f : report.per_file) {
    files.push_back({
        {"path", f.path},
        {"malformed", f.malformed},
        {"word_tokens", f.word_tokens},
        {"clean_words", f.clean_words},
        {"diagnostics_per_rule", rule_counts(f.diagnostics_per_rule)},
    });
  }
  const json doc = {
      {"files", report.files},
      {"word_tokens", report.word_tokens},
      {"clean_words", report.clean_words},
      {"clean_word_ratio", report.clean_word_ratio()},
      {"diagnostics_per_rule", rule_counts(report.diagnostics_per_rule)},
      {"per_file", files},
  };
  return doc.dump(2) + "\n";
}

std::string diagnostics_to_json(std::string_view file,
                                const std::vector<Diagnostic>& diagnostics) {
  json out = json::array();
  for (const Diagnostic& d : diagnostics) {
    out.push_back({
        {"file", file},
        {"rule", rule_name(d.rule)},
        {"severity", severity_name(d.severity)},
        {"start", d.span.start},
        {"end", d.span.end},
        {"message", d.message},
        {"replacement", d.replacement ? json(*d.replacement) : json(nullptr)},
    });
  }
  return out.dump(2) + "\n";
}

}  // namespace nota
