// nota: normalize, lint and inspect Tunisian Arabic text.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nota/config.hpp"
#include "nota/corpus.hpp"
#include "nota/lexicon.hpp"
#include "nota/loanword.hpp"
#include "nota/pipeline.hpp"
#include "nota/romanizer.hpp"
#include "nota/utf8.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kClean = 0;
constexpr int kFindings = 1;
constexpr int kFailure = 2;

// Thrown for anything that maps to exit status 2.
struct Fatal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Fatal("cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw Fatal("cannot write " + *path);
  out << text;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

struct Setup {
  std::string config_path;
  std::vector<std::string> lexicon_paths;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON configuration file");
    cmd->add_option("--lexicon", lexicon_paths,
                    "lexicon file or directory, replacing the default files of "
                    "the same kind");
  }

  nota::RuleConfig config() const {
    nota::RuleConfig c;
    if (!config_path.empty()) c = nota::RuleConfig::load(config_path);
    for (const auto& p : lexicon_paths) c.lexicon_paths.emplace_back(p);
    return c;
  }

  nota::Normalizer normalizer() const {
    nota::RuleConfig c = config();
    nota::Lexicon lex = nota::load_configured_lexicon(c);
    return nota::Normalizer(std::move(lex), std::move(c));
  }
};

// "file:line:col: severity [RULE] message", columns in code points.
std::string format_text(const std::string& file, std::string_view text,
                        const std::vector<nota::Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags) {
    const std::string_view before = text.substr(0, d.span.start);
    const std::size_t nl = before.rfind('\n');
    const std::size_t line = 1 + static_cast<std::size_t>(
                                     std::count(before.begin(), before.end(), '\n'));
    const std::size_t col =
        1 + nota::count_code_points(nl == std::string_view::npos ? before
                                                                 : before.substr(nl + 1));
    out += file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
           std::string(nota::severity_name(d.severity)) + " [" +
           std::string(nota::rule_name(d.rule)) + "] " + d.message;
    if (d.replacement) out += " -> \"" + *d.replacement + "\"";
    out += "\n";
  }
  return out;
}

int cmd_normalize(const Setup& setup, const std::string& mode_name,
                  const std::string& format, const std::vector<std::string>& files,
                  const std::optional<std::string>& output) {
  const nota::RunMode mode = mode_name == "fix"      ? nota::RunMode::Fix
                             : mode_name == "strict" ? nota::RunMode::Strict
                                                     : nota::RunMode::Check;
  if (output && files.size() > 1) throw Fatal("--output takes a single input");
  const nota::Normalizer normalizer = setup.normalizer();

  int status = kClean;
  std::string fixed;
  for (const std::string& file : files) {
    const std::string text = read_input(file);
    if (!nota::is_valid_utf8(text)) throw Fatal(file + ": input is not valid UTF-8");
    const nota::RunResult result = normalizer.run(text, mode);
    const std::string name = file == "-" ? "<stdin>" : file;
    const std::string report = format == "json"
                                   ? nota::diagnostics_to_json(name, result.diagnostics)
                                   : format_text(name, text, result.diagnostics);
    bool findings = false;
    switch (mode) {
      case nota::RunMode::Check:
        findings = result.has_errors_or_warnings();
        break;
      case nota::RunMode::Strict:
        findings = !result.diagnostics.empty();
        break;
      case nota::RunMode::Fix:
        findings = result.output != text || result.has_errors_or_warnings();
        break;
    }
    if (findings) status = kFindings;
    if (mode == nota::RunMode::Fix) {
      fixed += result.output;
      std::cerr << report;
    } else if (!result.diagnostics.empty() || format == "json") {
      std::cout << report;
    }
  }
  if (mode == nota::RunMode::Fix) write_output(output, fixed);
  return status;
}

int cmd_stats(const Setup& setup, const std::string& dir,
              const std::optional<std::string>& output) {
  if (!fs::is_directory(dir)) throw Fatal("not a directory: " + dir);
  const nota::Normalizer normalizer = setup.normalizer();
  nota::CorpusReport report;
  try {
    report = nota::collect_corpus(dir, normalizer);
  } catch (const fs::filesystem_error& e) {
    throw Fatal(e.what());
  }
  for (const auto& f : report.per_file) {
    if (f.malformed) std::cerr << f.path << ": skipped, not valid UTF-8\n";
  }
  write_output(output, nota::to_json(report));
  return kClean;
}

int cmd_translit(const Setup& setup, const std::string& input, bool diacritized) {
  const nota::Transliterator translit(setup.config().vowel_similarity);
  const auto mode = diacritized ? nota::ScriptMode::Diacritized : nota::ScriptMode::Bare;
  int status = kClean;
  const auto lines = lines_of(read_input(input));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t") == std::string::npos) {
      std::cout << "\n";
      continue;
    }
    try {
      std::cout << translit.transliterate(nota::parse_phonemic_line(lines[i]), mode)
                << "\n";
    } catch (const nota::TranslitError& e) {
      std::cerr << "line " << i + 1 << ": " << e.what() << "\n";
      std::cout << "\n";
      status = kFindings;
    }
  }
  return status;
}

int cmd_romanize(const std::string& input, const std::string& mode_name) {
  int status = kClean;
  const auto lines = lines_of(read_input(input));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::istringstream words(lines[i]);
    std::string out;
    for (std::string w; words >> w;) {
      bool marked = w != nota::strip_diacritics(w);
      const auto mode = mode_name == "bare"          ? nota::ScriptMode::Bare
                        : mode_name == "diacritized" ? nota::ScriptMode::Diacritized
                        : marked                     ? nota::ScriptMode::Diacritized
                                                     : nota::ScriptMode::Bare;
      if (!out.empty()) out += " ";
      try {
        out += nota::romanize_to_string(w, mode);
      } catch (const nota::RomanizeError& e) {
        std::cerr << "line " << i + 1 << ": " << w << ": " << e.what() << "\n";
        out += "?";
        status = kFindings;
      }
    }
    std::cout << out << "\n";
  }
  return status;
}

int cmd_lexicon_validate(const std::vector<std::string>& paths, bool defaults) {
  nota::RuleConfig c;
  c.default_lexicon = defaults;
  for (const auto& p : paths) c.lexicon_paths.emplace_back(p);
  const nota::Lexicon lex = nota::load_configured_lexicon(c);
  std::cout << "ok: " << lex.verbs().size() << " verbs, " << lex.prepositions().size()
            << " prepositions, " << lex.known_words().size() << " known words, "
            << lex.variant_letters().size() << " variant letters, "
            << lex.variant_words().size() << " variant words, "
            << lex.fused_prepositions().size() << " fused prepositions\n";
  return kClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalize and lint Tunisian Arabic text in NOTA orthography"};
  app.require_subcommand(1);

  Setup setup;

  auto* normalize = app.add_subcommand("normalize", "check or fix text");
  std::string mode = "check";
  auto* check_flag = normalize->add_flag("--check", "report diagnostics (default)");
  auto* fix_flag = normalize->add_flag("--fix", "write the normalized text");
  auto* strict_flag = normalize->add_flag("--strict", "like --check, failing on Info too");
  check_flag->excludes(fix_flag)->excludes(strict_flag);
  fix_flag->excludes(strict_flag);
  std::string format = "text";
  normalize->add_option("--format", format, "diagnostic format")
      ->check(CLI::IsMember({"text", "json"}));
  std::optional<std::string> output;
  normalize->add_option("-o,--output", output, "output file for --fix");
  std::vector<std::string> files;
  normalize->add_option("files", files, "input files, - for standard input");
  setup.add_options(normalize);

  auto* stats = app.add_subcommand("stats", "corpus statistics as JSON");
  std::string stats_dir;
  stats->add_option("dir", stats_dir, "corpus directory")->required();
  std::optional<std::string> stats_out;
  stats->add_option("-o,--output", stats_out, "report file");
  setup.add_options(stats);

  auto* translit = app.add_subcommand("translit", "transliterate phonemic loanwords");
  std::string translit_in = "-";
  translit->add_option("input", translit_in, "input file, - for standard input");
  bool diacritized = false;
  translit->add_flag("--diacritized", diacritized, "write vowel diacritics");
  translit->add_option("--config", setup.config_path, "JSON configuration file");

  auto* romanize = app.add_subcommand("romanize", "broad phonemic transcription");
  std::string romanize_in = "-";
  romanize->add_option("input", romanize_in, "input file, - for standard input");
  std::string romanize_mode = "auto";
  romanize->add_option("--mode", romanize_mode, "auto, bare or diacritized")
      ->check(CLI::IsMember({"auto", "bare", "diacritized"}));

  auto* lexicon = app.add_subcommand("lexicon", "lexicon tools");
  lexicon->require_subcommand(1);
  auto* validate = lexicon->add_subcommand("validate", "load and check lexicon files");
  std::vector<std::string> validate_paths;
  validate->add_option("paths", validate_paths, "files or directories");
  bool no_defaults = false;
  validate->add_flag("--no-defaults", no_defaults, "do not merge the default lexicon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kClean : kFailure;
  }

  try {
    if (*normalize) {
      if (*fix_flag) mode = "fix";
      if (*strict_flag) mode = "strict";
      if (files.empty()) files.push_back("-");
      return cmd_normalize(setup, mode, format, files, output);
    }
    if (*stats) return cmd_stats(setup, stats_dir, stats_out);
    if (*translit) return cmd_translit(setup, translit_in, diacritized);
    if (*romanize) return cmd_romanize(romanize_in, romanize_mode);
    if (*validate) return cmd_lexicon_validate(validate_paths, !no_defaults);
  } catch (const Fatal& e) {
    std::cerr << "nota: " << e.what() << "\n";
  } catch (const nota::ConfigError& e) {
    std::cerr << "nota: config: " << e.what() << "\n";
  } catch (const nota::LexiconError& e) {
    std::cerr << "nota: lexicon: " << e.what() << "\n";
  } catch (const nota::PassCapExceeded& e) {
    std::cerr << "nota: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "nota: " << e.what() << "\n";
  }
  return kFailure;
}
