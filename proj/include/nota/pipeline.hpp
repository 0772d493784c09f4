#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nota/config.hpp"
#include "nota/lexicon.hpp"
#include "nota/rules.hpp"

namespace nota {

enum class RunMode : std::uint8_t {
  Check,   // report only
  Fix,     // apply Error and Warning replacements until nothing is left
  Strict,  // report only; Info counts as a failure
};

// One rule replacement applied in fix mode. Canonicalization of the input
// (folding, mark order) happens before the first pass and is not listed.
struct AppliedFix {
  RuleId rule = RuleId::Vow;
  int pass = 0;
  Span span;  // in the original input
  std::string replacement;
};

struct RunResult {
  std::string output;
  // Spans refer to the original input. In fix mode: every applied fix, then
  // whatever the final pass still reports (Info only, unless a fix could not
  // be applied).
  std::vector<Diagnostic> diagnostics;
  std::vector<AppliedFix> fixes;
  int passes_used = 0;

  bool has_errors_or_warnings() const;
};

class PassCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Normalizer {
 public:
  // Throws ConfigError when R-SEP is enabled with an empty preposition list.
  Normalizer(Lexicon lexicon, RuleConfig config);

  RunResult run(std::string_view text, RunMode mode) const;

  const Lexicon& lexicon() const { return lexicon_; }
  const RuleConfig& config() const { return config_; }

 private:
  Lexicon lexicon_;
  RuleConfig config_;
};

RunResult normalize(std::string_view text, const Lexicon& lex,
                    const RuleConfig& config, RunMode mode);

// strip_diacritics(Fix(x)) == Fix(strip_diacritics(x)), with the two rules
// that act on diacritics themselves (R-VOW, R-ART) switched off.
bool normalize_equals_on_bare(std::string_view text, const Lexicon& lex,
                              const RuleConfig& config = {});

}  // namespace nota
