#include "nota/pipeline.hpp"

#include <algorithm>

#include "nota/canonical.hpp"
#include "nota/rewrite.hpp"
#include "nota/script.hpp"
#include "nota/tokenizer.hpp"

namespace nota {
namespace {

Diagnostic to_original(const RewriteTrace& trace, Diagnostic d) {
  if (d.replacement) {
    const Edit e = trace.to_original(Edit{d.span, *d.replacement});
    d.span = e.span;
    d.replacement = e.replacement;
  } else {
    d.span = trace.to_original(d.span);
  }
  return d;
}

// Highest priority first; a fix is kept when it overlaps none already kept.
std::vector<const Diagnostic*> select_fixes(const std::vector<Diagnostic>& diags) {
  std::vector<const Diagnostic*> candidates;
  for (const Diagnostic& d : diags) {
    if (d.fixable()) candidates.push_back(&d);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Diagnostic* a, const Diagnostic* b) {
                     if (a->rule != b->rule) return a->rule < b->rule;
                     return a->span.start < b->span.start;
                   });
  std::vector<const Diagnostic*> chosen;
  for (const Diagnostic* d : candidates) {
    const bool clash = std::any_of(chosen.begin(), chosen.end(), [&](const Diagnostic* c) {
      return c->span.overlaps(d->span) ||
             (c->span.start == d->span.start &&
              (c->span.length() == 0 || d->span.length() == 0));
    });
    if (!clash) chosen.push_back(d);
  }
  std::sort(chosen.begin(), chosen.end(), [](const Diagnostic* a, const Diagnostic* b) {
    return a->span.start < b->span.start;
  });
  return chosen;
}

}  // namespace

bool RunResult::has_errors_or_warnings() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity != Severity::Info; });
}

Normalizer::Normalizer(Lexicon lexicon, RuleConfig config)
    : lexicon_(std::move(lexicon)), config_(std::move(config)) {
  if (config_.is_enabled(RuleId::Sep) && lexicon_.prepositions().empty()) {
    throw ConfigError("R-SEP is enabled but the preposition list is empty");
  }
  if (config_.max_passes < 1) throw ConfigError("max_passes must be at least 1");
}

RunResult Normalizer::run(std::string_view text, RunMode mode) const {
  RewriteTrace trace{std::string(text)};
  canonicalize(trace);

  RunResult result;
  if (mode != RunMode::Fix) {
    const auto tokens = tokenize(trace.current());
    for (Diagnostic& d : run_rules(trace.current(), tokens, lexicon_, config_)) {
      result.diagnostics.push_back(to_original(trace, std::move(d)));
    }
    std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                     diagnostic_less);
    result.output = std::string(text);
    result.passes_used = 1;
    return result;
  }

  std::vector<Diagnostic> applied;
  std::vector<Diagnostic> remaining;
  for (int pass = 1;; ++pass) {
    const std::string& current = trace.current();
    const auto tokens = tokenize(current);
    const auto diags = run_rules(current, tokens, lexicon_, config_);
    const auto chosen = select_fixes(diags);
    if (chosen.empty()) {
      for (const Diagnostic& d : diags) remaining.push_back(to_original(trace, d));
      result.passes_used = pass;
      break;
    }
    if (pass >= config_.max_passes) {
      throw PassCapExceeded("no fixpoint after " + std::to_string(config_.max_passes) +
                            " passes");
    }
    std::vector<Edit> edits;
    for (const Diagnostic* d : chosen) {
      Diagnostic original = to_original(trace, *d);
      result.fixes.push_back({d->rule, pass, original.span, *original.replacement});
      applied.push_back(std::move(original));
      edits.push_back({d->span, *d->replacement});
    }
    OffsetMap map;
    std::string next = apply_edits(current, edits, &map);
    trace.push(std::move(next), std::move(map));
  }

  result.output = trace.current();
  result.diagnostics = std::move(applied);
  result.diagnostics.insert(result.diagnostics.end(), remaining.begin(), remaining.end());
  std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                   diagnostic_less);
  return result;
}

RunResult normalize(std::string_view text, const Lexicon& lex,
                    const RuleConfig& config, RunMode mode) {
  return Normalizer(lex, config).run(text, mode);
}

bool normalize_equals_on_bare(std::string_view text, const Lexicon& lex,
                              const RuleConfig& config) {
  RuleConfig c = config;
  c.set_enabled(RuleId::Vow, false);
  c.set_enabled(RuleId::Art, false);
  const Normalizer n(lex, c);
  const std::string lhs = strip_diacritics(n.run(text, RunMode::Fix).output);
  const std::string rhs = n.run(strip_diacritics(text), RunMode::Fix).output;
  return lhs == rhs;
}

}  // namespace nota
