#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nota/config.hpp"
#include "nota/lexicon.hpp"
#include "nota/rewrite.hpp"
#include "nota/tokenizer.hpp"

namespace nota {

// Error: safe to apply unconditionally. Warning: applied in fix mode, backed
// by lexicon evidence. Info: suggestion only, never applied.
enum class Severity : std::uint8_t { Error, Warning, Info };

std::string_view severity_name(Severity s);  // "error", "warning", "info"

struct Diagnostic {
  RuleId rule = RuleId::Vow;
  Span span;
  Severity severity = Severity::Info;
  std::string message;
  std::optional<std::string> replacement;

  bool fixable() const {
    return severity != Severity::Info && replacement.has_value();
  }

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// Order used for every diagnostic list: span start, then rule name, then end.
bool diagnostic_less(const Diagnostic& a, const Diagnostic& b);

class NotSecondPerson : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Imperative from the present 2sg: the leading ت is dropped (تاكل -> اكل).
std::string derive_imperative(std::string_view present_2sg);

// Runs one rule over already tokenized, canonical text. Spans index `text`.
std::vector<Diagnostic> run_rule(RuleId rule, std::string_view text,
                                 std::span<const Token> tokens,
                                 const Lexicon& lex);

// Runs every enabled rule; the result is sorted with diagnostic_less.
std::vector<Diagnostic> run_rules(std::string_view text,
                                  std::span<const Token> tokens,
                                  const Lexicon& lex, const RuleConfig& config);
std::vector<Diagnostic> run_rules(std::string_view text, const Lexicon& lex,
                                  const RuleConfig& config);

}  // namespace nota
