#include "nota/rules.hpp"

#include <algorithm>

#include "nota/script.hpp"
#include "nota/utf8.hpp"

namespace nota {
namespace {

struct Mark {
  char32_t code;
  Span span;
};

// A base letter (or nothing, for marks at the start of a word) with the
// marks that follow it.
struct Cluster {
  char32_t base = 0;
  Span span;
  Span base_span;
  std::vector<Mark> marks;
};

struct Word {
  std::string_view text;  // whole document
  Span span;
  std::vector<Cluster> clusters;
  std::u32string skeleton;          // base letters only
  std::vector<std::size_t> letter;  // skeleton index -> cluster index

  std::string bare() const { return to_utf8(skeleton); }

  // Original bytes of the clusters carrying skeleton letters [from, to).
  std::string_view letters(std::size_t from, std::size_t to) const {
    if (from >= to) return {};
    const std::size_t start = clusters[letter[from]].span.start;
    const std::size_t end = clusters[letter[to - 1]].span.end;
    return text.substr(start, end - start);
  }
  std::string_view bytes() const { return text.substr(span.start, span.length()); }
};

bool is_mark(char32_t c) { return is_nota_mark(c) || is_arabic_mark(c); }

Word analyze(std::string_view text, const Token& token) {
  Word w{text, token.span, {}, {}, {}};
  for (std::size_t pos = token.span.start; pos < token.span.end;) {
    const auto d = decode_utf8(text, pos);
    const Span s{pos, pos + d.length};
    if (is_mark(d.cp)) {
      if (w.clusters.empty()) w.clusters.push_back({0, {pos, pos}, {pos, pos}, {}});
      w.clusters.back().marks.push_back({d.cp, s});
      w.clusters.back().span.end = s.end;
    } else {
      w.letter.push_back(w.clusters.size());
      w.skeleton.push_back(d.cp);
      w.clusters.push_back({d.cp, s, s, {}});
    }
    pos += d.length;
  }
  return w;
}

std::u32string u32(std::string_view s) { return to_code_points(s); }

bool ends_with(const std::u32string& s, std::u32string_view suffix) {
  return s.size() >= suffix.size() &&
         std::u32string_view(s).substr(s.size() - suffix.size()) == suffix;
}

Diagnostic make(RuleId rule, Span span, Severity severity, std::string message,
                std::optional<std::string> replacement = std::nullopt) {
  return {rule, span, severity, std::move(message), std::move(replacement)};
}

template <typename F>
void for_each_word(std::string_view text, std::span<const Token> tokens, F&& f) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind == TokenKind::Word) f(analyze(text, tokens[i]), i);
  }
}

// ---------------------------------------------------------------------------

void rule_cons(const Word& w, const Lexicon& lex, std::vector<Diagnostic>& out) {
  bool letter_fix = false;
  for (const Cluster& c : w.clusters) {
    const auto it = lex.variant_letters().find(c.base);
    if (it == lex.variant_letters().end()) continue;
    letter_fix = true;
    out.push_back(make(RuleId::Cons, c.base_span, Severity::Error,
                       "non-canonical letter for /" +
                           std::string(find_letter(it->second)->ipa) +
                           "/; write " + to_utf8(it->second),
                       to_utf8(it->second)));
  }
  if (letter_fix) return;
  const auto it = lex.variant_words().find(w.bare());
  if (it == lex.variant_words().end()) return;
  const std::u32string target = u32(it->second);
  if (target.size() != w.skeleton.size()) return;
  std::string replacement;
  std::size_t k = 0;
  for (const Cluster& c : w.clusters) {
    std::size_t pos = c.base_span.start;
    if (c.base != 0) {
      append_utf8(replacement, target[k++]);
      pos = c.base_span.end;
    }
    replacement.append(w.text.substr(pos, c.span.end - pos));
  }
  out.push_back(make(RuleId::Cons, w.span, Severity::Warning,
                     "listed word is spelled " + it->second, replacement));
}

void rule_vow(const Word& w, std::vector<Diagnostic>& out) {
  const auto& cs = w.clusters;
  const auto info = [&](const Mark& m, const char* message) {
    out.push_back(make(RuleId::Vow, m.span, Severity::Info, message));
  };
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Cluster& c = cs[i];
    int vowels = 0, shaddas = 0, sukuns = 0;
    for (const Mark& m : c.marks) {
      if (!is_nota_mark(m.code)) {
        out.push_back(make(RuleId::Vow, m.span, Severity::Error,
                           "non-NOTA diacritic", std::string()));
        continue;
      }
      if (c.base == 0) {
        info(m, "diacritic without a base letter");
        continue;
      }
      if (m.code == cp::kShadda) {
        if (shaddas++ > 0) info(m, "repeated Shadda");
        continue;
      }
      if (m.code == cp::kSukun) {
        if (sukuns++ > 0) {
          info(m, "repeated Sukun");
        } else if (vowels > 0) {
          info(m, "vowel and Sukun on one letter");
        }
        continue;
      }
      if (vowels++ > 0) {
        info(m, "more than one vowel diacritic on a letter");
        continue;
      }
      if (sukuns > 0) {
        info(m, "vowel and Sukun on one letter");
        continue;
      }
      if (m.code != cp::kKasra || i + 1 >= cs.size() || cs[i + 1].base != cp::kAlef) {
        continue;
      }
      // بِالدار: Kasra of a proclitic before the article is a real /i/.
      const bool proclitic =
          i == 0 && i + 2 < cs.size() && cs[i + 2].base == cp::kLam &&
          (c.base == cp::kBeh || c.base == cp::kLam || c.base == cp::kKaf ||
           c.base == cp::kFeh || c.base == cp::kWaw);
      if (!proclitic) {
        out.push_back(make(RuleId::Vow, m.span, Severity::Error,
                           "long /ɛː/ is written with Zwarakai before Alef",
                           to_utf8(cp::kZwarakai)));
      }
    }
  }
}

void rule_art(const Word& w, std::vector<Diagnostic>& out) {
  if (w.skeleton.size() < 3 || w.skeleton[0] != cp::kAlef || w.skeleton[1] != cp::kLam ||
      w.letter[0] != 0) {
    return;
  }
  const Cluster& alef = w.clusters[0];
  const Cluster& lam = w.clusters[w.letter[1]];
  if (alef.marks.empty() && lam.marks.empty()) return;
  out.push_back(make(RuleId::Art, {alef.span.start, lam.span.end}, Severity::Error,
                     "the definite article is written without diacritics",
                     to_utf8(U"ال")));
}

std::u32string swap_final(std::u32string w) {
  w.back() = w.back() == cp::kAlef ? cp::kAlefMaqsura : cp::kAlef;
  return w;
}

void rule_amq(const Word& w, const Lexicon& lex, std::vector<Diagnostic>& out) {
  const std::u32string& s = w.skeleton;
  if (s.size() < 2 || (s.back() != cp::kAlef && s.back() != cp::kAlefMaqsura)) return;
  const Span final_letter = w.clusters[w.letter.back()].base_span;
  const auto suggest = [&](char32_t letter, std::string why) {
    if (letter == s.back()) return;
    out.push_back(make(RuleId::Amq, final_letter, Severity::Warning, std::move(why),
                       to_utf8(letter)));
  };

  std::u32string stem = s;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const VerbEntry* a = lex.find_citation(to_utf8(stem));
    const VerbEntry* b = lex.find_citation(to_utf8(swap_final(stem)));
    if (a || b) {
      if (a && b && a->present_ends_long_i != b->present_ends_long_i) return;
      const VerbEntry& e = a ? *a : *b;
      suggest(e.present_ends_long_i ? cp::kAlefMaqsura : cp::kAlef,
              "present form " + e.present_3sg +
                  (e.present_ends_long_i ? " ends in long /i/: final ى"
                                         : " does not end in long /i/: final ا"));
      return;
    }
    // و + verb: the conjunction is only stripped for the lookup.
    if (attempt == 0 && stem.size() > 2 && stem.front() == cp::kWaw) {
      stem.erase(0, 1);
    } else {
      break;
    }
  }

  const std::string bare = w.bare();
  if (lex.is_listed(bare) || lex.variant_words().contains(bare)) return;
  if (lex.is_known_word(to_utf8(swap_final(s)))) {
    suggest(swap_final(s).back(), "known word is spelled " + to_utf8(swap_final(s)));
    return;
  }
  out.push_back(make(RuleId::Amq, final_letter, Severity::Info,
                     "final-vowel spelling unverified"));
}

void rule_imp(const Word& w, const Lexicon& lex, std::vector<Diagnostic>& out) {
  const VerbEntry* e = lex.find_irregular_imperative(w.bare());
  if (!e || !e->present_2sg) return;
  std::string regular;
  try {
    regular = derive_imperative(*e->present_2sg);
  } catch (const NotSecondPerson&) {
    return;
  }
  out.push_back(make(RuleId::Imp, w.span, Severity::Warning,
                     "imperative is formed from the present 2sg " + *e->present_2sg,
                     regular));
}

void rule_fut(const Word& w, std::size_t index, std::string_view text,
              std::span<const Token> tokens, const Lexicon& lex,
              std::vector<Diagnostic>& out) {
  if (w.skeleton != U"باش") return;
  if (index + 2 >= tokens.size() || tokens[index + 1].kind != TokenKind::Whitespace ||
      tokens[index + 2].kind != TokenKind::Word) {
    return;
  }
  const Word next = analyze(text, tokens[index + 2]);
  if (!lex.is_imperfective(next.bare())) return;
  out.push_back(make(RuleId::Fut, w.span, Severity::Warning,
                     "future marker before a verb is written بش",
                     to_utf8(U"بش")));
}

void rule_pron(const Word& w, const Lexicon& lex, std::vector<Diagnostic>& out) {
  static const std::u32string kSuffix = U"وش";  // وش
  const std::u32string& s = w.skeleton;
  if (s.size() <= kSuffix.size() + 1 || !ends_with(s, kSuffix)) return;
  const std::u32string stem = s.substr(0, s.size() - kSuffix.size());
  bool found = lex.lookup_verb_by_surface(to_utf8(stem)) != nullptr;
  if (!found && stem.size() > 2 && stem.front() == cp::kMeem) {
    found = lex.lookup_verb_by_surface(to_utf8(stem.substr(1))) != nullptr;
  }
  if (!found) return;
  std::string replacement(w.letters(0, stem.size()));
  replacement += to_utf8(U"هوش");  // هوش
  out.push_back(make(RuleId::Pron, w.span, Severity::Info,
                     "ambiguous with a plural subject; write هو for the object "
                     "pronoun",
                     replacement));
}

void rule_sep(const Word& w, const Lexicon& lex, std::vector<Diagnostic>& out) {
  const std::string bare = w.bare();
  if (w.skeleton.size() < 2 || lex.is_listed(bare) ||
      lex.variant_words().contains(bare)) {
    return;
  }
  static const std::u32string kArticle = U"ال";
  const auto nominal = [&](std::size_t from) {
    const std::u32string r = w.skeleton.substr(from);
    if (lex.is_known_word(to_utf8(r))) return true;
    return r.size() > kArticle.size() && r.starts_with(kArticle) &&
           lex.is_known_word(to_utf8(r.substr(kArticle.size())));
  };
  const auto emit = [&](std::string replacement) {
    out.push_back(make(RuleId::Sep, w.span, Severity::Warning,
                       "preposition or conjunction is written as a separate word",
                       std::move(replacement)));
  };
  const std::size_t n = w.skeleton.size();

  for (const auto& [key, expansion] : lex.fused_prepositions()) {
    const std::u32string k = u32(key);
    if (k.size() < n && w.skeleton.starts_with(k) &&
        lex.is_known_word(to_utf8(w.skeleton.substr(k.size())))) {
      emit(expansion + std::string(w.letters(k.size(), n)));
      return;
    }
  }
  // Longest preposition first.
  std::vector<std::u32string> preps;
  for (const std::string& p : lex.prepositions()) preps.push_back(u32(p));
  std::stable_sort(preps.begin(), preps.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (const std::u32string& p : preps) {
    if (p.size() < 2 || p.size() >= n || !w.skeleton.starts_with(p)) continue;
    if (nominal(p.size())) {
      emit(std::string(w.letters(0, p.size())) + " " +
           std::string(w.letters(p.size(), n)));
      return;
    }
  }
  if (w.skeleton.front() == cp::kWaw && nominal(1)) {
    emit(std::string(w.letters(0, 1)) + " " + std::string(w.letters(1, n)));
  }
}

}  // namespace

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "info";
}

bool diagnostic_less(const Diagnostic& a, const Diagnostic& b) {
  if (a.span.start != b.span.start) return a.span.start < b.span.start;
  const auto an = rule_name(a.rule), bn = rule_name(b.rule);
  if (an != bn) return an < bn;
  return a.span.end < b.span.end;
}

std::string derive_imperative(std::string_view present_2sg) {
  const std::string teh = to_utf8(cp::kTeh);
  if (!present_2sg.starts_with(teh)) {
    throw NotSecondPerson("not a present 2sg form: " + std::string(present_2sg));
  }
  return std::string(present_2sg.substr(teh.size()));
}

std::vector<Diagnostic> run_rule(RuleId rule, std::string_view text,
                                 std::span<const Token> tokens,
                                 const Lexicon& lex) {
  std::vector<Diagnostic> out;
  for_each_word(text, tokens, [&](const Word& w, std::size_t index) {
    switch (rule) {
      case RuleId::Vow: rule_vow(w, out); break;
      case RuleId::Cons: rule_cons(w, lex, out); break;
      case RuleId::Art: rule_art(w, out); break;
      case RuleId::Amq: rule_amq(w, lex, out); break;
      case RuleId::Imp: rule_imp(w, lex, out); break;
      case RuleId::Fut: rule_fut(w, index, text, tokens, lex, out); break;
      case RuleId::Pron: rule_pron(w, lex, out); break;
      case RuleId::Sep: rule_sep(w, lex, out); break;
    }
  });
  std::sort(out.begin(), out.end(), diagnostic_less);
  return out;
}

std::vector<Diagnostic> run_rules(std::string_view text,
                                  std::span<const Token> tokens,
                                  const Lexicon& lex, const RuleConfig& config) {
  std::vector<Diagnostic> out;
  for (RuleId id : kAllRules) {
    if (!config.is_enabled(id)) continue;
    auto d = run_rule(id, text, tokens, lex);
    out.insert(out.end(), std::make_move_iterator(d.begin()),
               std::make_move_iterator(d.end()));
  }
  std::stable_sort(out.begin(), out.end(), diagnostic_less);
  return out;
}

std::vector<Diagnostic> run_rules(std::string_view text, const Lexicon& lex,
                                  const RuleConfig& config) {
  const auto tokens = tokenize(text);
  return run_rules(text, tokens, lex, config);
}

}  // namespace nota
