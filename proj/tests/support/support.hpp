#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nota/canonical.hpp"
#include "nota/config.hpp"
#include "nota/lexicon.hpp"
#include "nota/rewrite.hpp"
#include "nota/rules.hpp"
#include "nota/script.hpp"
#include "nota/tokenizer.hpp"
#include "nota/utf8.hpp"

namespace nota::testing {

// Lexicon with the entries the examples refer to, including the citation
// form كلى for ياكل.
inline Lexicon fixture_lexicon() {
  const std::vector<LexiconSource> sources = {
      {"verbs.tsv",
       "مشى\tيمشي\t1\tتمشي\t\n"
       "جى\tيجي\t1\tتجي\t\n"
       "قرا\tيقرا\t0\tتقرا\t\n"
       "كلى\tياكل\t0\tتاكل\tكول\n"
       "كلم\tيكلم\t0\tتكلم\t\n"},
      {"prepositions.txt", "في\nعلى\nمن\nمع\nعند\nتحت\nفوق\nقدام\nوراء\nبين\n"},
      {"known_words.txt", "دار\nكتاب\nورقة\nبڨرة\nڨاوري\nما\n"},
      {"variant_letters.tsv", "گ\tڨ\nڭ\tڨ\n"},
      {"variant_words.tsv", "بقرة\tبڨرة\n"},
      {"fused_prepositions.tsv", "فال\tفي ال\nعال\tعلى ال\nمال\tمن ال\n"},
  };
  return Lexicon::load(sources);
}

struct GoldenCase {
  std::string input;
  std::string fixed;
  std::set<std::string> check_rules;  // rule ids Check mode reports
};

// Expected with the default lexicon.
inline const std::vector<GoldenCase>& golden_corpus() {
  static const std::vector<GoldenCase> cases = {
      {"باش نمشي", "بش نمشي", {"R-FUT"}},
      {"بش نمشي", "بش نمشي", {}},
      {"اَلدار", "الدار", {"R-ART"}},
      {"اِلْكتاب", "الكتاب", {"R-ART"}},
      {"والدار", "و الدار", {"R-SEP"}},
      {"فالدار", "في الدار", {"R-SEP"}},
      {"ورقة", "ورقة", {}},
      {"كول", "اكل", {"R-IMP"}},
      {"مشا", "مشى", {"R-AMQ"}},
      {"قرى", "قرا", {"R-AMQ"}},
      {"جى", "جى", {}},
      {"ما كلموش", "ما كلموش", {"R-PRON"}},
      {"گاوري", "ڨاوري", {"R-CONS"}},
      {"بقرة", "بڨرة", {"R-CONS"}},
      {"بِات", "بٙات", {"R-VOW"}},
      {"بابٌ", "باب", {"R-VOW"}},
      {"باش نمشي في الدار", "بش نمشي في الدار", {"R-FUT"}},
      {"اَلدار والدار", "الدار و الدار", {"R-ART", "R-SEP"}},
      {"فريكساي أوردينتور", "فريكساي أوردينتور", {}},
  };
  return cases;
}

struct LoanwordGolden {
  std::string phonemic;
  std::string arabic;
};

inline const std::vector<LoanwordGolden>& loanword_goldens() {
  static const std::vector<LoanwordGolden> cases = {
      {"f r i . ˈk a . s e j", "فريكساي"},
      {"ɔ r . d i . ˈn a . t œ r", "أوردينتور"},
      {"b y ˈr o", "بيرو"},
  };
  return cases;
}

// ---------------------------------------------------------------------------
// Generators. Seeded std::mt19937_64; every property test names its seed.

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[pick(rng, v.size())];
}

inline bool chance(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

inline std::vector<char32_t> inventory_letters() {
  std::vector<char32_t> out;
  for (const Letter& l : letter_inventory()) out.push_back(l.code);
  return out;
}

inline const std::vector<char32_t>& nota_marks() {
  static const std::vector<char32_t> marks = {cp::kFatha, cp::kDamma, cp::kKasra,
                                              cp::kZwarakai, cp::kShadda, cp::kSukun};
  return marks;
}

inline Grapheme random_grapheme(Rng& rng, const std::vector<char32_t>& bases) {
  Grapheme g;
  g.base = pick(rng, bases);
  g.shadda = chance(rng, 0.2);
  const std::size_t r = pick(rng, 6);
  if (r < 4) {
    g.vowel = kAllVowels[r];
  } else if (r == 4) {
    g.sukun = true;
  }
  return g;
}

inline std::vector<Grapheme> random_graphemes(Rng& rng, std::size_t max_len = 8) {
  static const std::vector<char32_t> bases = inventory_letters();
  std::vector<Grapheme> gs(1 + pick(rng, max_len));
  for (auto& g : gs) g = random_grapheme(rng, bases);
  return gs;
}

// Renders with the marks of each cluster in random order.
inline std::string render_shuffled(Rng& rng, const std::vector<Grapheme>& gs) {
  std::u32string out;
  for (const Grapheme& g : gs) {
    out += g.base;
    std::u32string marks;
    if (g.shadda) marks += cp::kShadda;
    if (g.vowel) marks += vowel_mark(*g.vowel);
    if (g.sukun) marks += cp::kSukun;
    std::shuffle(marks.begin(), marks.end(), rng);
    out += marks;
  }
  return to_utf8(out);
}

// Words the rules know about, to make fuzz inputs hit them.
inline std::vector<std::string> lexicon_words(const Lexicon& lex) {
  std::vector<std::string> out(lex.known_words().begin(), lex.known_words().end());
  out.insert(out.end(), lex.prepositions().begin(), lex.prepositions().end());
  for (const auto& [citation, e] : lex.verbs()) {
    out.push_back(citation);
    out.push_back(e.present_3sg);
    if (e.present_2sg) out.push_back(*e.present_2sg);
    if (e.irregular_imperative) out.push_back(*e.irregular_imperative);
  }
  for (const auto& [variant, _] : lex.variant_words()) out.push_back(variant);
  for (const auto& [key, _] : lex.fused_prepositions()) out.push_back(key);
  for (const char* w : {"باش", "بش", "و", "ال", "وش", "ما", "مشا", "قرى", "كلموش"}) {
    out.emplace_back(w);
  }
  return out;
}

// Mixed text: Arabic letters and marks (NOTA and not), tatweel, presentation
// forms, variant letters, Latin noise, digits, punctuation and lexicon words.
inline std::string random_text(Rng& rng, const std::vector<std::string>& words,
                               std::size_t pieces = 12) {
  static const std::vector<char32_t> letters = inventory_letters();
  static const std::vector<char32_t> other_marks = {0x064B, 0x064C, 0x064D, 0x0654,
                                                    0x0655, 0x0670, 0x06E1};
  static const std::vector<char32_t> variants = {0x06AF, 0x06AD, 0x0763, 0x06A5};
  static const std::vector<std::string> noise = {"abc", "Zx", "é", "2024", "٣٤",
                                                 ".", "،", "؟", "!", "(", ")", "-"};
  static const std::vector<std::string> spaces = {" ", " ", " ", "\n", "  ", "\t"};
  std::u32string out;
  for (std::size_t i = 0; i < pieces; ++i) {
    switch (pick(rng, 10)) {
      case 0:
      case 1:
      case 2: {
        std::string w = pick(rng, words);
        if (chance(rng, 0.3)) {
          // Sprinkle NOTA marks after random letters.
          std::u32string cps = to_code_points(w), marked;
          for (char32_t c : cps) {
            marked += c;
            if (chance(rng, 0.3)) marked += pick(rng, nota_marks());
          }
          w = to_utf8(marked);
        }
        out += to_code_points(w);
        break;
      }
      case 3:
        for (std::size_t n = 1 + pick(rng, 5); n > 0; --n) out += pick(rng, letters);
        break;
      case 4:
        out += pick(rng, nota_marks());
        break;
      case 5:
        out += chance(rng, 0.5) ? pick(rng, other_marks) : pick(rng, variants);
        break;
      case 6:
        out += chance(rng, 0.5) ? char32_t{cp::kTatweel}
                                : static_cast<char32_t>(0xFE80 + pick(rng, 0xFEFC - 0xFE80 + 1));
        break;
      case 7:
        out += to_code_points(pick(rng, noise));
        break;
      default:
        out += to_code_points(pick(rng, spaces));
        break;
    }
  }
  return to_utf8(out);
}

// Applies every replacement of `diags` (non-overlapping, as one rule emits).
inline std::string apply_replacements(std::string_view text,
                                      const std::vector<Diagnostic>& diags) {
  std::vector<Edit> edits;
  for (const Diagnostic& d : diags) {
    if (d.replacement) edits.push_back({d.span, *d.replacement});
  }
  std::sort(edits.begin(), edits.end(),
            [](const Edit& a, const Edit& b) { return a.span.start < b.span.start; });
  return apply_edits(text, edits);
}

inline std::vector<Diagnostic> run_single(RuleId rule, std::string_view text,
                                          const Lexicon& lex) {
  const auto tokens = tokenize(text);
  return run_rule(rule, text, tokens, lex);
}

// Canonical text that rule `rule` flags with at least one replacement.
inline std::string rule_positive(Rng& rng, RuleId rule, const Lexicon& lex) {
  const std::vector<std::string> known(lex.known_words().begin(), lex.known_words().end());
  std::vector<std::string> preps;
  for (const auto& p : lex.prepositions()) {
    if (to_code_points(p).size() >= 2) preps.push_back(p);
  }
  std::vector<const VerbEntry*> verbs;
  for (const auto& [_, e] : lex.verbs()) verbs.push_back(&e);
  const auto filler = [&] { return chance(rng, 0.5) ? std::string() : pick(rng, known) + " "; };

  switch (rule) {
    case RuleId::Vow: {
      std::u32string w = to_code_points(pick(rng, known));
      const std::size_t at = pick(rng, w.size());
      if (chance(rng, 0.5)) {
        w.insert(at + 1, 1, static_cast<char32_t>(0x064B + pick(rng, 3)));
      } else {
        w.insert(at + 1, std::u32string{cp::kKasra, cp::kAlef});
      }
      return filler() + canonicalize(to_utf8(w));
    }
    case RuleId::Cons: {
      if (chance(rng, 0.3) && !lex.variant_words().empty()) {
        return filler() + lex.variant_words().begin()->first;
      }
      std::u32string w = to_code_points(pick(rng, known));
      std::vector<char32_t> vs;
      for (const auto& [v, _] : lex.variant_letters()) vs.push_back(v);
      w[pick(rng, w.size())] = pick(rng, vs);
      return filler() + to_utf8(w);
    }
    case RuleId::Art: {
      std::u32string art = U"ا";
      if (chance(rng, 0.7)) art += pick(rng, nota_marks());
      art += U"ل";
      if (art.size() == 2 || chance(rng, 0.5)) art += cp::kSukun;
      return filler() + canonicalize(to_utf8(art) + pick(rng, known));
    }
    case RuleId::Amq: {
      std::vector<const VerbEntry*> final_vowel;
      for (const VerbEntry* e : verbs) {
        const auto c = to_code_points(e->citation);
        if (c.back() == cp::kAlef || c.back() == cp::kAlefMaqsura) final_vowel.push_back(e);
      }
      std::u32string c = to_code_points(pick(rng, final_vowel)->citation);
      c.back() = c.back() == cp::kAlef ? cp::kAlefMaqsura : cp::kAlef;
      return filler() + (chance(rng, 0.3) ? "و" : "") + to_utf8(c);
    }
    case RuleId::Imp: {
      std::vector<std::string> irregular;
      for (const VerbEntry* e : verbs) {
        if (e->irregular_imperative) irregular.push_back(*e->irregular_imperative);
      }
      return filler() + pick(rng, irregular);
    }
    case RuleId::Fut: {
      std::u32string stem = to_code_points(pick(rng, verbs)->present_3sg);
      static const std::vector<std::u32string> prefixes = {U"ي", U"ت", U"ن"};
      if (stem.front() == cp::kYeh) stem.replace(0, 1, pick(rng, prefixes));
      return filler() + "باش " + to_utf8(stem);
    }
    case RuleId::Pron: {
      const VerbEntry* e = pick(rng, verbs);
      const std::string stem = chance(rng, 0.5) ? e->citation : e->present_3sg;
      return filler() + "ما " + stem + "وش";
    }
    case RuleId::Sep: {
      std::string rest = pick(rng, known);
      switch (pick(rng, 3)) {
        case 0:
          return filler() + "و" + (chance(rng, 0.5) ? "ال" : "") + rest;
        case 1:
          return filler() + pick(rng, preps) + (chance(rng, 0.5) ? "ال" : "") + rest;
        default: {
          std::vector<std::string> keys;
          for (const auto& [k, _] : lex.fused_prepositions()) keys.push_back(k);
          return filler() + pick(rng, keys) + rest;
        }
      }
    }
  }
  return {};
}

}  // namespace nota::testing
