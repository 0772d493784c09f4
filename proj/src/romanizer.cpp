#include "nota/romanizer.hpp"

#include "nota/canonical.hpp"

namespace nota {
namespace {

using Kind = PhonemeSegment::Kind;

PhonemeSegment consonant(const Letter& l, bool geminate = false) {
  PhonemeSegment s;
  s.label = std::string(l.ipa);
  s.geminate = geminate;
  return s;
}

PhonemeSegment vowel(std::optional<Vowel> q, bool is_long, VowelCarrier carrier) {
  PhonemeSegment s;
  s.kind = Kind::Vowel;
  s.quality = q;
  s.is_long = is_long;
  s.carrier = carrier;
  return s;
}

std::vector<Grapheme> graphemes_of(std::string_view word) {
  if (word.empty()) throw RomanizeError(RomanizeError::Kind::NotAWord, "empty word");
  try {
    return parse_graphemes(canonicalize(word));
  } catch (const GraphemeError& e) {
    throw RomanizeError(RomanizeError::Kind::NotAWord,
                        "not a NOTA word: " + std::string(e.what()));
  }
}

bool unmarked(const Grapheme& g) { return !g.vowel && !g.shadda && !g.sukun; }

const Letter& letter_of(const Grapheme& g) { return *find_letter(g.base); }

void madda(PhonemeString& out) {
  out.push_back(consonant(*find_letter(cp::kHamza)));
  out.push_back(vowel(Vowel::A, true, VowelCarrier::AlefMadda));
}

PhonemeString romanize_bare(const std::vector<Grapheme>& gs) {
  PhonemeString out;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const Letter& l = letter_of(gs[i]);
    const bool after_consonant = !out.empty() && out.back().kind == Kind::Consonant;
    if (l.code == cp::kAlefMadda) {
      madda(out);
    } else if (l.role == Letter::Role::VowelSeat) {
      out.push_back(vowel(std::nullopt, i > 0, VowelCarrier::Alef));
    } else if (l.role == Letter::Role::TaMarbuta) {
      out.push_back(vowel(Vowel::A, false, VowelCarrier::TaMarbuta));
    } else if (l.role == Letter::Role::Glide && after_consonant) {
      const bool waw = l.code == cp::kWaw;
      out.push_back(vowel(waw ? Vowel::U : Vowel::I, true,
                          waw ? VowelCarrier::Waw : VowelCarrier::Yeh));
    } else {
      out.push_back(consonant(l));
    }
  }
  return out;
}

PhonemeString romanize_diacritized(const std::vector<Grapheme>& gs) {
  PhonemeString out;
  const auto open_vowel = [&]() -> PhonemeSegment* {
    if (out.empty()) return nullptr;
    PhonemeSegment& s = out.back();
    const bool open = s.kind == Kind::Vowel && !s.is_long &&
                      s.carrier == VowelCarrier::Diacritic;
    return open ? &s : nullptr;
  };
  // Bare ال at the start of a longer word: the article /il/.
  const bool article = gs.size() > 2 && gs[0].base == cp::kAlef && unmarked(gs[0]) &&
                       gs[1].base == cp::kLam && unmarked(gs[1]);

  for (std::size_t i = 0; i < gs.size(); ++i) {
    const Grapheme& g = gs[i];
    const Letter& l = letter_of(g);
    if (l.code == cp::kAlefMadda) {
      madda(out);
      continue;
    }
    if (l.role == Letter::Role::VowelSeat) {
      if (i == 0) {
        std::optional<Vowel> q = g.vowel;
        if (!q && article) q = Vowel::I;
        out.push_back(vowel(q, false, VowelCarrier::Alef));
      } else if (PhonemeSegment* v = open_vowel()) {
        v->is_long = true;
        v->carrier = VowelCarrier::Alef;
      } else {
        out.push_back(vowel(std::nullopt, true, VowelCarrier::Alef));
      }
      continue;
    }
    if (unmarked(g)) {
      PhonemeSegment* v = open_vowel();
      if (l.role == Letter::Role::TaMarbuta) {
        if (v && v->quality == Vowel::A) {
          v->carrier = VowelCarrier::TaMarbuta;
        } else {
          out.push_back(vowel(Vowel::A, false, VowelCarrier::TaMarbuta));
        }
        continue;
      }
      if (l.role == Letter::Role::Glide && v) {
        const bool waw = l.code == cp::kWaw;
        if (v->quality == (waw ? Vowel::U : Vowel::I)) {
          v->is_long = true;
          v->carrier = waw ? VowelCarrier::Waw : VowelCarrier::Yeh;
          continue;
        }
      }
      const bool final_letter = i + 1 == gs.size();
      if (!final_letter && !(article && i == 1)) {
        throw RomanizeError(RomanizeError::Kind::MissingDiacritics,
                            "letter " + std::to_string(i + 1) +
                                " has no vowel, Shadda or Sukun");
      }
    }
    if (l.role == Letter::Role::TaMarbuta) {
      out.push_back(consonant(*find_letter(cp::kTeh), g.shadda));
    } else {
      out.push_back(consonant(l, g.shadda));
    }
    if (g.vowel) out.push_back(vowel(*g.vowel, false, VowelCarrier::Diacritic));
  }
  return out;
}

}  // namespace

PhonemeString romanize(std::string_view word, ScriptMode mode) {
  const auto gs = graphemes_of(word);
  return mode == ScriptMode::Bare ? romanize_bare(gs) : romanize_diacritized(gs);
}

std::string to_string(const PhonemeString& phonemes) {
  std::string out;
  for (const PhonemeSegment& s : phonemes) {
    if (s.kind == Kind::Consonant) {
      out += s.label;
      if (s.geminate) out += s.label;
      continue;
    }
    out += s.quality ? vowel_phoneme(*s.quality) : kVowelPlaceholder;
    if (s.is_long) out += "ː";
  }
  return out;
}

PhonemeString mask_vowels(const PhonemeString& phonemes) {
  PhonemeString out;
  for (PhonemeSegment s : phonemes) {
    if (s.kind == Kind::Consonant) {
      s.geminate = false;
      out.push_back(std::move(s));
      continue;
    }
    switch (s.carrier) {
      case VowelCarrier::Diacritic:
        continue;
      case VowelCarrier::Alef:
        s.quality.reset();
        break;
      case VowelCarrier::Waw:
        s.quality = Vowel::U;
        break;
      case VowelCarrier::Yeh:
        s.quality = Vowel::I;
        break;
      case VowelCarrier::TaMarbuta:
        s.quality = Vowel::A;
        s.is_long = false;
        break;
      case VowelCarrier::AlefMadda:
        s.quality = Vowel::A;
        s.is_long = true;
        break;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace nota
