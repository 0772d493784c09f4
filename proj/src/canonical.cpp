#include "nota/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <vector>

#include "nota/script.hpp"
#include "nota/utf8.hpp"

namespace nota {
namespace {

struct PresentationFold {
  char32_t code;
  const char* folded;
};

struct CombiningClass {
  char32_t code;
  std::uint8_t ccc;
};

#include "unicode_tables.inc"

const char* find_fold(char32_t c) {
  const auto* begin = std::begin(kPresentationFolds);
  const auto* end = std::end(kPresentationFolds);
  const auto* it = std::lower_bound(
      begin, end, c,
      [](const PresentationFold& f, char32_t v) { return f.code < v; });
  return it != end && it->code == c ? it->folded : nullptr;
}

std::uint8_t combining_class(char32_t c) {
  const auto* begin = std::begin(kArabicCombiningClasses);
  const auto* end = std::end(kArabicCombiningClasses);
  const auto* it = std::lower_bound(
      begin, end, c,
      [](const CombiningClass& f, char32_t v) { return f.code < v; });
  return it != end && it->code == c ? it->ccc : 0;
}

char32_t compose(char32_t base, char32_t mark) {
  switch (mark) {
    case 0x0653:
      return base == cp::kAlef ? cp::kAlefMadda : 0;
    case 0x0654:
      switch (base) {
        case cp::kAlef: return cp::kAlefHamzaAbove;
        case cp::kWaw: return 0x0624;
        case cp::kYeh: return 0x0626;
        case 0x06D5: return 0x06C0;
        case 0x06C1: return 0x06C2;
        case 0x06D2: return 0x06D3;
        default: return 0;
      }
    case 0x0655:
      return base == cp::kAlef ? cp::kAlefHamzaBelow : 0;
    default:
      return 0;
  }
}

int mark_rank(char32_t mark) {
  if (mark == cp::kShadda) return 0;
  if (is_nota_mark(mark)) return 1;
  return 2;
}

// Folds presentation forms and drops tatweel, code point by code point.
std::string fold(std::string_view text, OffsetMap& map) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const auto d = decode_utf8(text, pos);
    std::string_view replacement;
    bool rewritten = false;
    if (d.valid) {
      if (d.cp == cp::kTatweel) {
        rewritten = true;
      } else if (const char* folded = find_fold(d.cp)) {
        replacement = folded;
        rewritten = true;
      }
    }
    if (rewritten) {
      std::size_t before = out.size();
      for (std::size_t i = 0; i < replacement.size();) {
        const auto r = decode_utf8(replacement, i);
        if (r.cp != cp::kTatweel) out.append(replacement.substr(i, r.length));
        i += r.length;
      }
      map.rewrite(d.length, out.size() - before);
    } else {
      out.append(text.substr(pos, d.length));
      map.copy(d.length);
    }
    pos += d.length;
  }
  return out;
}

// Composes Hamza/Madda and orders marks within each letter cluster.
std::string order_clusters(std::string_view text, OffsetMap& map) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const auto first = decode_utf8(text, pos);
    pos += first.length;
    char32_t base = first.valid ? first.cp : 0;
    std::vector<char32_t> marks;
    while (pos < text.size()) {
      const auto d = decode_utf8(text, pos);
      if (!d.valid || !is_arabic_mark(d.cp)) break;
      marks.push_back(d.cp);
      pos += d.length;
    }
    const std::string_view original = text.substr(start, pos - start);
    if (marks.empty() || (!first.valid)) {
      out.append(original);
      map.copy(original.size());
      continue;
    }
    // A leading mark run has no base; it is only reordered.
    const bool has_base = !is_arabic_mark(base);
    if (has_base) {
      for (bool composed = true; composed;) {
        composed = false;
        std::uint8_t max_ccc = 0;
        for (std::size_t i = 0; i < marks.size(); ++i) {
          const std::uint8_t ccc = combining_class(marks[i]);
          const bool blocked = i > 0 && (max_ccc == 0 || max_ccc >= ccc);
          if (!blocked) {
            if (char32_t c = compose(base, marks[i])) {
              base = c;
              marks.erase(marks.begin() + static_cast<std::ptrdiff_t>(i));
              composed = true;
              break;
            }
          }
          max_ccc = std::max(max_ccc, ccc);
        }
      }
    } else {
      marks.insert(marks.begin(), base);
    }
    std::stable_sort(marks.begin(), marks.end(), [](char32_t a, char32_t b) {
      return mark_rank(a) < mark_rank(b);
    });
    std::string rebuilt;
    if (has_base) append_utf8(rebuilt, base);
    for (char32_t m : marks) append_utf8(rebuilt, m);
    if (rebuilt == original) {
      map.copy(original.size());
    } else {
      map.rewrite(original.size(), rebuilt.size());
    }
    out += rebuilt;
  }
  return out;
}

}  // namespace

void canonicalize(RewriteTrace& trace) {
  OffsetMap fold_map;
  std::string folded = fold(trace.current(), fold_map);
  trace.push(std::move(folded), std::move(fold_map));
  OffsetMap order_map;
  std::string ordered = order_clusters(trace.current(), order_map);
  trace.push(std::move(ordered), std::move(order_map));
}

std::string canonicalize(std::string_view text) {
  RewriteTrace trace{std::string(text)};
  canonicalize(trace);
  return trace.current();
}

}  // namespace nota
