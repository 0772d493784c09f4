#include "nota/rewrite.hpp"

#include <algorithm>
#include <cassert>

namespace nota {

void OffsetMap::copy(std::size_t length) {
  if (length == 0) return;
  if (!pieces_.empty() && !pieces_.back().rewritten) {
    pieces_.back().source.end += length;
    pieces_.back().target.end += length;
  } else {
    pieces_.push_back({{source_size_, source_size_ + length},
                       {target_size_, target_size_ + length},
                       false});
  }
  source_size_ += length;
  target_size_ += length;
}

void OffsetMap::rewrite(std::size_t source_length, std::size_t target_length) {
  if (source_length == 0 && target_length == 0) return;
  pieces_.push_back({{source_size_, source_size_ + source_length},
                     {target_size_, target_size_ + target_length},
                     true});
  source_size_ += source_length;
  target_size_ += target_length;
}

bool OffsetMap::identity() const {
  return std::none_of(pieces_.begin(), pieces_.end(),
                      [](const Piece& p) { return p.rewritten; });
}

Span OffsetMap::widen(Span span) const {
  for (const Piece& p : pieces_) {
    if (!p.rewritten || p.target.length() == 0) continue;
    if (p.target.overlaps(span) && !span.contains(p.target)) {
      span.start = std::min(span.start, p.target.start);
      span.end = std::max(span.end, p.target.end);
    }
  }
  return span;
}

Span OffsetMap::to_source(Span span) const {
  Span out{source_size_, source_size_};
  bool have_start = false;
  for (const Piece& p : pieces_) {
    if (!have_start && p.target.start <= span.start &&
        span.start < p.target.end) {
      out.start = p.rewritten ? p.source.start
                              : p.source.start + (span.start - p.target.start);
      have_start = true;
    }
    if (p.target.start < span.end && span.end <= p.target.end) {
      out.end = p.rewritten ? p.source.end
                            : p.source.start + (span.end - p.target.start);
    }
  }
  if (span.start == span.end) {
    // Insertion point: anchor at the start position.
    out.end = out.start;
  }
  return out;
}

std::string apply_edits(std::string_view text, const std::vector<Edit>& edits,
                        OffsetMap* map) {
  std::string out;
  out.reserve(text.size() + 16);
  std::size_t cursor = 0;
  for (const Edit& e : edits) {
    assert(e.span.start >= cursor && e.span.end <= text.size());
    out.append(text.substr(cursor, e.span.start - cursor));
    if (map) map->copy(e.span.start - cursor);
    out.append(e.replacement);
    if (map) map->rewrite(e.span.length(), e.replacement.size());
    cursor = e.span.end;
  }
  out.append(text.substr(cursor));
  if (map) map->copy(text.size() - cursor);
  return out;
}

RewriteTrace::RewriteTrace(std::string original) {
  texts_.push_back(std::move(original));
}

void RewriteTrace::push(std::string text, OffsetMap map) {
  assert(map.source_size() == current().size());
  assert(map.target_size() == text.size());
  texts_.push_back(std::move(text));
  maps_.push_back(std::move(map));
}

Span RewriteTrace::to_original(Span span) const {
  for (std::size_t level = maps_.size(); level-- > 0;) {
    span = maps_[level].to_source(maps_[level].widen(span));
  }
  return span;
}

Edit RewriteTrace::to_original(const Edit& edit) const {
  Edit out = edit;
  for (std::size_t level = maps_.size(); level-- > 0;) {
    const std::string& text = texts_[level + 1];
    const Span wide = maps_[level].widen(out.span);
    std::string replacement =
        text.substr(wide.start, out.span.start - wide.start);
    replacement += out.replacement;
    replacement += text.substr(out.span.end, wide.end - out.span.end);
    out.replacement = std::move(replacement);
    out.span = maps_[level].to_source(wide);
  }
  return out;
}

}  // namespace nota
