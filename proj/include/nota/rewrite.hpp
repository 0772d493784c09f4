#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nota {

// Half-open byte range.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool overlaps(const Span& o) const { return start < o.end && o.start < end; }
  bool contains(const Span& o) const { return start <= o.start && o.end <= end; }

  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

// Correspondence between a source text and a rewritten text, as a tiling of
// both by pieces that are either copied verbatim or rewritten wholesale.
class OffsetMap {
 public:
  struct Piece {
    Span source;
    Span target;
    bool rewritten = false;
  };

  void copy(std::size_t length);
  void rewrite(std::size_t source_length, std::size_t target_length);

  const std::vector<Piece>& pieces() const { return pieces_; }
  std::size_t source_size() const { return source_size_; }
  std::size_t target_size() const { return target_size_; }
  bool identity() const;

  // Smallest target span that contains `span` and does not cut a rewritten
  // piece.
  Span widen(Span span) const;
  // Maps a target span that does not cut a rewritten piece to the source.
  Span to_source(Span span) const;

 private:
  std::vector<Piece> pieces_;
  std::size_t source_size_ = 0;
  std::size_t target_size_ = 0;
};

struct Edit {
  Span span;
  std::string replacement;
};

// Applies non-overlapping edits sorted by start; `map` receives the mapping.
std::string apply_edits(std::string_view text, const std::vector<Edit>& edits,
                        OffsetMap* map = nullptr);

// A chain of rewrites from an original text to the current one. Spans in the
// current text can be carried back to the original, with the replacement
// widened so that it still applies there.
class RewriteTrace {
 public:
  explicit RewriteTrace(std::string original);

  const std::string& original() const { return texts_.front(); }
  const std::string& current() const { return texts_.back(); }
  std::size_t levels() const { return maps_.size(); }

  void push(std::string text, OffsetMap map);

  Span to_original(Span span) const;
  Edit to_original(const Edit& edit) const;

 private:
  std::vector<std::string> texts_;
  std::vector<OffsetMap> maps_;
};

}  // namespace nota
