#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace latinpipe::text {

// Offsets are byte offsets into the UTF-8 source text.
struct SurfaceToken {
  std::string surface;
  size_t start = 0;
  size_t end = 0;
  std::string norm;
  bool is_enclitic_part = false;
};

// Words ending in -que that are never split (neque, atque, quoque, ...).
class QueExceptionList {
 public:
  QueExceptionList();  // built-in default list
  static QueExceptionList from_file(const std::string& path);
  static QueExceptionList from_lines(std::string_view text);

  bool contains(std::string_view lowercase_word) const;
  size_t size() const { return entries_.size(); }

 private:
  void insert(std::string_view entry);  // validates the -que suffix
  std::set<std::string, std::less<>> entries_;
};

struct TokenizerOptions {
  bool normalize_ij = false;  // j -> i in norm, off by default
};

// Lowercase + v->u (+ j->i when enabled). Idempotent.
std::string normalize_orthography(std::string_view surface, bool normalize_ij = false);

// Whitespace split, leading/trailing punctuation separated, enclitic -que
// split from alphabetic words longer than three characters unless excepted.
std::vector<SurfaceToken> tokenize(std::string_view text, const QueExceptionList& exceptions,
                                   const TokenizerOptions& opts = {});

// Splits after . ? ! followed by whitespace and an uppercase letter (or end
// of text). Spans cover all non-whitespace text, as byte offsets.
std::vector<std::pair<size_t, size_t>> segment_sentences(std::string_view text);

}  // namespace latinpipe::text
