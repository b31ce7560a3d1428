#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "latinpipe/conllu.hpp"

namespace latinpipe::corpus {

// Plain sentence text for every sentence: the "# text" comment when present,
// otherwise the forms detokenized via SpaceAfter=No (multiword tokens emit
// their surface form once, covering their word range).
std::vector<std::string> extract_sentences(const conllu::Treebank& tb);
std::string detokenize(const conllu::SentenceRecord& sentence);

// Open-addressing set of 64-bit keys; the streaming dedupe memory is one
// hash per distinct sentence rather than the sentence text itself.
class HashSet64 {
 public:
  explicit HashSet64(size_t initial_buckets = 1 << 16);

  // Returns true when the key was new.
  bool insert(uint64_t key);
  size_t size() const { return size_; }

 private:
  void grow();
  std::vector<uint64_t> slots_;  // 0 = empty
  size_t size_ = 0;
};

struct PrepStats {
  uint64_t lines_in = 0;
  uint64_t kept = 0;
  uint64_t empty = 0;
  uint64_t duplicates = 0;
  uint64_t boilerplate = 0;
  std::map<std::string, uint64_t> removed_per_pattern;

  std::string to_text() const;
  std::string to_json() const;
};

// One-pass streaming cleaner: reads sentences one per line, drops empty
// lines, case-insensitive boilerplate matches, and duplicates (whitespace-
// normalized, hash-based), and appends survivors to `out` one per line.
// State persists across process() calls so several inputs share one dedupe
// set. Patterns must be non-empty; "lorem ipsum" is the default.
class CorpusPrep {
 public:
  explicit CorpusPrep(std::vector<std::string> patterns = {"lorem ipsum"});

  void process(std::istream& in, std::ostream& out);
  void process_text(std::string_view text, std::string& out);

  const PrepStats& stats() const { return stats_; }

 private:
  bool keep_line(std::string_view line);  // updates stats; line already trimmed

  std::vector<std::string> patterns_;
  HashSet64 seen_;
  PrepStats stats_;
};

}  // namespace latinpipe::corpus
