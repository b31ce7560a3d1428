#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "latinpipe/conllu.hpp"
#include "latinpipe/edit_tree.hpp"

namespace latinpipe::lemma {

struct TrainingPair {
  std::string form;   // original surface, kept for reporting
  std::string norm;   // orthographically normalized surface; trees work on this
  std::string upos;
  std::string lemma;
};

struct LemmatizerOptions {
  size_t min_tree_freq = 2;  // trees rarer than this are never candidates
  size_t top_k = 3;          // candidate trees tried per lookup key
  bool normalize_ij = false; // j->i folding used when norms were produced
};

// Frequency lemmatizer over interned edit trees. Candidate trees are keyed by
// (norm suffix of up to four characters, UPOS); at lookup time the top_k most
// frequent eligible trees for the key are tried in order and the first one
// that applies wins. No applicable tree means the norm itself is the lemma.
class LemmatizerModel {
 public:
  LemmatizerModel() = default;

  static LemmatizerModel train(const std::vector<TrainingPair>& pairs,
                               const LemmatizerOptions& opts = {});

  // Adds another model's counts to this one (incremental retraining). Both
  // models must agree on normalize_ij; this model's thresholds are kept.
  void merge(const LemmatizerModel& other);

  std::string lemmatize(std::string_view norm, std::string_view upos) const;

  std::string to_json() const;
  static LemmatizerModel from_json(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static LemmatizerModel load(const std::filesystem::path& path);

  const LemmatizerOptions& options() const { return opts_; }
  size_t tree_count() const { return trees_.size(); }
  size_t key_count() const { return keys_.size(); }
  uint64_t pair_count() const { return pair_count_; }

 private:
  struct KeyEntry {
    // Candidate order: frequency descending, then tree id ascending.
    std::vector<std::pair<int, uint64_t>> counts;
  };

  int intern_tree(const EditTree& tree);
  void add_count(const std::string& key, int tree_id, uint64_t n);
  void finalize();  // sorts candidate lists and recomputes totals

  LemmatizerOptions opts_;
  std::vector<EditTree> trees_;
  std::unordered_map<std::string, int> intern_;  // encode() -> id
  std::vector<uint64_t> tree_total_;             // summed frequency per tree
  std::map<std::string, KeyEntry> keys_;         // "suffix\x1fupos" -> entry
  uint64_t pair_count_ = 0;
};

// Post-prediction overrides: punctuation lemmatizes to its own surface, and a
// "que" conjunction (the split enclitic) always gets the lemma "que".
std::string fix_lemma(std::string_view surface, std::string_view upos,
                      std::string_view predicted);

// Last `n` UTF-8 characters of `s` (whole string when shorter).
std::string_view suffix_chars(std::string_view s, size_t n);

std::vector<TrainingPair> pairs_from_treebank(const conllu::Treebank& tb, bool normalize_ij);

// Rewrites the lemma of every word token using the model plus, unless
// disabled, the fix-up rules. Returns the number of tokens touched.
size_t lemmatize_treebank(const LemmatizerModel& model, conllu::Treebank& tb,
                          bool apply_fixes = true);

}  // namespace latinpipe::lemma
