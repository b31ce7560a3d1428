#pragma once

#include <set>
#include <string>
#include <vector>

#include "latinpipe/conllu.hpp"

namespace latinpipe::chunk {

struct Chunk {
  int head_id = 0;              // 1-based token id of the nominal head
  std::vector<int> token_ids;   // contiguous, ascending, contains head_id
  std::string text;             // surface forms joined with spaces

  int start() const { return token_ids.front(); }
  int end() const { return token_ids.back(); }
};

struct ChunkOptions {
  std::set<std::string, std::less<>> allowed_deprels = {"det", "amod", "nmod", "nummod"};
  bool include_pron = true;   // PRON heads chunk alongside NOUN / PROPN
  size_t min_tokens = 1;
};

// Base noun phrases: for each nominal head, its subtree restricted to the
// allowed dependency relations, trimmed to the contiguous token window around
// the head. A head inside an already-emitted chunk is suppressed, and no two
// chunks share a token. Requires head/deprel annotation on every word token.
std::vector<Chunk> noun_chunks(const conllu::SentenceRecord& sentence,
                               const ChunkOptions& opts = {});

// One line per chunk: sent_id, start id, end id (inclusive), text.
std::string chunks_tsv(const conllu::Treebank& tb, const ChunkOptions& opts = {});

}  // namespace latinpipe::chunk
