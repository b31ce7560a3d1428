#pragma once

#include <map>
#include <string>
#include <vector>

#include "latinpipe/conllu.hpp"
#include "latinpipe/tagmap.hpp"

namespace latinpipe::harmonize {

// v->u, V->U, j->i, J->I; all other characters unchanged.
std::string normalize_lemma(std::string_view lemma);

// UDante only: plural forms lemmatized "ego"/"tu" become "nos"/"uos".
// Returns the number of lemmas changed.
size_t relemmatize_plural_pronouns(conllu::SentenceRecord& sentence,
                                   const std::string& treebank);

// Drops sentences where "nec"/"neque" were split into adjacent ne+c / ne+que
// tokens. Returns the surviving treebank and the removed sent_ids.
std::pair<conllu::Treebank, std::vector<std::string>> filter_mistokenized(
    const conllu::Treebank& tb);

// Remaps UPOS and XPOS, filters features through the retention tables.
// Throws when a tag is unmapped and fall-through is disabled.
void remap_token(conllu::TokenRecord& token, const std::string& treebank,
                 const TagMapConfig& cfg, const std::string& sent_id);

struct HarmonizationReport {
  struct PerTreebank {
    size_t sentences_in = 0, sentences_out = 0;
    size_t tokens_in = 0, tokens_out = 0;
    std::vector<std::string> removed_sentence_ids;
  };
  std::map<std::string, PerTreebank> per_treebank;
  std::map<std::string, std::map<std::string, size_t>> remap_counts;  // source -> target -> n
  size_t lemma_edit_count = 0;

  size_t total_sentences_out() const;
  size_t total_tokens_out() const;
  std::string to_text() const;
  std::string to_json() const;
};

struct HarmonizeResult {
  // One merged treebank per split that occurred in the input.
  std::map<conllu::Split, conllu::Treebank> merged;
  HarmonizationReport report;
};

// Full pipeline: normalize lemmas, relemmatize plural pronouns, drop
// mistokenized sentences, remap tags; inputs concatenated per split in the
// canonical treebank order (perseus, proiel, ittb, udante, llct, then others
// by name). Merged sent_ids are prefixed "<treebank>/" to stay unique.
HarmonizeResult harmonize(const std::vector<conllu::Treebank>& treebanks,
                          const TagMapConfig& cfg);

}  // namespace latinpipe::harmonize
