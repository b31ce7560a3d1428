#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latinpipe::conllu {

// Morphological features, kept sorted case-insensitively by name.
using Feats = std::vector<std::pair<std::string, std::string>>;

std::string serialize_feats(const Feats& feats);   // "A=B|C=D" or "_"
Feats parse_feats(std::string_view field);         // throws on malformed input
void sort_feats(Feats& feats);

struct TokenRecord {
  int id = 0;  // for a multiword-token line, the start of the range
  std::optional<std::pair<int, int>> mwt_range;
  std::string form;
  std::string lemma;   // empty = "_"
  std::string upos;    // empty = "_"
  std::string xpos;    // empty = "_"
  Feats feats;
  std::optional<int> head;  // absent on multiword-token lines and unannotated tokens
  std::string deprel;       // empty = "_"
  std::string deps = "_";   // opaque passthrough
  std::string misc = "_";   // opaque passthrough

  bool is_mwt() const { return mwt_range.has_value(); }
};

struct SentenceRecord {
  std::string sent_id;
  std::optional<std::string> text;        // from the "# text = ..." comment
  std::vector<std::string> comments;      // all comment lines, verbatim, in order
  std::vector<TokenRecord> tokens;        // word and multiword-token lines in file order

  size_t word_count() const;
  // Word token (non-range line) with the given 1-based id.
  const TokenRecord& word(int id) const;
  TokenRecord& word(int id);
};

enum class Split { train, dev, test, unsplit };

std::string_view split_name(Split s);
Split split_from_name(std::string_view name);  // throws on unknown name

struct Treebank {
  std::string name;
  Split split = Split::unsplit;
  std::vector<SentenceRecord> sentences;

  size_t word_token_count() const;
};

// Strict CoNLL-U parser. Errors carry the 1-based line number and a reason.
Treebank parse(std::string_view text, std::string name, Split split);

std::string serialize(const Treebank& tb);

// serialize(parse(x)) — sorts FEATS and normalizes blank-line spacing.
std::string canonicalize(std::string_view text);

// One row per word line: treebank, split, sent_id, id, form, lemma, upos,
// xpos, feats, head, deprel. Header row first; range lines excluded.
std::string to_tsv(const Treebank& tb);

}  // namespace latinpipe::conllu
