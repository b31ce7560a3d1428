#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "latinpipe/conllu.hpp"
#include "latinpipe/tokenizer.hpp"

namespace latinpipe::tag {

struct TagTriple {
  std::string upos;
  std::string xpos;   // empty = unset
  std::string feats;  // serialized "A=B|C=D" form, empty = none

  auto operator<=>(const TagTriple&) const = default;
};

struct TaggedToken {
  text::SurfaceToken token;
  TagTriple tags;
};

struct TaggerOptions {
  bool normalize_ij = false;  // folding used when norms were produced
};

// Majority-vote tagger: each norm maps to its most frequent (UPOS, XPOS,
// FEATS) triple, with suffix maps of length 3/2/1 and a global default as
// fallbacks for unseen norms. Ties break toward the lexicographically
// smallest triple, so training is order-independent.
class TaggerModel {
 public:
  TaggerModel() = default;

  static TaggerModel train(const conllu::Treebank& tb, const TaggerOptions& opts = {});

  TagTriple tag_norm(std::string_view norm) const;

  // The split-enclitic conjunction is forced to CCONJ regardless of counts.
  TagTriple tag_token(const text::SurfaceToken& token) const;

  std::string to_json() const;
  static TaggerModel from_json(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static TaggerModel load(const std::filesystem::path& path);

  const TaggerOptions& options() const { return opts_; }
  size_t norm_count() const { return norms_.size(); }

 private:
  static TagTriple pick(const std::map<TagTriple, uint64_t>& counts);

  TaggerOptions opts_;
  std::map<std::string, TagTriple> norms_;
  std::map<std::string, TagTriple> suffix3_, suffix2_, suffix1_;
  TagTriple default_;
};

std::vector<TaggedToken> tag_tokens(const TaggerModel& model,
                                    const std::vector<text::SurfaceToken>& tokens);

// Overwrites UPOS/XPOS/FEATS of every word token. Returns tokens touched.
size_t tag_treebank(const TaggerModel& model, conllu::Treebank& tb);

// Plain-text pipeline: segment, tokenize, tag, and emit one sentence record
// per segment (ids renumbered per sentence, offsets recorded in MISC).
conllu::Treebank tag_text(const TaggerModel& model, std::string_view input,
                          const text::QueExceptionList& exceptions);

}  // namespace latinpipe::tag
