#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latinpipe/conllu.hpp"
#include "latinpipe/ner.hpp"

namespace latinpipe::eval {

enum class Field { upos, xpos, feats, lemma };

struct Prf {
  size_t tp = 0;
  size_t gold = 0;  // tp + fn
  size_t pred = 0;  // tp + fp

  // Empty-vs-empty scores 1; a zero denominator against a non-empty other
  // side scores 0.
  double precision() const;
  double recall() const;
  double f1() const;
};

// Token-level exact-match accuracy over word tokens. FEATS compare by their
// canonical serialization, lemmas byte-exact.
double token_accuracy(const conllu::Treebank& gold, const conllu::Treebank& pred, Field field);

// (UAS, LAS). Punctuation rows (gold UPOS == PUNCT) are skipped unless
// include_punct; LAS matches head and full deprel string.
std::pair<double, double> attachment_scores(const conllu::Treebank& gold,
                                            const conllu::Treebank& pred, bool include_punct);

// Exact-span sentence F1 over the shared token stream: each treebank
// partitions tokens 1..N into sentence intervals; both must cover the same N.
double sentence_seg_f1(const conllu::Treebank& gold, const conllu::Treebank& pred);

// Exact-span F1 over generic spans (used directly for segmentation tests).
Prf span_prf(const std::vector<std::pair<size_t, size_t>>& gold,
             const std::vector<std::pair<size_t, size_t>>& pred);

struct SpanScores {
  std::map<std::string, Prf> per_label;
  Prf micro;
};

// Entity spans match on (start, end, label). Gold and pred must be aligned
// example-for-example with identical texts.
SpanScores ner_span_scores(const std::vector<ner::NerExample>& gold,
                           const std::vector<ner::NerExample>& pred);

// Accuracy per feature name, over gold tokens carrying that feature.
std::map<std::string, double> per_feature_accuracy(const conllu::Treebank& gold,
                                                   const conllu::Treebank& pred);

// Labeled attachment P/R/F per deprel (a token counts for its gold and
// predicted label; tp needs label + head both right).
std::map<std::string, Prf> per_deprel_scores(const conllu::Treebank& gold,
                                             const conllu::Treebank& pred, bool include_punct);

struct EvalOptions {
  bool include_punct = false;
  bool per_feature = true;
  bool per_deprel = true;
};

struct EvalReport {
  double sentence_f = 0;
  double xpos_acc = 0;
  double upos_acc = 0;
  double morph_acc = 0;
  double lemma_acc = 0;
  double uas = 0;
  double las = 0;
  std::optional<SpanScores> ner;
  std::map<std::string, double> feature_acc;
  std::map<std::string, Prf> deprel_scores;
  size_t sentences = 0;
  size_t tokens = 0;

  std::string to_text() const;
  std::string to_json() const;
};

EvalReport evaluate(const conllu::Treebank& gold, const conllu::Treebank& pred,
                    const EvalOptions& opts = {});

}  // namespace latinpipe::eval
