#include "latinpipe/latinpipe.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "latinpipe/chunker.hpp"
#include "latinpipe/conllu.hpp"
#include "latinpipe/corpus.hpp"
#include "latinpipe/error.hpp"
#include "latinpipe/evaluator.hpp"
#include "latinpipe/harmonizer.hpp"
#include "latinpipe/lemmatizer.hpp"
#include "latinpipe/ner.hpp"
#include "latinpipe/strutil.hpp"
#include "latinpipe/tagger.hpp"
#include "latinpipe/tokenizer.hpp"

using namespace latinpipe;

struct lp_treebank {
  conllu::Treebank tb;
};
struct lp_tagmap {
  harmonize::TagMapConfig cfg;
};
struct lp_harmonize_result {
  std::vector<std::pair<std::string, lp_treebank>> items;
  harmonize::HarmonizationReport report;
};
struct lp_lemmatizer {
  lemma::LemmatizerModel model;
};
struct lp_tagger {
  tag::TaggerModel model;
};
struct lp_examples {
  std::vector<ner::NerExample> examples;
};

namespace {

thread_local std::string g_last_error;

lp_status code_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::parse: return LP_ERR_PARSE;
    case ErrorCode::invalid: return LP_ERR_INVALID;
    case ErrorCode::io: return LP_ERR_IO;
    case ErrorCode::validation: return LP_ERR_VALIDATION;
  }
  return LP_ERR_UNKNOWN;
}

template <typename Fn>
lp_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return LP_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LP_ERR_UNKNOWN;
  }
}

lp_status bad_arg(const char* fn) {
  g_last_error = std::string(fn) + ": null argument";
  return LP_ERR_INVALID;
}

char* dup_string(std::string_view s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

text::QueExceptionList que_list(const char* que_file) {
  if (que_file == nullptr) return text::QueExceptionList();
  return text::QueExceptionList::from_file(que_file);
}

std::string flatten_ws(std::string s) {
  for (auto& c : s)
    if (c == '\n' || c == '\r' || c == '\t') c = ' ';
  return s;
}

}  // namespace

extern "C" {

const char* lp_last_error(void) {
  return g_last_error.c_str();
}

void lp_string_free(char* s) {
  std::free(s);
}

/* ---- CoNLL-U treebanks -------------------------------------------------- */

lp_status lp_treebank_parse(const char* text, const char* name, const char* split,
                            lp_treebank** out) {
  if (!text || !name || !split || !out) return bad_arg("lp_treebank_parse");
  return guarded([&] {
    auto tb = conllu::parse(text, name, conllu::split_from_name(split));
    *out = new lp_treebank{std::move(tb)};
  });
}

lp_status lp_treebank_read(const char* path, const char* name, const char* split,
                           lp_treebank** out) {
  if (!path || !name || !split || !out) return bad_arg("lp_treebank_read");
  return guarded([&] {
    auto tb = conllu::parse(str::read_file(path), name, conllu::split_from_name(split));
    *out = new lp_treebank{std::move(tb)};
  });
}

void lp_treebank_free(lp_treebank* tb) {
  delete tb;
}

size_t lp_treebank_sentences(const lp_treebank* tb) {
  return tb ? tb->tb.sentences.size() : 0;
}

size_t lp_treebank_tokens(const lp_treebank* tb) {
  return tb ? tb->tb.word_token_count() : 0;
}

lp_status lp_treebank_serialize(const lp_treebank* tb, char** out) {
  if (!tb || !out) return bad_arg("lp_treebank_serialize");
  return guarded([&] { *out = dup_string(conllu::serialize(tb->tb)); });
}

lp_status lp_treebank_tsv(const lp_treebank* tb, char** out) {
  if (!tb || !out) return bad_arg("lp_treebank_tsv");
  return guarded([&] { *out = dup_string(conllu::to_tsv(tb->tb)); });
}

/* ---- harmonization ------------------------------------------------------ */

lp_status lp_tagmap_defaults(lp_tagmap** out) {
  if (!out) return bad_arg("lp_tagmap_defaults");
  return guarded([&] { *out = new lp_tagmap{harmonize::TagMapConfig::defaults()}; });
}

lp_status lp_tagmap_read(const char* path, lp_tagmap** out) {
  if (!path || !out) return bad_arg("lp_tagmap_read");
  return guarded([&] { *out = new lp_tagmap{harmonize::TagMapConfig::from_file(path)}; });
}

void lp_tagmap_free(lp_tagmap* map) {
  delete map;
}

lp_status lp_harmonize(const lp_treebank* const* inputs, size_t n_inputs,
                       const lp_tagmap* map, lp_harmonize_result** out) {
  if (!inputs || !map || !out || n_inputs == 0) return bad_arg("lp_harmonize");
  return guarded([&] {
    std::vector<conllu::Treebank> tbs;
    tbs.reserve(n_inputs);
    for (size_t i = 0; i < n_inputs; ++i) {
      if (inputs[i] == nullptr) throw invalid_error("lp_harmonize: null input treebank");
      tbs.push_back(inputs[i]->tb);
    }
    auto result = harmonize::harmonize(tbs, map->cfg);
    auto* wrapped = new lp_harmonize_result{};
    wrapped->report = std::move(result.report);
    for (auto& [split, tb] : result.merged)
      wrapped->items.emplace_back(std::string(conllu::split_name(split)),
                                  lp_treebank{std::move(tb)});
    *out = wrapped;
  });
}

void lp_harmonize_result_free(lp_harmonize_result* result) {
  delete result;
}

size_t lp_harmonize_result_count(const lp_harmonize_result* result) {
  return result ? result->items.size() : 0;
}

const char* lp_harmonize_result_split(const lp_harmonize_result* result, size_t i) {
  if (!result || i >= result->items.size()) return nullptr;
  return result->items[i].first.c_str();
}

const lp_treebank* lp_harmonize_result_treebank(const lp_harmonize_result* result,
                                                size_t i) {
  if (!result || i >= result->items.size()) return nullptr;
  return &result->items[i].second;
}

lp_status lp_harmonize_result_report(const lp_harmonize_result* result, int as_json,
                                     char** out) {
  if (!result || !out) return bad_arg("lp_harmonize_result_report");
  return guarded([&] {
    *out = dup_string(as_json ? result->report.to_json() : result->report.to_text());
  });
}

/* ---- tokenizer ---------------------------------------------------------- */

lp_status lp_tokenize(const char* text_in, const char* que_file, int normalize_ij,
                      char** out) {
  if (!text_in || !out) return bad_arg("lp_tokenize");
  return guarded([&] {
    text::TokenizerOptions opts;
    opts.normalize_ij = normalize_ij != 0;
    auto tokens = text::tokenize(text_in, que_list(que_file), opts);
    std::string tsv = "surface\tstart\tend\tnorm\tenclitic\n";
    for (const auto& t : tokens) {
      tsv += t.surface;
      tsv += '\t';
      tsv += std::to_string(t.start);
      tsv += '\t';
      tsv += std::to_string(t.end);
      tsv += '\t';
      tsv += t.norm;
      tsv += '\t';
      tsv += t.is_enclitic_part ? '1' : '0';
      tsv += '\n';
    }
    *out = dup_string(tsv);
  });
}

lp_status lp_segment(const char* text_in, char** out) {
  if (!text_in || !out) return bad_arg("lp_segment");
  return guarded([&] {
    std::string_view view(text_in);
    std::string tsv = "start\tend\ttext\n";
    for (auto [start, end] : text::segment_sentences(view)) {
      tsv += std::to_string(start);
      tsv += '\t';
      tsv += std::to_string(end);
      tsv += '\t';
      tsv += flatten_ws(std::string(view.substr(start, end - start)));
      tsv += '\n';
    }
    *out = dup_string(tsv);
  });
}

/* ---- lemmatizer --------------------------------------------------------- */

lp_status lp_lemmatizer_train(const lp_treebank* tb, size_t min_tree_freq, size_t top_k,
                              int normalize_ij, lp_lemmatizer** out) {
  if (!tb || !out) return bad_arg("lp_lemmatizer_train");
  return guarded([&] {
    lemma::LemmatizerOptions opts;
    opts.min_tree_freq = min_tree_freq;
    opts.top_k = top_k;
    opts.normalize_ij = normalize_ij != 0;
    auto pairs = lemma::pairs_from_treebank(tb->tb, opts.normalize_ij);
    *out = new lp_lemmatizer{lemma::LemmatizerModel::train(pairs, opts)};
  });
}

lp_status lp_lemmatizer_load(const char* path, lp_lemmatizer** out) {
  if (!path || !out) return bad_arg("lp_lemmatizer_load");
  return guarded([&] { *out = new lp_lemmatizer{lemma::LemmatizerModel::load(path)}; });
}

lp_status lp_lemmatizer_save(const lp_lemmatizer* model, const char* path) {
  if (!model || !path) return bad_arg("lp_lemmatizer_save");
  return guarded([&] { model->model.save(path); });
}

lp_status lp_lemmatizer_merge(lp_lemmatizer* dst, const lp_lemmatizer* src) {
  if (!dst || !src) return bad_arg("lp_lemmatizer_merge");
  return guarded([&] { dst->model.merge(src->model); });
}

void lp_lemmatizer_free(lp_lemmatizer* model) {
  delete model;
}

lp_status lp_lemmatize(const lp_lemmatizer* model, const char* form, const char* norm,
                       const char* upos, int apply_fixes, char** out) {
  if (!model || !form || !upos || !out) return bad_arg("lp_lemmatize");
  return guarded([&] {
    std::string normalized =
        norm ? std::string(norm)
             : text::normalize_orthography(form, model->model.options().normalize_ij);
    std::string result = model->model.lemmatize(normalized, upos);
    if (apply_fixes) result = lemma::fix_lemma(form, upos, result);
    *out = dup_string(result);
  });
}

lp_status lp_lemmatize_treebank(const lp_lemmatizer* model, lp_treebank* tb,
                                int apply_fixes, size_t* touched) {
  if (!model || !tb) return bad_arg("lp_lemmatize_treebank");
  return guarded([&] {
    size_t n = lemma::lemmatize_treebank(model->model, tb->tb, apply_fixes != 0);
    if (touched) *touched = n;
  });
}

/* ---- tagger ------------------------------------------------------------- */

lp_status lp_tagger_train(const lp_treebank* tb, int normalize_ij, lp_tagger** out) {
  if (!tb || !out) return bad_arg("lp_tagger_train");
  return guarded([&] {
    tag::TaggerOptions opts;
    opts.normalize_ij = normalize_ij != 0;
    *out = new lp_tagger{tag::TaggerModel::train(tb->tb, opts)};
  });
}

lp_status lp_tagger_load(const char* path, lp_tagger** out) {
  if (!path || !out) return bad_arg("lp_tagger_load");
  return guarded([&] { *out = new lp_tagger{tag::TaggerModel::load(path)}; });
}

lp_status lp_tagger_save(const lp_tagger* model, const char* path) {
  if (!model || !path) return bad_arg("lp_tagger_save");
  return guarded([&] { model->model.save(path); });
}

void lp_tagger_free(lp_tagger* model) {
  delete model;
}

lp_status lp_tag_treebank(const lp_tagger* model, lp_treebank* tb, size_t* touched) {
  if (!model || !tb) return bad_arg("lp_tag_treebank");
  return guarded([&] {
    size_t n = tag::tag_treebank(model->model, tb->tb);
    if (touched) *touched = n;
  });
}

lp_status lp_tag_text(const lp_tagger* model, const char* text_in, const char* que_file,
                      lp_treebank** out) {
  if (!model || !text_in || !out) return bad_arg("lp_tag_text");
  return guarded([&] {
    *out = new lp_treebank{tag::tag_text(model->model, text_in, que_list(que_file))};
  });
}

/* ---- entity examples ---------------------------------------------------- */

lp_status lp_examples_from_crf(const char* text_in, const char* label_map_file,
                               int token_col, int tag_col, int repair_dangling_i,
                               const char* source, lp_examples** out) {
  if (!text_in || !out) return bad_arg("lp_examples_from_crf");
  return guarded([&] {
    ner::LabelMap labels = label_map_file ? ner::LabelMap::from_file(label_map_file)
                                          : ner::LabelMap::defaults();
    ner::CrfOptions opts;
    opts.token_col = token_col;
    opts.tag_col = tag_col;
    opts.repair_dangling_i = repair_dangling_i != 0;
    ner::Source src = source ? ner::source_from_name(source) : ner::Source::herodotos;
    *out = new lp_examples{ner::parse_crf(text_in, labels, opts, src)};
  });
}

lp_status lp_examples_read(const char* path, lp_examples** out) {
  if (!path || !out) return bad_arg("lp_examples_read");
  return guarded([&] { *out = new lp_examples{ner::read_examples(path)}; });
}

lp_status lp_examples_merge(lp_examples* dst, const lp_examples* src) {
  if (!dst || !src) return bad_arg("lp_examples_merge");
  return guarded([&] {
    dst->examples.insert(dst->examples.end(), src->examples.begin(), src->examples.end());
  });
}

void lp_examples_free(lp_examples* examples) {
  delete examples;
}

size_t lp_examples_count(const lp_examples* examples) {
  return examples ? examples->examples.size() : 0;
}

lp_status lp_examples_to_json(const lp_examples* examples, char** out) {
  if (!examples || !out) return bad_arg("lp_examples_to_json");
  return guarded([&] { *out = dup_string(ner::examples_to_json(examples->examples)); });
}

lp_status lp_examples_balance(const lp_examples* examples, int as_json, char** out) {
  if (!examples || !out) return bad_arg("lp_examples_balance");
  return guarded([&] {
    auto report = ner::label_balance(examples->examples);
    *out = dup_string(as_json ? report.to_json() : report.to_text());
  });
}

/* ---- corpus preparation ------------------------------------------------- */

lp_status lp_extract_sentences(const lp_treebank* tb, char** out) {
  if (!tb || !out) return bad_arg("lp_extract_sentences");
  return guarded([&] {
    std::string joined;
    for (const auto& sentence : corpus::extract_sentences(tb->tb)) {
      joined += sentence;
      joined += '\n';
    }
    *out = dup_string(joined);
  });
}

lp_status lp_corpus_prep(const char* const* in_paths, size_t n_inputs,
                         const char* out_path, const char* const* patterns,
                         size_t n_patterns, char** stats_json) {
  if (!in_paths || !out_path || n_inputs == 0) return bad_arg("lp_corpus_prep");
  if (n_patterns > 0 && !patterns) return bad_arg("lp_corpus_prep");
  return guarded([&] {
    std::vector<std::string> pats;
    if (patterns)
      for (size_t i = 0; i < n_patterns; ++i) {
        if (patterns[i] == nullptr) throw invalid_error("lp_corpus_prep: null pattern");
        pats.emplace_back(patterns[i]);
      }
    corpus::CorpusPrep prep =
        patterns ? corpus::CorpusPrep(std::move(pats)) : corpus::CorpusPrep();
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw io_error(std::string("cannot write ") + out_path);
    for (size_t i = 0; i < n_inputs; ++i) {
      if (in_paths[i] == nullptr) throw invalid_error("lp_corpus_prep: null input path");
      std::ifstream in(in_paths[i], std::ios::binary);
      if (!in) throw io_error(std::string("cannot read ") + in_paths[i]);
      prep.process(in, out);
    }
    out.flush();
    if (!out) throw io_error(std::string("cannot write ") + out_path);
    if (stats_json) *stats_json = dup_string(prep.stats().to_json());
  });
}

/* ---- noun chunks -------------------------------------------------------- */

lp_status lp_chunks(const lp_treebank* tb, size_t min_tokens, int include_pron,
                    char** out) {
  if (!tb || !out) return bad_arg("lp_chunks");
  return guarded([&] {
    chunk::ChunkOptions opts;
    opts.min_tokens = min_tokens;
    opts.include_pron = include_pron != 0;
    *out = dup_string(chunk::chunks_tsv(tb->tb, opts));
  });
}

/* ---- evaluation --------------------------------------------------------- */

lp_status lp_evaluate(const lp_treebank* gold, const lp_treebank* pred,
                      const lp_examples* gold_examples, const lp_examples* pred_examples,
                      int include_punct, int as_json, char** out) {
  if (!gold || !pred || !out) return bad_arg("lp_evaluate");
  if ((gold_examples == nullptr) != (pred_examples == nullptr))
    return bad_arg("lp_evaluate");
  return guarded([&] {
    eval::EvalOptions opts;
    opts.include_punct = include_punct != 0;
    eval::EvalReport report = eval::evaluate(gold->tb, pred->tb, opts);
    if (gold_examples)
      report.ner = eval::ner_span_scores(gold_examples->examples, pred_examples->examples);
    *out = dup_string(as_json ? report.to_json() : report.to_text());
  });
}

} /* extern "C" */
