/* C interface to the Latin treebank/text processing library. All functions
   returning lp_status report failure details through lp_last_error(); every
   char** output is a fresh heap string to release with lp_string_free(). */
#ifndef LATINPIPE_LATINPIPE_H_
#define LATINPIPE_LATINPIPE_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LP_OK = 0,
  LP_ERR_PARSE = 1,      /* malformed input file */
  LP_ERR_INVALID = 2,    /* bad argument or configuration */
  LP_ERR_IO = 3,         /* file could not be read or written */
  LP_ERR_VALIDATION = 4, /* data violates a documented invariant */
  LP_ERR_UNKNOWN = 5
} lp_status;

/* Message for the most recent failure in the calling thread. */
const char* lp_last_error(void);

void lp_string_free(char* s);

typedef struct lp_treebank lp_treebank;
typedef struct lp_tagmap lp_tagmap;
typedef struct lp_harmonize_result lp_harmonize_result;
typedef struct lp_lemmatizer lp_lemmatizer;
typedef struct lp_tagger lp_tagger;
typedef struct lp_examples lp_examples;

/* ---- CoNLL-U treebanks -------------------------------------------------- */

/* split: "train", "dev", "test", or "unsplit". */
lp_status lp_treebank_parse(const char* text, const char* name, const char* split,
                            lp_treebank** out);
lp_status lp_treebank_read(const char* path, const char* name, const char* split,
                           lp_treebank** out);
void lp_treebank_free(lp_treebank* tb);

size_t lp_treebank_sentences(const lp_treebank* tb);
size_t lp_treebank_tokens(const lp_treebank* tb); /* word tokens, range lines excluded */

lp_status lp_treebank_serialize(const lp_treebank* tb, char** out);
lp_status lp_treebank_tsv(const lp_treebank* tb, char** out);

/* ---- harmonization ------------------------------------------------------ */

lp_status lp_tagmap_defaults(lp_tagmap** out);
lp_status lp_tagmap_read(const char* path, lp_tagmap** out);
void lp_tagmap_free(lp_tagmap* map);

lp_status lp_harmonize(const lp_treebank* const* inputs, size_t n_inputs,
                       const lp_tagmap* map, lp_harmonize_result** out);
void lp_harmonize_result_free(lp_harmonize_result* result);

size_t lp_harmonize_result_count(const lp_harmonize_result* result);
/* Split name of the i-th merged treebank; borrowed, valid while result lives. */
const char* lp_harmonize_result_split(const lp_harmonize_result* result, size_t i);
const lp_treebank* lp_harmonize_result_treebank(const lp_harmonize_result* result, size_t i);
lp_status lp_harmonize_result_report(const lp_harmonize_result* result, int as_json,
                                     char** out);

/* ---- tokenizer ---------------------------------------------------------- */

/* TSV with one token per line: surface, start, end, norm, enclitic flag.
   que_file may be NULL for the built-in enclitic exception list. */
lp_status lp_tokenize(const char* text, const char* que_file, int normalize_ij,
                      char** out);

/* One line per sentence span: start, end, text. */
lp_status lp_segment(const char* text, char** out);

/* ---- lemmatizer --------------------------------------------------------- */

lp_status lp_lemmatizer_train(const lp_treebank* tb, size_t min_tree_freq, size_t top_k,
                              int normalize_ij, lp_lemmatizer** out);
lp_status lp_lemmatizer_load(const char* path, lp_lemmatizer** out);
lp_status lp_lemmatizer_save(const lp_lemmatizer* model, const char* path);
/* Adds src's counts into dst (incremental retraining). */
lp_status lp_lemmatizer_merge(lp_lemmatizer* dst, const lp_lemmatizer* src);
void lp_lemmatizer_free(lp_lemmatizer* model);

/* norm may be NULL to derive it from form with the model's normalization. */
lp_status lp_lemmatize(const lp_lemmatizer* model, const char* form, const char* norm,
                       const char* upos, int apply_fixes, char** out);
lp_status lp_lemmatize_treebank(const lp_lemmatizer* model, lp_treebank* tb,
                                int apply_fixes, size_t* touched);

/* ---- tagger ------------------------------------------------------------- */

lp_status lp_tagger_train(const lp_treebank* tb, int normalize_ij, lp_tagger** out);
lp_status lp_tagger_load(const char* path, lp_tagger** out);
lp_status lp_tagger_save(const lp_tagger* model, const char* path);
void lp_tagger_free(lp_tagger* model);

lp_status lp_tag_treebank(const lp_tagger* model, lp_treebank* tb, size_t* touched);
/* Segment + tokenize + tag plain text into a new treebank. */
lp_status lp_tag_text(const lp_tagger* model, const char* text, const char* que_file,
                      lp_treebank** out);

/* ---- entity examples ---------------------------------------------------- */

/* label_map_file NULL = built-in PRS/PER->PERSON, GEO/LOC->LOC, GRP/NORP->NORP.
   tag_col -1 addresses the last column; source is "ud" or "herodotos". */
lp_status lp_examples_from_crf(const char* text, const char* label_map_file,
                               int token_col, int tag_col, int repair_dangling_i,
                               const char* source, lp_examples** out);
lp_status lp_examples_read(const char* path, lp_examples** out);
/* Appends src's examples to dst. */
lp_status lp_examples_merge(lp_examples* dst, const lp_examples* src);
void lp_examples_free(lp_examples* examples);

size_t lp_examples_count(const lp_examples* examples);
lp_status lp_examples_to_json(const lp_examples* examples, char** out);
lp_status lp_examples_balance(const lp_examples* examples, int as_json, char** out);

/* ---- corpus preparation ------------------------------------------------- */

/* Plain sentences out of a treebank, one per line. */
lp_status lp_extract_sentences(const lp_treebank* tb, char** out);

/* Streams every input file through the cleaner into out_path: empty lines,
   case-insensitive boilerplate matches, and whitespace-normalized duplicates
   are dropped; the dedupe set spans all inputs. n_patterns 0 with patterns
   NULL selects the default "lorem ipsum" pattern. */
lp_status lp_corpus_prep(const char* const* in_paths, size_t n_inputs,
                         const char* out_path, const char* const* patterns,
                         size_t n_patterns, char** stats_json);

/* ---- noun chunks -------------------------------------------------------- */

/* TSV: sent_id, start id, end id (inclusive), chunk text. */
lp_status lp_chunks(const lp_treebank* tb, size_t min_tokens, int include_pron,
                    char** out);

/* ---- evaluation --------------------------------------------------------- */

/* gold_examples/pred_examples may be NULL to skip entity scores. */
lp_status lp_evaluate(const lp_treebank* gold, const lp_treebank* pred,
                      const lp_examples* gold_examples, const lp_examples* pred_examples,
                      int include_punct, int as_json, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LATINPIPE_LATINPIPE_H_ */
