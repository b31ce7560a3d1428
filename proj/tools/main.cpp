// latinpipe command-line tool. All pipeline work goes through the C API in
// latinpipe/latinpipe.h; this file only handles arguments, the manifest, and
// file plumbing.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latinpipe/latinpipe.h"
#include "manifest.hpp"

namespace {

namespace fs = std::filesystem;

struct CliError : std::runtime_error {
  int code;
  CliError(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

void check(lp_status status) {
  if (status != LP_OK) throw CliError(static_cast<int>(status), lp_last_error());
}

std::string take(char* s) {
  std::string out = s ? s : "";
  lp_string_free(s);
  return out;
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
  Handle& operator=(Handle&& other) noexcept {
    std::swap(ptr, other.ptr);
    return *this;
  }
  ~Handle() {
    if (ptr) Free(ptr);
  }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};

using TreebankH = Handle<lp_treebank, lp_treebank_free>;
using TagmapH = Handle<lp_tagmap, lp_tagmap_free>;
using HarmonizeH = Handle<lp_harmonize_result, lp_harmonize_result_free>;
using LemmatizerH = Handle<lp_lemmatizer, lp_lemmatizer_free>;
using TaggerH = Handle<lp_tagger, lp_tagger_free>;
using ExamplesH = Handle<lp_examples, lp_examples_free>;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(LP_ERR_IO, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void ensure_parent(const std::string& path) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
}

void spit(const std::string& path, const std::string& content) {
  ensure_parent(path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError(LP_ERR_IO, "cannot write " + path);
  out << content;
  if (!out.flush()) throw CliError(LP_ERR_IO, "cannot write " + path);
}

// Empty or "-" writes to standard output.
void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    spit(path, content);
}

// --------------------------------------------------------------------------
// Manifest-backed defaults. Flags always win over manifest values.

struct Config {
  std::optional<Manifest> manifest;
  std::string out_dir = "out";

  const std::string* global(const std::string& key) const {
    return manifest ? manifest->global(key) : nullptr;
  }
  std::string global_or(const std::string& key, const std::string& fallback) const {
    const std::string* v = global(key);
    return v ? *v : fallback;
  }
  bool global_bool(const std::string& key, bool fallback) const {
    const std::string* v = global(key);
    if (!v) return fallback;
    if (*v == "true" || *v == "yes" || *v == "1") return true;
    if (*v == "false" || *v == "no" || *v == "0") return false;
    throw CliError(LP_ERR_INVALID, "manifest key '" + key + "': expected true/false");
  }
  size_t global_uint(const std::string& key, size_t fallback) const {
    const std::string* v = global(key);
    if (!v) return fallback;
    try {
      return std::stoull(*v);
    } catch (const std::exception&) {
      throw CliError(LP_ERR_INVALID, "manifest key '" + key + "': expected an integer");
    }
  }
  std::string artifact(const std::string& name) const {
    return (fs::path(out_dir) / name).string();
  }
};

Config g_cfg;

TreebankH read_treebank(const std::string& path, const std::string& name,
                        const std::string& split) {
  TreebankH tb;
  check(lp_treebank_read(path.c_str(), name.c_str(), split.c_str(), tb.out()));
  return tb;
}

const char* opt_cstr(const std::string& s) {
  return s.empty() ? nullptr : s.c_str();
}

// --------------------------------------------------------------------------
// convert

struct ConvertArgs {
  std::string input, name = "input", split = "unsplit", output;
  bool tsv = false;
};

void run_convert(const ConvertArgs& a) {
  TreebankH tb = read_treebank(a.input, a.name, a.split);
  char* text = nullptr;
  check(a.tsv ? lp_treebank_tsv(tb.get(), &text) : lp_treebank_serialize(tb.get(), &text));
  emit(a.output, take(text));
}

// --------------------------------------------------------------------------
// harmonize

struct HarmonizeArgs {
  std::vector<std::string> inputs;  // name:split:path
  std::string tagmap;
  bool json_report_only = false;
};

void run_harmonize(const HarmonizeArgs& a) {
  struct Input {
    std::string name, split, path;
  };
  std::vector<Input> inputs;
  if (g_cfg.manifest)
    for (const ManifestSection* section : g_cfg.manifest->of_kind("treebank")) {
      if (section->name.empty())
        throw CliError(LP_ERR_INVALID, "manifest [treebank] section without a name");
      for (const auto& [key, value] : section->entries) {
        if (key != "train" && key != "dev" && key != "test" && key != "unsplit")
          throw CliError(LP_ERR_INVALID, "manifest [treebank " + section->name +
                                             "]: unknown key '" + key + "'");
        inputs.push_back({section->name, key, value});
      }
    }
  for (const std::string& spec : a.inputs) {
    size_t c1 = spec.find(':');
    size_t c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
    if (c2 == std::string::npos)
      throw CliError(LP_ERR_INVALID, "--input expects NAME:SPLIT:PATH, got '" + spec + "'");
    inputs.push_back({spec.substr(0, c1), spec.substr(c1 + 1, c2 - c1 - 1),
                      spec.substr(c2 + 1)});
  }
  if (inputs.empty())
    throw CliError(LP_ERR_INVALID,
                   "no input treebanks (use --input or [treebank] manifest sections)");

  std::string tagmap_path = a.tagmap.empty() ? g_cfg.global_or("tagmap", "") : a.tagmap;
  TagmapH tagmap;
  check(tagmap_path.empty() ? lp_tagmap_defaults(tagmap.out())
                            : lp_tagmap_read(tagmap_path.c_str(), tagmap.out()));

  std::vector<TreebankH> owned;
  std::vector<const lp_treebank*> raw;
  for (const auto& input : inputs) {
    owned.push_back(read_treebank(input.path, input.name, input.split));
    raw.push_back(owned.back().get());
  }

  HarmonizeH result;
  check(lp_harmonize(raw.data(), raw.size(), tagmap.get(), result.out()));

  for (size_t i = 0; i < lp_harmonize_result_count(result.get()); ++i) {
    const char* split = lp_harmonize_result_split(result.get(), i);
    char* text = nullptr;
    check(lp_treebank_serialize(lp_harmonize_result_treebank(result.get(), i), &text));
    spit(g_cfg.artifact(std::string("merged-") + split + ".conllu"), take(text));
  }
  char* report_json = nullptr;
  check(lp_harmonize_result_report(result.get(), 1, &report_json));
  spit(g_cfg.artifact("harmonize-report.json"), take(report_json));
  char* report_text = nullptr;
  check(lp_harmonize_result_report(result.get(), a.json_report_only ? 1 : 0, &report_text));
  std::cout << take(report_text);
}

// --------------------------------------------------------------------------
// lemmatizer

struct TrainLemmatizerArgs {
  std::string input, output, resume;
  size_t min_tree_freq = 0, top_k = 0;  // 0 = manifest/default
  bool normalize_ij = false;
  bool ij_given = false;
};

void run_train_lemmatizer(const TrainLemmatizerArgs& a) {
  size_t mtf = a.min_tree_freq ? a.min_tree_freq : g_cfg.global_uint("min_tree_freq", 2);
  size_t top_k = a.top_k ? a.top_k : g_cfg.global_uint("top_k", 3);
  bool ij = a.ij_given ? a.normalize_ij : g_cfg.global_bool("normalize_ij", false);
  TreebankH tb = read_treebank(a.input, "train", "train");
  LemmatizerH model;
  check(lp_lemmatizer_train(tb.get(), mtf, top_k, ij ? 1 : 0, model.out()));
  std::string output = a.output.empty() ? g_cfg.artifact("lemmatizer.json") : a.output;
  if (!a.resume.empty()) {
    LemmatizerH base;
    check(lp_lemmatizer_load(a.resume.c_str(), base.out()));
    check(lp_lemmatizer_merge(base.get(), model.get()));
    ensure_parent(output);
    check(lp_lemmatizer_save(base.get(), output.c_str()));
  } else {
    ensure_parent(output);
    check(lp_lemmatizer_save(model.get(), output.c_str()));
  }
  std::cerr << "wrote " << output << "\n";
}

struct LemmatizeArgs {
  std::string model, input, output, form, norm, upos = "NOUN";
  bool no_fixes = false;
};

void run_lemmatize(const LemmatizeArgs& a) {
  LemmatizerH model;
  check(lp_lemmatizer_load(a.model.c_str(), model.out()));
  if (!a.form.empty()) {
    char* lemma = nullptr;
    check(lp_lemmatize(model.get(), a.form.c_str(), opt_cstr(a.norm), a.upos.c_str(),
                       a.no_fixes ? 0 : 1, &lemma));
    std::cout << take(lemma) << "\n";
    return;
  }
  if (a.input.empty())
    throw CliError(LP_ERR_INVALID, "lemmatize needs --input FILE or --form WORD");
  TreebankH tb = read_treebank(a.input, "input", "unsplit");
  check(lp_lemmatize_treebank(model.get(), tb.get(), a.no_fixes ? 0 : 1, nullptr));
  char* text = nullptr;
  check(lp_treebank_serialize(tb.get(), &text));
  emit(a.output, take(text));
}

// --------------------------------------------------------------------------
// tagger

struct TrainTaggerArgs {
  std::string input, output;
  bool normalize_ij = false;
  bool ij_given = false;
};

void run_train_tagger(const TrainTaggerArgs& a) {
  bool ij = a.ij_given ? a.normalize_ij : g_cfg.global_bool("normalize_ij", false);
  TreebankH tb = read_treebank(a.input, "train", "train");
  TaggerH model;
  check(lp_tagger_train(tb.get(), ij ? 1 : 0, model.out()));
  std::string output = a.output.empty() ? g_cfg.artifact("tagger.json") : a.output;
  ensure_parent(output);
  check(lp_tagger_save(model.get(), output.c_str()));
  std::cerr << "wrote " << output << "\n";
}

struct TagArgs {
  std::string model, input, text, que, output;
};

void run_tag(const TagArgs& a) {
  if (a.input.empty() == a.text.empty())
    throw CliError(LP_ERR_INVALID, "tag needs exactly one of --input (CoNLL-U) or --text");
  TaggerH model;
  check(lp_tagger_load(a.model.c_str(), model.out()));
  std::string que = a.que.empty() ? g_cfg.global_or("que_exceptions", "") : a.que;
  char* out_text = nullptr;
  if (!a.input.empty()) {
    TreebankH tb = read_treebank(a.input, "input", "unsplit");
    check(lp_tag_treebank(model.get(), tb.get(), nullptr));
    check(lp_treebank_serialize(tb.get(), &out_text));
  } else {
    std::string raw = slurp(a.text);
    TreebankH tb;
    check(lp_tag_text(model.get(), raw.c_str(), opt_cstr(que), tb.out()));
    check(lp_treebank_serialize(tb.get(), &out_text));
  }
  emit(a.output, take(out_text));
}

// --------------------------------------------------------------------------
// ner-convert

struct NerConvertArgs {
  std::vector<std::string> crf, json;
  std::string label_map, source = "herodotos", output;
  int token_col = 0, tag_col = -1;
  bool strict_bio = false;
  bool balance = false;
};

void run_ner_convert(const NerConvertArgs& a) {
  std::vector<std::string> crf = a.crf, json = a.json;
  std::string label_map = a.label_map;
  if (g_cfg.manifest)
    for (const ManifestSection* section : g_cfg.manifest->of_kind("ner")) {
      for (const std::string& path : section->all("crf")) crf.push_back(path);
      for (const std::string& path : section->all("json")) json.push_back(path);
      if (label_map.empty())
        if (const std::string* v = section->get("label_map")) label_map = *v;
    }
  if (crf.empty() && json.empty())
    throw CliError(LP_ERR_INVALID, "no inputs (use --crf/--json or a [ner] section)");

  ExamplesH merged;
  auto absorb = [&](ExamplesH part) {
    if (merged.get() == nullptr)
      merged = std::move(part);
    else
      check(lp_examples_merge(merged.get(), part.get()));
  };
  for (const std::string& path : crf) {
    std::string raw = slurp(path);
    ExamplesH part;
    check(lp_examples_from_crf(raw.c_str(), opt_cstr(label_map), a.token_col, a.tag_col,
                               a.strict_bio ? 0 : 1, a.source.c_str(), part.out()));
    absorb(std::move(part));
  }
  for (const std::string& path : json) {
    ExamplesH part;
    check(lp_examples_read(path.c_str(), part.out()));
    absorb(std::move(part));
  }

  char* out_json = nullptr;
  check(lp_examples_to_json(merged.get(), &out_json));
  std::string output = a.output.empty() ? g_cfg.artifact("ner.json") : a.output;
  emit(output, take(out_json));
  if (a.balance) {
    char* balance = nullptr;
    check(lp_examples_balance(merged.get(), 0, &balance));
    std::cout << take(balance);
  }
}

// --------------------------------------------------------------------------
// corpus-prep

struct CorpusPrepArgs {
  std::vector<std::string> inputs, patterns;
  std::string patterns_file, output, stats;
  bool no_default_pattern = false;
};

void run_corpus_prep(const CorpusPrepArgs& a) {
  std::vector<std::string> inputs = a.inputs, patterns = a.patterns;
  std::string patterns_file = a.patterns_file;
  if (g_cfg.manifest)
    for (const ManifestSection* section : g_cfg.manifest->of_kind("corpus")) {
      for (const std::string& path : section->all("input")) inputs.push_back(path);
      for (const std::string& p : section->all("pattern")) patterns.push_back(p);
      if (patterns_file.empty())
        if (const std::string* v = section->get("patterns_file")) patterns_file = *v;
    }
  if (!patterns_file.empty()) {
    std::istringstream in(slurp(patterns_file));
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
      if (!line.empty()) patterns.push_back(line);
    }
  }
  if (inputs.empty())
    throw CliError(LP_ERR_INVALID, "no inputs (use --input or a [corpus] section)");

  std::vector<const char*> in_ptrs, pat_ptrs;
  for (const auto& s : inputs) in_ptrs.push_back(s.c_str());
  for (const auto& s : patterns) pat_ptrs.push_back(s.c_str());

  std::string output = a.output.empty() ? g_cfg.artifact("corpus.txt") : a.output;
  ensure_parent(output);
  char* stats_json = nullptr;
  // No explicit patterns and no opt-out selects the built-in default filter.
  bool use_default = patterns.empty() && !a.no_default_pattern;
  check(lp_corpus_prep(in_ptrs.data(), in_ptrs.size(), output.c_str(),
                       use_default ? nullptr : pat_ptrs.data(), pat_ptrs.size(),
                       &stats_json));
  emit(a.stats, take(stats_json));
}

// --------------------------------------------------------------------------
// chunk

struct ChunkArgs {
  std::string input, output;
  size_t min_tokens = 0;  // 0 = manifest/default
  bool no_pron = false;
  bool pron_given = false;
};

void run_chunk(const ChunkArgs& a) {
  size_t min_tokens = a.min_tokens ? a.min_tokens : g_cfg.global_uint("chunk_min_tokens", 1);
  bool include_pron =
      a.pron_given ? !a.no_pron : g_cfg.global_bool("chunk_include_pron", true);
  TreebankH tb = read_treebank(a.input, "input", "unsplit");
  char* tsv = nullptr;
  check(lp_chunks(tb.get(), min_tokens, include_pron ? 1 : 0, &tsv));
  emit(a.output, take(tsv));
}

// --------------------------------------------------------------------------
// evaluate

struct EvaluateArgs {
  std::string gold, pred, ner_gold, ner_pred, output;
  bool include_punct = false;
  bool punct_given = false;
  bool json = false;
};

void run_evaluate(const EvaluateArgs& a) {
  bool punct = a.punct_given ? a.include_punct : g_cfg.global_bool("include_punct", false);
  TreebankH gold = read_treebank(a.gold, "gold", "unsplit");
  TreebankH pred = read_treebank(a.pred, "pred", "unsplit");
  ExamplesH ner_gold, ner_pred;
  if (a.ner_gold.empty() != a.ner_pred.empty())
    throw CliError(LP_ERR_INVALID, "--ner-gold and --ner-pred go together");
  if (!a.ner_gold.empty()) {
    check(lp_examples_read(a.ner_gold.c_str(), ner_gold.out()));
    check(lp_examples_read(a.ner_pred.c_str(), ner_pred.out()));
  }
  char* report = nullptr;
  check(lp_evaluate(gold.get(), pred.get(), ner_gold.get(), ner_pred.get(), punct ? 1 : 0,
                    a.json ? 1 : 0, &report));
  emit(a.output, take(report));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Latin treebank harmonization and text processing pipeline"};
  app.require_subcommand(1);
  std::string manifest_path, out_dir;
  app.add_option("--manifest", manifest_path, "run manifest (key = value + [sections])");
  app.add_option("--out", out_dir, "artifact directory (default: manifest out_dir or ./out)");

  ConvertArgs convert_args;
  auto* convert = app.add_subcommand("convert", "parse CoNLL-U, emit canonical form or TSV");
  convert->add_option("--input", convert_args.input, "CoNLL-U file")->required();
  convert->add_option("--name", convert_args.name, "treebank name for TSV rows");
  convert->add_option("--split", convert_args.split, "train|dev|test|unsplit");
  convert->add_flag("--tsv", convert_args.tsv, "emit the flat TSV row format");
  convert->add_option("--output", convert_args.output, "output file (default stdout)");

  HarmonizeArgs harmonize_args;
  auto* harmonize = app.add_subcommand("harmonize", "merge treebanks under one tag scheme");
  harmonize->add_option("--input", harmonize_args.inputs,
                        "treebank as NAME:SPLIT:PATH (repeatable)");
  harmonize->add_option("--tagmap", harmonize_args.tagmap, "tag-map config file");
  harmonize->add_flag("--json", harmonize_args.json_report_only,
                      "print the JSON report to stdout instead of the text summary");

  TrainLemmatizerArgs trainlem_args;
  auto* trainlem = app.add_subcommand("train-lemmatizer", "fit the edit-tree lemmatizer");
  trainlem->add_option("--input", trainlem_args.input, "training CoNLL-U")->required();
  trainlem->add_option("--output", trainlem_args.output, "model file");
  trainlem->add_option("--min-tree-freq", trainlem_args.min_tree_freq,
                       "frequency floor for candidate trees (default 2)");
  trainlem->add_option("--top-k", trainlem_args.top_k, "candidates tried per key (default 3)");
  auto* lem_ij = trainlem->add_flag("--normalize-ij", trainlem_args.normalize_ij,
                                    "fold j onto i in norms");
  trainlem->add_option("--resume", trainlem_args.resume,
                       "existing model whose counts the new data extends");

  LemmatizeArgs lemmatize_args;
  auto* lemmatize = app.add_subcommand("lemmatize", "predict lemmas with a trained model");
  lemmatize->add_option("--model", lemmatize_args.model, "model file")->required();
  lemmatize->add_option("--input", lemmatize_args.input, "CoNLL-U to lemmatize");
  lemmatize->add_option("--output", lemmatize_args.output, "output file (default stdout)");
  lemmatize->add_option("--form", lemmatize_args.form, "lemmatize one surface form");
  lemmatize->add_option("--norm", lemmatize_args.norm, "normalized form (with --form)");
  lemmatize->add_option("--upos", lemmatize_args.upos, "UPOS for --form (default NOUN)");
  lemmatize->add_flag("--no-fixes", lemmatize_args.no_fixes, "skip the lemma fix-up rules");

  TrainTaggerArgs traintag_args;
  auto* traintag = app.add_subcommand("train-tagger", "fit the frequency tagger");
  traintag->add_option("--input", traintag_args.input, "training CoNLL-U")->required();
  traintag->add_option("--output", traintag_args.output, "model file");
  auto* tag_ij = traintag->add_flag("--normalize-ij", traintag_args.normalize_ij,
                                    "fold j onto i in norms");

  TagArgs tag_args;
  auto* tag = app.add_subcommand("tag", "tag a CoNLL-U file or plain text");
  tag->add_option("--model", tag_args.model, "model file")->required();
  tag->add_option("--input", tag_args.input, "CoNLL-U to retag");
  tag->add_option("--text", tag_args.text, "plain text to segment, tokenize, and tag");
  tag->add_option("--que", tag_args.que, "enclitic exception list file");
  tag->add_option("--output", tag_args.output, "output file (default stdout)");

  NerConvertArgs ner_args;
  auto* nerconvert = app.add_subcommand("ner-convert", "convert entity data to span JSON");
  nerconvert->add_option("--crf", ner_args.crf, "BIO .crf file (repeatable)");
  nerconvert->add_option("--json", ner_args.json, "structured span file (repeatable)");
  nerconvert->add_option("--label-map", ner_args.label_map, "tag mapping file");
  nerconvert->add_option("--source", ner_args.source, "source tag for .crf data");
  nerconvert->add_option("--token-col", ner_args.token_col, ".crf token column (default 0)");
  nerconvert->add_option("--tag-col", ner_args.tag_col, ".crf tag column (default last)");
  nerconvert->add_flag("--strict-bio", ner_args.strict_bio,
                       "error on dangling I- tags instead of repairing");
  nerconvert->add_option("--output", ner_args.output, "output file");
  nerconvert->add_flag("--balance", ner_args.balance, "print label balance to stdout");

  CorpusPrepArgs corpus_args;
  auto* corpusprep = app.add_subcommand("corpus-prep", "dedupe and filter sentence lines");
  corpusprep->add_option("--input", corpus_args.inputs, "input text file (repeatable)");
  corpusprep->add_option("--pattern", corpus_args.patterns,
                         "boilerplate substring, case-insensitive (repeatable)");
  corpusprep->add_option("--patterns-file", corpus_args.patterns_file,
                         "file with one pattern per line");
  corpusprep->add_flag("--no-default-pattern", corpus_args.no_default_pattern,
                       "drop the built-in 'lorem ipsum' filter");
  corpusprep->add_option("--output", corpus_args.output, "cleaned corpus file");
  corpusprep->add_option("--stats", corpus_args.stats, "write stats JSON here, not stdout");

  ChunkArgs chunk_args;
  auto* chunk = app.add_subcommand("chunk", "extract base noun phrases");
  chunk->add_option("--input", chunk_args.input, "parsed CoNLL-U")->required();
  chunk->add_option("--min-tokens", chunk_args.min_tokens, "minimum chunk size (default 1)");
  auto* no_pron = chunk->add_flag("--no-pron", chunk_args.no_pron,
                                  "do not let pronouns head chunks");
  chunk->add_option("--output", chunk_args.output, "output TSV (default stdout)");

  EvaluateArgs eval_args;
  auto* evaluate = app.add_subcommand("evaluate", "score predictions against gold");
  evaluate->add_option("--gold", eval_args.gold, "gold CoNLL-U")->required();
  evaluate->add_option("--pred", eval_args.pred, "predicted CoNLL-U")->required();
  evaluate->add_option("--ner-gold", eval_args.ner_gold, "gold span JSON");
  evaluate->add_option("--ner-pred", eval_args.ner_pred, "predicted span JSON");
  auto* punct = evaluate->add_flag("--include-punct", eval_args.include_punct,
                                   "score punctuation in attachment metrics");
  evaluate->add_flag("--json", eval_args.json, "emit the JSON report");
  evaluate->add_option("--output", eval_args.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  // Verbs run only after the manifest is loaded, so its values can fill in
  // every flag that was not given explicitly.
  try {
    if (!manifest_path.empty()) g_cfg.manifest = Manifest::load(manifest_path);
    g_cfg.out_dir = !out_dir.empty() ? out_dir : g_cfg.global_or("out_dir", "out");
    trainlem_args.ij_given = lem_ij->count() > 0;
    traintag_args.ij_given = tag_ij->count() > 0;
    chunk_args.pron_given = no_pron->count() > 0;
    eval_args.punct_given = punct->count() > 0;

    if (convert->parsed()) run_convert(convert_args);
    if (harmonize->parsed()) run_harmonize(harmonize_args);
    if (trainlem->parsed()) run_train_lemmatizer(trainlem_args);
    if (lemmatize->parsed()) run_lemmatize(lemmatize_args);
    if (traintag->parsed()) run_train_tagger(traintag_args);
    if (tag->parsed()) run_tag(tag_args);
    if (nerconvert->parsed()) run_ner_convert(ner_args);
    if (corpusprep->parsed()) run_corpus_prep(corpus_args);
    if (chunk->parsed()) run_chunk(chunk_args);
    if (evaluate->parsed()) run_evaluate(eval_args);
  } catch (const CliError& e) {
    std::cerr << "latinpipe: error: " << e.what() << "\n";
    return e.code == 0 ? 1 : e.code;
  } catch (const std::exception& e) {
    std::cerr << "latinpipe: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
