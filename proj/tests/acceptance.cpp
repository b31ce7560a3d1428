// Acceptance gate. Each numbered criterion prints exactly one line:
//
//   criterion N: PASS (...)   exit 0
//   criterion N: SKIP (...)   exit 77  (required asset not present)
//   criterion N: FAIL (...)   exit 1
//
// Run with a criterion number to check one criterion in a dedicated process
// (how ctest drives it), or with no arguments to run all twelve.
//
// Criteria 1-3 and 5 measure the harmonized corpus built from the five Latin
// UD treebanks. Those releases are not redistributable inside this repository;
// point LATINPIPE_UD_DIR at a directory containing the released .conllu files
// (see scripts/fetch_assets.sh) to enable them. Everything else runs
// self-contained.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "latinpipe/chunker.hpp"
#include "latinpipe/conllu.hpp"
#include "latinpipe/corpus.hpp"
#include "latinpipe/edit_tree.hpp"
#include "latinpipe/evaluator.hpp"
#include "latinpipe/harmonizer.hpp"
#include "latinpipe/lemmatizer.hpp"
#include "latinpipe/ner.hpp"
#include "latinpipe/strutil.hpp"
#include "latinpipe/tagger.hpp"
#include "latinpipe/tagmap.hpp"
#include "latinpipe/tokenizer.hpp"
#include "test_util.hpp"

namespace {

using namespace latinpipe;
using Clock = std::chrono::steady_clock;

struct Fail {
  std::string msg;
};
struct Skip {
  std::string msg;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw Fail{msg};
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

size_t vm_hwm_bytes() {
  std::ifstream in("/proc/self/status");
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("VmHWM:", 0) == 0) return std::stoull(line.substr(6)) * 1024;
  return 0;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "latinpipe-acceptance";
  std::filesystem::create_directories(dir);
  return dir;
}

/* ---- shared corpus loading ---------------------------------------------- */

const std::set<std::string> kUdNames = {"perseus", "proiel", "ittb", "udante", "llct"};

struct UdFile {
  std::string name;
  conllu::Split split;
  std::filesystem::path path;
};

// Locates la_<name>-ud-<split>.conllu files under LATINPIPE_UD_DIR. Throws
// Skip when the environment does not provide all five treebanks.
std::vector<UdFile> find_ud_files() {
  const char* dir = std::getenv("LATINPIPE_UD_DIR");
  if (dir == nullptr || *dir == '\0')
    throw Skip{"set LATINPIPE_UD_DIR to the downloaded UD treebanks "
               "(scripts/fetch_assets.sh) to enable this criterion"};
  if (!std::filesystem::is_directory(dir))
    throw Skip{std::string("LATINPIPE_UD_DIR is not a directory: ") + dir};

  std::vector<UdFile> files;
  std::set<std::string> found;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string fn = entry.path().filename().string();
    if (fn.rfind("la_", 0) != 0 || !fn.ends_with(".conllu")) continue;
    size_t ud = fn.find("-ud-");
    if (ud == std::string::npos) continue;
    std::string name = fn.substr(3, ud - 3);
    std::string split = fn.substr(ud + 4, fn.size() - (ud + 4) - 7);
    if (!kUdNames.count(name)) continue;
    if (split != "train" && split != "dev" && split != "test") continue;
    files.push_back({name, conllu::split_from_name(split), entry.path()});
    found.insert(name);
  }
  if (found != kUdNames) {
    std::string missing;
    for (const auto& name : kUdNames)
      if (!found.count(name)) missing += (missing.empty() ? "" : ", ") + name;
    throw Skip{"LATINPIPE_UD_DIR lacks treebank files for: " + missing};
  }
  std::sort(files.begin(), files.end(),
            [](const UdFile& a, const UdFile& b) { return a.path < b.path; });
  return files;
}

std::vector<conllu::Treebank> load_ud(const std::vector<UdFile>& files) {
  std::vector<conllu::Treebank> tbs;
  tbs.reserve(files.size());
  for (const auto& f : files)
    tbs.push_back(conllu::parse(str::read_file(f.path.string()), f.name, f.split));
  return tbs;
}

std::vector<conllu::Treebank> fixture_corpus(conllu::Split split = conllu::Split::train) {
  std::vector<conllu::Treebank> tbs;
  for (const char* name : {"perseus", "proiel", "ittb", "udante", "llct"})
    tbs.push_back(conllu::parse(str::read_file(fixture_path(std::string(name) + ".conllu")),
                                name, split));
  return tbs;
}

size_t postcondition_violations(const conllu::Treebank& tb, std::string& first) {
  static const std::set<std::string> nominal = {"NOUN", "PROPN", "ADJ", "DET", "PRON",
                                                "NUM"};
  static const std::set<std::string> nominal_feats = {"Gender", "Number", "Case"};
  static const std::set<std::string> verbal_feats = {"Person", "Number", "Tense", "Mood",
                                                     "Voice"};
  size_t violations = 0;
  auto flag = [&](const conllu::SentenceRecord& s, const conllu::TokenRecord& t,
                  const std::string& what) {
    if (violations == 0)
      first = s.sent_id + " token " + std::to_string(t.id) + ": " + what;
    ++violations;
  };
  for (const auto& s : tb.sentences)
    for (const auto& t : s.tokens) {
      if (t.is_mwt()) continue;
      if (t.lemma.find_first_of("vVjJ") != std::string::npos)
        flag(s, t, "lemma '" + t.lemma + "' contains v/j");
      if (nominal.count(t.upos))
        for (const auto& [name, value] : t.feats)
          if (!nominal_feats.count(name)) flag(s, t, "nominal feature " + name);
      if (t.upos == "VERB" || t.upos == "AUX")
        for (const auto& [name, value] : t.feats)
          if (!verbal_feats.count(name)) flag(s, t, "verbal feature " + name);
    }
  return violations;
}

/* ---- criteria 1-3: harmonized-corpus scale and fidelity ------------------ */

std::string criterion_1(bool) {
  auto files = find_ud_files();
  auto start = Clock::now();
  auto result = harmonize::harmonize(load_ud(files), harmonize::TagMapConfig::defaults());
  double elapsed = seconds_since(start);

  size_t sentences = 0, tokens = 0;
  for (const auto& [split, tb] : result.merged) {
    sentences += tb.sentences.size();
    tokens += tb.word_token_count();
  }
  require(sentences >= 50000 && sentences <= 58000,
          fmt("sentence count %zu outside [50000, 58000]", sentences));
  require(tokens >= 900000 && tokens <= 1050000,
          fmt("token count %zu outside [900000, 1050000]", tokens));
  require(elapsed <= 120.0, fmt("harmonization took %.1fs > 120s", elapsed));
  return fmt("%zu sentences, %zu tokens across %zu splits in %.1fs", sentences, tokens,
             result.merged.size(), elapsed);
}

std::string criterion_2(bool) {
  auto files = find_ud_files();

  size_t checked = 0;
  std::map<std::string, size_t> sentences_in;
  std::map<std::string, std::unordered_set<std::string>> input_ids;
  for (const auto& f : files) {
    std::string text = str::read_file(f.path.string());
    std::string once = conllu::canonicalize(text);
    std::string twice = conllu::canonicalize(once);
    require(once == twice, f.path.filename().string() + ": canonical form is not a "
                           "serialization fixed point");
    auto tb = conllu::parse(text, f.name, f.split);
    sentences_in[f.name] += tb.sentences.size();
    for (const auto& s : tb.sentences) input_ids[f.name].insert(s.sent_id);
    ++checked;
  }

  auto result = harmonize::harmonize(load_ud(files), harmonize::TagMapConfig::defaults());
  size_t removed_total = 0;
  for (const auto& [name, per] : result.report.per_treebank) {
    require(per.sentences_in == sentences_in.at(name),
            name + ": report input count disagrees with the parsed files");
    require(per.sentences_out + per.removed_sentence_ids.size() == per.sentences_in,
            name + ": sentences lost beyond the listed removals");
    for (const auto& id : per.removed_sentence_ids)
      require(input_ids.at(name).count(id),
              name + ": removed id '" + id + "' never occurred in the input");
    removed_total += per.removed_sentence_ids.size();
  }
  return fmt("%zu files round-trip byte-identical; %zu removals, all listed in the report",
             checked, removed_total);
}

std::string criterion_3(bool) {
  auto files = find_ud_files();
  auto result = harmonize::harmonize(load_ud(files), harmonize::TagMapConfig::defaults());
  size_t violations = 0, tokens = 0;
  std::string first;
  for (const auto& [split, tb] : result.merged) {
    std::string local;
    size_t n = postcondition_violations(tb, local);
    if (violations == 0 && n > 0) first = local;
    violations += n;
    tokens += tb.word_token_count();
  }
  require(violations == 0, fmt("%zu violations, first: %s", violations, first.c_str()));
  return fmt("0 violations over %zu tokens", tokens);
}

/* ---- criterion 4: edit-tree round-trip law ------------------------------- */

std::string criterion_4(bool) {
  size_t swept = 0;
  auto sweep = [&](const std::string& form, const std::string& lemma) {
    auto tree = lemma::EditTree::build(form, lemma);
    auto back = tree.apply(form);
    require(back.has_value() && *back == lemma,
            "apply(build(f, l), f) != l for form '" + form + "', lemma '" + lemma + "'");
    ++swept;
  };

  // every (norm, lemma) pair of the harmonized training corpus; the real
  // corpus when provided, the bundled fixture corpus otherwise
  bool real_data = std::getenv("LATINPIPE_UD_DIR") != nullptr;
  std::vector<conllu::Treebank> inputs;
  try {
    inputs = load_ud(find_ud_files());
  } catch (const Skip&) {
    real_data = false;
    inputs = fixture_corpus();
  }
  auto result = harmonize::harmonize(inputs, harmonize::TagMapConfig::defaults());
  size_t corpus_pairs = 0;
  for (const auto& [split, tb] : result.merged)
    if (split == conllu::Split::train)
      for (const auto& p : lemma::pairs_from_treebank(tb, false)) {
        sweep(p.norm, p.lemma);
        ++corpus_pairs;
      }

  // plus a seeded brute-force sweep over arbitrary non-empty string pairs
  const std::vector<std::string> units = {"a", "b", "e", "i", "m", "o", "q", "r",
                                          "s", "t", "u", "x", "\xc4\x81", "\xc5\x8d"};
  std::mt19937 rng(20260814u);
  auto word = [&] {
    size_t len = 1 + rng() % 8;
    std::string out;
    for (size_t i = 0; i < len; ++i) out += units[rng() % units.size()];
    return out;
  };
  size_t random_pairs = 100000;
  for (size_t i = 0; i < random_pairs; ++i) {
    std::string form = word();
    std::string lemma;
    switch (rng() % 4) {
      case 0: lemma = word(); break;                                // unrelated
      case 1: lemma = form.substr(0, 1 + rng() % form.size()); break;  // truncation
      case 2: lemma = form + word(); break;                         // extension
      default: {                                                    // suffix swap
        lemma = form.substr(0, rng() % form.size()) + word();
        break;
      }
    }
    sweep(form, lemma);
  }
  return fmt("%zu corpus pairs (%s) + %zu generated pairs round-trip exactly",
             corpus_pairs, real_data ? "five UD treebanks" : "fixture corpus",
             random_pairs);
}

/* ---- criterion 5: lemmatizer beats the backoff baseline ------------------ */

std::string criterion_5(bool) {
  auto files = find_ud_files();
  auto result = harmonize::harmonize(load_ud(files), harmonize::TagMapConfig::defaults());
  auto train_it = result.merged.find(conllu::Split::train);
  auto dev_it = result.merged.find(conllu::Split::dev);
  require(train_it != result.merged.end(), "merged corpus has no train split");
  require(dev_it != result.merged.end(), "merged corpus has no dev split");

  lemma::LemmatizerOptions opts;  // defaults: min_tree_freq 2, top_k 3
  auto model =
      lemma::LemmatizerModel::train(lemma::pairs_from_treebank(train_it->second, false), opts);

  size_t total = 0, model_hits = 0, backoff_hits = 0;
  for (const auto& p : lemma::pairs_from_treebank(dev_it->second, false)) {
    ++total;
    if (model.lemmatize(p.norm, p.upos) == p.lemma) ++model_hits;
    if (p.norm == p.lemma) ++backoff_hits;
  }
  require(total > 0, "dev split holds no training pairs");
  double model_acc = double(model_hits) / double(total);
  double backoff_acc = double(backoff_hits) / double(total);
  require(model_acc >= backoff_acc + 0.10,
          fmt("model %.4f vs backoff %.4f: gap below 10 points", model_acc, backoff_acc));
  return fmt("dev accuracy: model %.4f vs pure backoff %.4f (+%.1f points, %zu tokens)",
             model_acc, backoff_acc, (model_acc - backoff_acc) * 100.0, total);
}

/* ---- criterion 6: tokenizer laws ----------------------------------------- */

std::string criterion_6(bool) {
  text::QueExceptionList exceptions;
  const std::vector<std::string> exception_words = {
      "neque", "atque", "itaque", "quoque", "plerumque",
      "quicumque", "uterque", "quinque", "usque", "denique"};
  for (const auto& w : exception_words)
    require(exceptions.contains(w), "exception list misses " + w);

  std::mt19937 rng(615214u);
  const std::string letters = "abcdefghilmnoprstu";
  auto letters_of = [&](size_t len) {
    std::string out;
    for (size_t i = 0; i < len; ++i) out += letters[rng() % letters.size()];
    return out;
  };

  enum Kind { plain, que_word, exception, punct_tail };
  struct Unit {
    Kind kind;
    std::string text;
  };

  size_t strings = 1000, tokens_seen = 0;
  for (size_t round = 0; round < strings; ++round) {
    std::vector<Unit> units;
    std::string full;
    size_t n_units = 1 + rng() % 8;
    for (size_t u = 0; u < n_units; ++u) {
      Unit unit;
      switch (rng() % 4) {
        case 0: {
          unit.kind = plain;
          unit.text = letters_of(1 + rng() % 9);
          if (unit.text.size() > 3 && unit.text.ends_with("que")) unit.text += "m";
          break;
        }
        case 1: {
          unit.kind = que_word;
          unit.text = letters_of(1 + rng() % 7) + "que";
          while (exceptions.contains(str::lower(unit.text)))
            unit.text.insert(unit.text.size() - 3, "x");
          break;
        }
        case 2: {
          unit.kind = exception;
          unit.text = exception_words[rng() % exception_words.size()];
          break;
        }
        default: {
          unit.kind = punct_tail;
          unit.text = letters_of(1 + rng() % 6);
          if (unit.text.size() > 3 && unit.text.ends_with("que")) unit.text += "m";
          unit.text += ",.;!?"[rng() % 5];
          break;
        }
      }
      if (rng() % 4 == 0) unit.text[0] = char(std::toupper((unsigned char)unit.text[0]));
      if (!full.empty())
        for (size_t s = 0, spaces = 1 + rng() % 3; s < spaces; ++s)
          full += " \t\n"[rng() % 3];
      full += unit.text;
      units.push_back(unit);
    }

    auto toks = text::tokenize(full, exceptions);
    tokens_seen += toks.size();

    // offsets reconstruct the input exactly, in order, without overlap
    std::string no_ws;
    for (char c : full)
      if (!std::isspace((unsigned char)c)) no_ws += c;
    std::string rebuilt;
    size_t prev_end = 0;
    for (const auto& t : toks) {
      require(t.start >= prev_end && t.end > t.start && t.end <= full.size(),
              fmt("round %zu: token offsets out of order", round));
      require(full.substr(t.start, t.end - t.start) == t.surface,
              fmt("round %zu: surface does not match its offsets", round));
      require(t.norm == text::normalize_orthography(t.surface),
              fmt("round %zu: norm law violated", round));
      rebuilt += t.surface;
      prev_end = t.end;
    }
    require(rebuilt == no_ws, fmt("round %zu: tokens do not cover the text", round));

    // per-word expectations, located by scanning the token stream in order
    size_t cursor = 0, ti = 0;
    for (const auto& unit : units) {
      cursor = full.find(unit.text, cursor);
      size_t u_start = cursor, u_end = cursor + unit.text.size();
      cursor = u_end;
      std::vector<text::SurfaceToken> inside;
      while (ti < toks.size() && toks[ti].end <= u_end) {
        if (toks[ti].start >= u_start) inside.push_back(toks[ti]);
        ++ti;
      }
      switch (unit.kind) {
        case plain:
        case exception:
          require(inside.size() == 1 && inside[0].surface == unit.text &&
                      !inside[0].is_enclitic_part,
                  fmt("round %zu: '%s' did not survive whole", round, unit.text.c_str()));
          break;
        case que_word:
          require(inside.size() == 2 && inside[1].surface == "que" &&
                      inside[1].is_enclitic_part && inside[1].start == u_end - 3 &&
                      inside[0].end == inside[1].start,
                  fmt("round %zu: '%s' not split stem+que", round, unit.text.c_str()));
          break;
        case punct_tail:
          require(inside.size() == 2 &&
                      inside[0].surface == unit.text.substr(0, unit.text.size() - 1) &&
                      inside[1].surface == unit.text.substr(unit.text.size() - 1) &&
                      inside[1].start == u_end - 1,
                  fmt("round %zu: trailing punctuation not separated in '%s'", round,
                      unit.text.c_str()));
          break;
      }
    }
  }

  // the fixed reference example
  auto toks = text::tokenize("cano,", exceptions);
  require(toks.size() == 2 && toks[0].surface == "cano" && toks[1].surface == ",",
          "\"cano,\" did not tokenize to [cano, ,]");
  return fmt("%zu generated strings / %zu tokens satisfy the offset, exception and "
             "enclitic laws; \"cano,\" -> [cano, ,]",
             strings, tokens_seen);
}

/* ---- criterion 7: lemma fixer -------------------------------------------- */

std::string criterion_7(bool) {
  // an adversarial model that lemmatizes bare "que" wrongly on purpose
  std::vector<lemma::TrainingPair> pairs = {
      {"que", "que", "CCONJ", "queo"},
      {"que", "que", "CCONJ", "queo"},
      {"amat", "amat", "VERB", "amo"},
      {"amat", "amat", "VERB", "amo"},
  };
  auto model = lemma::LemmatizerModel::train(pairs);
  require(model.lemmatize("que", "CCONJ") == "queo",
          "setup: the raw model should predict the wrong lemma");

  auto tb = conllu::parse(str::read_file(fixture_path("fixer.conllu")), "fixer",
                          conllu::Split::unsplit);
  lemma::lemmatize_treebank(model, tb, true);

  size_t que_tokens = 0, punct_tokens = 0, violations = 0;
  for (const auto& s : tb.sentences)
    for (const auto& t : s.tokens) {
      if (t.is_mwt()) continue;
      if (t.upos == "CCONJ" && str::lower(t.form) == "que") {
        ++que_tokens;
        if (t.lemma != "que") ++violations;
      }
      if (t.upos == "PUNCT") {
        ++punct_tokens;
        if (t.lemma != t.form) ++violations;
      }
    }
  require(que_tokens == 3 && punct_tokens == 3, "fixture lost its que/punct tokens");
  require(violations == 0, fmt("%zu violations", violations));
  return fmt("0 violations: %zu enclitic que tokens -> \"que\", %zu punct lemmas equal "
             "their surface",
             que_tokens, punct_tokens);
}

/* ---- criterion 8: noun chunks on the gold paragraph ----------------------- */

std::string criterion_8(bool) {
  auto tb = conllu::parse(str::read_file(fixture_path("ritchie.conllu")), "ritchie",
                          conllu::Split::unsplit);
  chunk::ChunkOptions opts;
  opts.min_tokens = 2;
  std::multiset<std::string> got;
  for (const auto& s : tb.sentences)
    for (const auto& c : chunk::noun_chunks(s, opts)) got.insert(c.text);
  const std::multiset<std::string> expected = {
      "maximi deorum", "auus eius",   "nepotem suum", "arca lignea",
      "arcam ipsam",   "magna mare",  "sinu matris",  "Persei mater"};
  if (got != expected) {
    std::string listing;
    for (const auto& c : got) listing += "'" + c + "' ";
    throw Fail{"chunk set mismatch, got: " + listing};
  }
  return fmt("the %zu-chunk set matches the reference exactly", expected.size());
}

/* ---- criterion 9: evaluator identities ------------------------------------ */

std::string criterion_9(bool) {
  auto ritchie = conllu::parse(str::read_file(fixture_path("ritchie.conllu")), "ritchie",
                               conllu::Split::unsplit);

  // pred = gold: every reported metric is exactly 1.0
  auto self = eval::evaluate(ritchie, ritchie);
  require(self.sentence_f == 1.0 && self.upos_acc == 1.0 && self.xpos_acc == 1.0 &&
              self.morph_acc == 1.0 && self.lemma_acc == 1.0 && self.uas == 1.0 &&
              self.las == 1.0,
          "self-evaluation is not all 1.0");
  for (const auto& [feature, acc] : self.feature_acc)
    require(acc == 1.0, "self-evaluation per-feature " + feature + " != 1.0");
  for (const auto& [deprel, prf] : self.deprel_scores)
    require(prf.f1() == 1.0, "self-evaluation per-deprel " + deprel + " != 1.0");

  // flipping k of n lemmas scores exactly (n-k)/n
  size_t n = ritchie.word_token_count();
  for (size_t k : {size_t(1), size_t(5), n / 2, n - 1}) {
    auto pred = ritchie;
    size_t left = k;
    for (auto& s : pred.sentences)
      for (auto& t : s.tokens) {
        if (t.is_mwt() || left == 0) continue;
        t.lemma += "_flip";
        --left;
      }
    double acc = eval::token_accuracy(ritchie, pred, eval::Field::lemma);
    require(acc == double(n - k) / double(n),
            fmt("flipping %zu of %zu lemmas gave %.6f", k, n, acc));
  }

  // the three counting fixtures
  auto gold = conllu::parse(str::read_file(fixture_path("eval_gold.conllu")), "gold",
                            conllu::Split::unsplit);
  auto pred = conllu::parse(str::read_file(fixture_path("eval_pred.conllu")), "pred",
                            conllu::Split::unsplit);
  auto report = eval::evaluate(gold, pred);
  require(report.tokens == 10 && report.upos_acc == 0.9,
          fmt("10-token fixture with 1 flipped UPOS scored %.4f", report.upos_acc));

  auto att_gold = conllu::parse(
      "1\tregina\t_\tNOUN\t_\t_\t2\tnsubj\t_\t_\n"
      "2\tlaudat\t_\tVERB\t_\t_\t0\troot\t_\t_\n"
      "3\tnautam\t_\tNOUN\t_\t_\t2\tobj\t_\t_\n"
      "4\thodie\t_\tADV\t_\t_\t2\tadvmod\t_\t_\n"
      "5\t.\t_\tPUNCT\t_\t_\t2\tpunct\t_\t_\n",
      "gold", conllu::Split::unsplit);
  auto att_pred = conllu::parse(
      "1\tregina\t_\tNOUN\t_\t_\t2\tnsubj\t_\t_\n"
      "2\tlaudat\t_\tVERB\t_\t_\t0\troot\t_\t_\n"
      "3\tnautam\t_\tNOUN\t_\t_\t2\tiobj\t_\t_\n"
      "4\thodie\t_\tADV\t_\t_\t3\tadvmod\t_\t_\n"
      "5\t.\t_\tPUNCT\t_\t_\t2\tpunct\t_\t_\n",
      "pred", conllu::Split::unsplit);
  auto [uas, las] = eval::attachment_scores(att_gold, att_pred, false);
  require(uas == 0.75 && las == 0.5,
          fmt("attachment fixture scored (%.4f, %.4f), want (0.75, 0.5)", uas, las));
  auto [uas_p, las_p] = eval::attachment_scores(att_gold, att_pred, true);
  require(uas_p == 0.8 && las_p == 0.6,
          fmt("punct-included attachment scored (%.4f, %.4f), want (0.8, 0.6)", uas_p,
              las_p));

  auto sized = [](std::initializer_list<int> sizes) {
    std::string text;
    int sent = 0;
    for (int size : sizes) {
      text += "# sent_id = s" + std::to_string(++sent) + "\n";
      for (int i = 1; i <= size; ++i)
        text += std::to_string(i) + "\tw\t_\t_\t_\t_\t_\t_\t_\t_\n";
      text += "\n";
    }
    return conllu::parse(text, "t", conllu::Split::unsplit);
  };
  double seg = eval::sentence_seg_f1(sized({1, 2, 2, 1}), sized({1, 2, 3}));
  require(std::abs(seg - 4.0 / 7.0) < 1e-12,
          fmt("segmentation fixture scored %.6f, want 4/7", seg));

  // las <= uas over 1,000 random perturbations
  const char* rels[] = {"nsubj", "obj", "root", "advmod"};
  std::mt19937 rng(20260814u);
  for (int round = 0; round < 1000; ++round) {
    auto noisy = ritchie;
    for (auto& s : noisy.sentences) {
      int words = int(s.word_count());
      for (auto& t : s.tokens) {
        if (t.is_mwt()) continue;
        t.head = int(rng() % unsigned(words + 1));
        t.deprel = rels[rng() % 4];
      }
    }
    auto [u, l] = eval::attachment_scores(ritchie, noisy, round % 2 == 0);
    require(l <= u, fmt("round %d: las %.4f > uas %.4f", round, l, u));
  }
  return "all-1.0 self-eval, exact (n-k)/n flips, the three counting fixtures, and "
         "las <= uas on 1000 perturbations";
}

/* ---- criterion 10: NER conversion ----------------------------------------- */

std::string criterion_10(bool) {
  auto crf = ner::parse_crf(str::read_file(fixture_path("herodotos.crf")),
                            ner::LabelMap::defaults());
  require(crf.size() == 3, fmt(".crf fixture produced %zu examples", crf.size()));
  auto span_text = [](const ner::NerExample& ex, size_t i) {
    return ex.text.substr(ex.spans[i].start, ex.spans[i].end - ex.spans[i].start);
  };
  require(crf[0].spans.size() == 3 && span_text(crf[0], 0) == "Croesus" &&
              crf[0].spans[0].label == ner::Label::person &&
              span_text(crf[0], 1) == "Lydius" &&
              crf[0].spans[1].label == ner::Label::norp &&
              span_text(crf[0], 2) == "Sardibus" &&
              crf[0].spans[2].label == ner::Label::loc,
          "example 1 offsets wrong");
  require(crf[1].spans.size() == 1 && span_text(crf[1], 0) == "Alexander Magnus",
          "example 2 multi-token span wrong");
  require(crf[2].spans.size() == 1 && span_text(crf[2], 0) == "Cyri",
          "example 3 span at end of input wrong");

  // structured-file round trip, both in memory and through the filesystem
  auto originals = ner::read_examples(fixture_path("ud_persons.json"));
  require(ner::examples_from_json(ner::examples_to_json(originals)) == originals,
          "in-memory JSON round trip is lossy");
  auto path = scratch_dir() / "roundtrip.json";
  ner::write_examples(originals, path);
  require(ner::read_examples(path) == originals, "file round trip is lossy");
  std::filesystem::remove(path);

  // PERSON dominates the label distribution of the UD-derived assets
  std::vector<ner::NerExample> assets;
  std::string asset_note;
  const char* ner_dir = std::getenv("LATINPIPE_NER_DIR");
  if (ner_dir != nullptr && std::filesystem::is_directory(ner_dir)) {
    for (const auto& entry : std::filesystem::recursive_directory_iterator(ner_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        auto more = ner::read_examples(entry.path());
        assets.insert(assets.end(), more.begin(), more.end());
      }
    require(!assets.empty(), "LATINPIPE_NER_DIR holds no .json asset files");
    asset_note = "downloaded assets";
  } else {
    assets = originals;
    assets.insert(assets.end(), crf.begin(), crf.end());
    asset_note = "fixture assets (set LATINPIPE_NER_DIR for downloaded ones)";
  }
  auto balance = ner::label_balance(assets);
  auto person = balance.per_label.find("PERSON");
  require(person != balance.per_label.end(), "no PERSON spans at all");
  for (const auto& [label, count] : balance.per_label)
    if (label != "PERSON")
      require(count < person->second,
              fmt("%s count %zu not strictly below PERSON %zu", label.c_str(), count,
                  person->second));
  return fmt("exact offsets, lossless round trip; PERSON %zu strictly largest over %s",
             person->second, asset_note.c_str());
}

/* ---- criterion 11: corpus prep at scale ------------------------------------ */

std::string criterion_11(bool dedicated) {
  const size_t total_lines = 10000000;
  const size_t distinct = 4000000;     // 5.9M duplicates = 59% of all lines
  const size_t lorem_every = 100;      // 1% boilerplate
  static const char* prefixes[16] = {
      "arma", "bella", "causa", "dona", "equus", "fata", "gens", "hora",
      "ignis", "lumen", "mons", "nauis", "ora", "pax", "regna", "silua"};

  // bijective for k < 26^5, so every k below `distinct` yields a unique line
  auto line_of = [&](size_t k) {
    char code[6];
    size_t v = k;
    for (int i = 4; i >= 0; --i) {
      code[i] = char('a' + v % 26);
      v /= 26;
    }
    code[5] = '\0';
    return std::string(prefixes[k % 16]) + " " + code;
  };

  auto dir = scratch_dir();
  auto in_path = dir / "corpus_input.txt";
  auto out_path = dir / "corpus_output.txt";

  {
    std::ofstream out(in_path, std::ios::binary);
    require(out.good(), "cannot create the generated corpus in the temp directory");
    std::string buffer;
    buffer.reserve(1 << 20);
    size_t j = 0;  // index over non-boilerplate lines
    for (size_t i = 0; i < total_lines; ++i) {
      if (i % lorem_every == lorem_every - 1) {
        buffer += "lorem ipsum dolor sit amet";
      } else {
        buffer += line_of(j % distinct);
        ++j;
      }
      buffer += '\n';
      if (buffer.size() > (1 << 20) - 64) {
        out.write(buffer.data(), std::streamsize(buffer.size()));
        buffer.clear();
      }
    }
    out.write(buffer.data(), std::streamsize(buffer.size()));
    require(out.good(), "writing the generated corpus failed");
  }

  corpus::CorpusPrep prep;
  auto start = Clock::now();
  {
    std::ifstream in(in_path, std::ios::binary);
    std::ofstream out(out_path, std::ios::binary);
    require(in.good() && out.good(), "cannot open the generated corpus");
    prep.process(in, out);
    require(out.good(), "writing survivors failed");
  }
  double elapsed = seconds_since(start);

  const auto& stats = prep.stats();
  require(stats.lines_in == total_lines, "not every line was read");
  require(stats.kept == distinct,
          fmt("kept %zu lines, expected %zu", stats.kept, distinct));
  require(stats.duplicates == total_lines - total_lines / lorem_every - distinct,
          fmt("duplicate count %zu off", stats.duplicates));
  require(stats.boilerplate == total_lines / lorem_every,
          fmt("boilerplate count %zu off", stats.boilerplate));
  require(stats.empty == 0, "no empty lines were generated");

  {
    std::ifstream check(out_path, std::ios::binary);
    std::string line;
    size_t j = 0;
    while (std::getline(check, line)) {
      require(j < distinct, "more survivors than distinct keys");
      require(line == line_of(j), fmt("survivor %zu is not the expected line", j));
      ++j;
    }
    require(j == distinct, fmt("only %zu of %zu survivors written", j, distinct));
  }

  require(elapsed <= 300.0, fmt("one-pass prep took %.1fs > 300s", elapsed));

  size_t hwm = vm_hwm_bytes();
  const size_t memory_bound = size_t(256) << 20;  // hash set of 4M keys plus slack
  if (dedicated)
    require(hwm > 0 && hwm <= memory_bound,
            fmt("peak memory %.1f MiB exceeds the %.0f MiB distinct-key bound",
                hwm / 1048576.0, memory_bound / 1048576.0));

  std::filesystem::remove(in_path);
  std::filesystem::remove(out_path);
  return fmt("%zu lines -> %zu survivors (59%% duplicates, 1%% boilerplate) in %.1fs, "
             "peak memory %.1f MiB%s",
             total_lines, distinct, elapsed, hwm / 1048576.0,
             dedicated ? "" : " (bound enforced only in a dedicated process)");
}

/* ---- criterion 12: determinism --------------------------------------------- */

std::string run_pipeline() {
  std::string artifacts;
  auto emit = [&](const std::string& piece) {
    artifacts += piece;
    artifacts += "\n---\n";
  };

  auto result = harmonize::harmonize(fixture_corpus(), harmonize::TagMapConfig::defaults());
  for (const auto& [split, tb] : result.merged) emit(conllu::serialize(tb));
  emit(result.report.to_text());
  emit(result.report.to_json());

  const auto& train = result.merged.at(conllu::Split::train);
  auto lemmatizer = lemma::LemmatizerModel::train(lemma::pairs_from_treebank(train, false));
  emit(lemmatizer.to_json());
  auto tagger = tag::TaggerModel::train(train);
  emit(tagger.to_json());

  auto fixer = conllu::parse(str::read_file(fixture_path("fixer.conllu")), "fixer",
                             conllu::Split::unsplit);
  lemma::lemmatize_treebank(lemmatizer, fixer, true);
  tag::tag_treebank(tagger, fixer);
  emit(conllu::serialize(fixer));

  auto tagged = tag::tag_text(tagger, str::read_file(fixture_path("sample_text.txt")),
                              text::QueExceptionList());
  emit(conllu::serialize(tagged));

  auto examples = ner::parse_crf(str::read_file(fixture_path("herodotos.crf")),
                                 ner::LabelMap::defaults());
  auto ud = ner::read_examples(fixture_path("ud_persons.json"));
  examples.insert(examples.end(), ud.begin(), ud.end());
  emit(ner::examples_to_json(examples));
  emit(ner::label_balance(examples).to_json());

  corpus::CorpusPrep prep;
  std::string survivors;
  prep.process_text(str::read_file(fixture_path("lines.txt")), survivors);
  emit(survivors);
  emit(prep.stats().to_json());

  chunk::ChunkOptions chunk_opts;
  chunk_opts.min_tokens = 2;
  auto ritchie = conllu::parse(str::read_file(fixture_path("ritchie.conllu")), "ritchie",
                               conllu::Split::unsplit);
  emit(chunk::chunks_tsv(ritchie, chunk_opts));

  auto gold = conllu::parse(str::read_file(fixture_path("eval_gold.conllu")), "gold",
                            conllu::Split::unsplit);
  auto pred = conllu::parse(str::read_file(fixture_path("eval_pred.conllu")), "pred",
                            conllu::Split::unsplit);
  emit(eval::evaluate(gold, pred).to_json());
  return artifacts;
}

std::string criterion_12(bool) {
  std::string first = run_pipeline();
  std::string second = run_pipeline();
  require(first == second, "two pipeline runs disagree");
  require(!first.empty(), "pipeline produced no artifacts");
  return fmt("two full-pipeline runs produced byte-identical artifacts (%zu bytes)",
             first.size());
}

using CriterionFn = std::string (*)(bool);
const CriterionFn kCriteria[12] = {
    criterion_1, criterion_2, criterion_3, criterion_4,  criterion_5,  criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  if (argc > 2) {
    std::fprintf(stderr, "usage: %s [criterion 1-12]\n", argv[0]);
    return 2;
  }
  if (argc == 2) {
    int n = std::atoi(argv[1]);
    if (n < 1 || n > 12) {
      std::fprintf(stderr, "usage: %s [criterion 1-12]\n", argv[0]);
      return 2;
    }
    selected.push_back(n);
  } else {
    for (int n = 1; n <= 12; ++n) selected.push_back(n);
  }
  bool dedicated = selected.size() == 1;

  int exit_code = 0;
  for (int n : selected) {
    try {
      std::string detail = kCriteria[n - 1](dedicated);
      std::printf("criterion %d: PASS (%s)\n", n, detail.c_str());
    } catch (const Skip& s) {
      std::printf("criterion %d: SKIP (%s)\n", n, s.msg.c_str());
      if (dedicated) exit_code = 77;
    } catch (const Fail& f) {
      std::printf("criterion %d: FAIL (%s)\n", n, f.msg.c_str());
      exit_code = 1;
    } catch (const std::exception& e) {
      std::printf("criterion %d: FAIL (unexpected error: %s)\n", n, e.what());
      exit_code = 1;
    }
    std::fflush(stdout);
  }
  return exit_code;
}
