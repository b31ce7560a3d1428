#include "latinpipe/evaluator.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "latinpipe/error.hpp"
#include "nlohmann/json.hpp"

namespace latinpipe::eval {

namespace {

// Both treebanks must hold the same sentences with the same word tokens.
void check_aligned(const conllu::Treebank& gold, const conllu::Treebank& pred) {
  if (gold.sentences.size() != pred.sentences.size())
    throw validation_error("sentence count mismatch: gold " +
                           std::to_string(gold.sentences.size()) + ", predicted " +
                           std::to_string(pred.sentences.size()));
  for (size_t i = 0; i < gold.sentences.size(); ++i) {
    const auto& g = gold.sentences[i];
    const auto& p = pred.sentences[i];
    if (g.word_count() != p.word_count())
      throw validation_error("tokenization mismatch at sentence '" + g.sent_id +
                             "' (index " + std::to_string(i) + "): gold " +
                             std::to_string(g.word_count()) + " tokens, predicted " +
                             std::to_string(p.word_count()));
    for (size_t gi = 0, pi = 0; gi < g.tokens.size(); ++gi) {
      if (g.tokens[gi].is_mwt()) continue;
      while (pi < p.tokens.size() && p.tokens[pi].is_mwt()) ++pi;
      if (g.tokens[gi].form != p.tokens[pi].form)
        throw validation_error("form mismatch at sentence '" + g.sent_id + "' token " +
                               std::to_string(g.tokens[gi].id) + ": gold '" +
                               g.tokens[gi].form + "', predicted '" + p.tokens[pi].form +
                               "'");
      ++pi;
    }
  }
}

template <typename Fn>
void for_aligned_words(const conllu::Treebank& gold, const conllu::Treebank& pred, Fn fn) {
  for (size_t i = 0; i < gold.sentences.size(); ++i) {
    const auto& g = gold.sentences[i];
    const auto& p = pred.sentences[i];
    size_t pi = 0;
    for (size_t gi = 0; gi < g.tokens.size(); ++gi) {
      if (g.tokens[gi].is_mwt()) continue;
      while (pi < p.tokens.size() && p.tokens[pi].is_mwt()) ++pi;
      fn(g, g.tokens[gi], p.tokens[pi]);
      ++pi;
    }
  }
}

std::string field_value(const conllu::TokenRecord& t, Field field) {
  switch (field) {
    case Field::upos: return t.upos;
    case Field::xpos: return t.xpos;
    case Field::feats: return conllu::serialize_feats(t.feats);
    case Field::lemma: return t.lemma;
  }
  return {};
}

std::vector<std::pair<size_t, size_t>> sentence_intervals(const conllu::Treebank& tb) {
  std::vector<std::pair<size_t, size_t>> out;
  size_t offset = 0;
  for (const auto& sent : tb.sentences) {
    size_t n = sent.word_count();
    out.emplace_back(offset, offset + n);
    offset += n;
  }
  return out;
}

double ratio(size_t num, size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

nlohmann::ordered_json prf_json(const Prf& prf) {
  nlohmann::ordered_json j;
  j["p"] = prf.precision();
  j["r"] = prf.recall();
  j["f"] = prf.f1();
  j["tp"] = prf.tp;
  j["gold"] = prf.gold;
  j["pred"] = prf.pred;
  return j;
}

}  // namespace

double Prf::precision() const {
  if (pred == 0) return gold == 0 ? 1.0 : 0.0;
  return ratio(tp, pred);
}

double Prf::recall() const {
  if (gold == 0) return pred == 0 ? 1.0 : 0.0;
  return ratio(tp, gold);
}

double Prf::f1() const {
  if (gold == 0 && pred == 0) return 1.0;
  double p = precision(), r = recall();
  return p + r == 0 ? 0.0 : 2 * p * r / (p + r);
}

double token_accuracy(const conllu::Treebank& gold, const conllu::Treebank& pred,
                      Field field) {
  check_aligned(gold, pred);
  size_t total = 0, correct = 0;
  for_aligned_words(gold, pred,
                    [&](const conllu::SentenceRecord&, const conllu::TokenRecord& g,
                        const conllu::TokenRecord& p) {
                      ++total;
                      if (field_value(g, field) == field_value(p, field)) ++correct;
                    });
  if (total == 0) throw validation_error("nothing to evaluate: no word tokens");
  return ratio(correct, total);
}

std::pair<double, double> attachment_scores(const conllu::Treebank& gold,
                                            const conllu::Treebank& pred,
                                            bool include_punct) {
  check_aligned(gold, pred);
  size_t total = 0, head_ok = 0, labeled_ok = 0;
  for_aligned_words(
      gold, pred,
      [&](const conllu::SentenceRecord& sent, const conllu::TokenRecord& g,
          const conllu::TokenRecord& p) {
        if (!g.head.has_value())
          throw validation_error("gold sentence '" + sent.sent_id + "' token " +
                                 std::to_string(g.id) + " lacks a head");
        if (!include_punct && g.upos == "PUNCT") return;
        ++total;
        if (p.head.has_value() && *p.head == *g.head) {
          ++head_ok;
          if (p.deprel == g.deprel) ++labeled_ok;
        }
      });
  if (total == 0) throw validation_error("nothing to evaluate: no scorable tokens");
  return {ratio(head_ok, total), ratio(labeled_ok, total)};
}

Prf span_prf(const std::vector<std::pair<size_t, size_t>>& gold,
             const std::vector<std::pair<size_t, size_t>>& pred) {
  std::set<std::pair<size_t, size_t>> gold_set(gold.begin(), gold.end());
  std::set<std::pair<size_t, size_t>> pred_set(pred.begin(), pred.end());
  Prf prf;
  prf.gold = gold_set.size();
  prf.pred = pred_set.size();
  for (const auto& span : pred_set) prf.tp += gold_set.count(span);
  return prf;
}

double sentence_seg_f1(const conllu::Treebank& gold, const conllu::Treebank& pred) {
  if (gold.word_token_count() != pred.word_token_count())
    throw validation_error("token stream mismatch: gold " +
                           std::to_string(gold.word_token_count()) + " tokens, predicted " +
                           std::to_string(pred.word_token_count()));
  return span_prf(sentence_intervals(gold), sentence_intervals(pred)).f1();
}

SpanScores ner_span_scores(const std::vector<ner::NerExample>& gold,
                           const std::vector<ner::NerExample>& pred) {
  if (gold.size() != pred.size())
    throw validation_error("example count mismatch: gold " + std::to_string(gold.size()) +
                           ", predicted " + std::to_string(pred.size()));
  SpanScores scores;
  for (ner::Label label : {ner::Label::person, ner::Label::loc, ner::Label::norp})
    scores.per_label[std::string(ner::label_name(label))] = Prf{};
  for (size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].text != pred[i].text)
      throw validation_error("example " + std::to_string(i) + ": text mismatch");
    std::set<ner::EntitySpan> gold_set(gold[i].spans.begin(), gold[i].spans.end());
    std::set<ner::EntitySpan> pred_set(pred[i].spans.begin(), pred[i].spans.end());
    for (const auto& span : gold_set)
      ++scores.per_label[std::string(ner::label_name(span.label))].gold;
    for (const auto& span : pred_set) {
      auto& row = scores.per_label[std::string(ner::label_name(span.label))];
      ++row.pred;
      if (gold_set.count(span)) ++row.tp;
    }
  }
  for (const auto& [label, prf] : scores.per_label) {
    scores.micro.tp += prf.tp;
    scores.micro.gold += prf.gold;
    scores.micro.pred += prf.pred;
  }
  return scores;
}

std::map<std::string, double> per_feature_accuracy(const conllu::Treebank& gold,
                                                   const conllu::Treebank& pred) {
  check_aligned(gold, pred);
  std::map<std::string, std::pair<size_t, size_t>> counts;  // name -> (correct, total)
  for_aligned_words(gold, pred,
                    [&](const conllu::SentenceRecord&, const conllu::TokenRecord& g,
                        const conllu::TokenRecord& p) {
                      for (const auto& [name, value] : g.feats) {
                        auto& [correct, total] = counts[name];
                        ++total;
                        for (const auto& [pname, pvalue] : p.feats)
                          if (pname == name && pvalue == value) {
                            ++correct;
                            break;
                          }
                      }
                    });
  std::map<std::string, double> out;
  for (const auto& [name, c] : counts) out[name] = ratio(c.first, c.second);
  return out;
}

std::map<std::string, Prf> per_deprel_scores(const conllu::Treebank& gold,
                                             const conllu::Treebank& pred,
                                             bool include_punct) {
  check_aligned(gold, pred);
  std::map<std::string, Prf> out;
  for_aligned_words(gold, pred,
                    [&](const conllu::SentenceRecord&, const conllu::TokenRecord& g,
                        const conllu::TokenRecord& p) {
                      if (!include_punct && g.upos == "PUNCT") return;
                      std::string glabel = g.deprel.empty() ? "_" : g.deprel;
                      std::string plabel = p.deprel.empty() ? "_" : p.deprel;
                      ++out[glabel].gold;
                      ++out[plabel].pred;
                      if (glabel == plabel && g.head.has_value() && p.head.has_value() &&
                          *g.head == *p.head)
                        ++out[glabel].tp;
                    });
  return out;
}

EvalReport evaluate(const conllu::Treebank& gold, const conllu::Treebank& pred,
                    const EvalOptions& opts) {
  check_aligned(gold, pred);
  EvalReport report;
  report.sentences = gold.sentences.size();
  report.tokens = gold.word_token_count();
  report.sentence_f = sentence_seg_f1(gold, pred);
  report.xpos_acc = token_accuracy(gold, pred, Field::xpos);
  report.upos_acc = token_accuracy(gold, pred, Field::upos);
  report.morph_acc = token_accuracy(gold, pred, Field::feats);
  report.lemma_acc = token_accuracy(gold, pred, Field::lemma);
  std::tie(report.uas, report.las) = attachment_scores(gold, pred, opts.include_punct);
  if (opts.per_feature) report.feature_acc = per_feature_accuracy(gold, pred);
  if (opts.per_deprel) report.deprel_scores = per_deprel_scores(gold, pred, opts.include_punct);
  return report;
}

std::string EvalReport::to_text() const {
  std::string out;
  out += "sentence segmentation f-score\t" + fmt(sentence_f) + "\n";
  out += "tagger accuracy (XPOS)\t" + fmt(xpos_acc) + "\n";
  out += "tagger accuracy (UPOS)\t" + fmt(upos_acc) + "\n";
  out += "morphologizer accuracy\t" + fmt(morph_acc) + "\n";
  out += "trainable_lemmatizer accuracy\t" + fmt(lemma_acc) + "\n";
  out += "parser accuracy (UAS)\t" + fmt(uas) + "\n";
  out += "parser accuracy (LAS)\t" + fmt(las) + "\n";
  if (ner) {
    out += "ner f-score\t" + fmt(ner->micro.f1()) + "\n";
    for (const auto& [label, prf] : ner->per_label)
      out += "  ner " + label + "\tP " + fmt(prf.precision()) + "\tR " + fmt(prf.recall()) +
             "\tF " + fmt(prf.f1()) + "\n";
  }
  if (!feature_acc.empty()) {
    out += "per-feature accuracy:\n";
    for (const auto& [name, acc] : feature_acc)
      out += "  " + name + "\t" + fmt(acc) + "\n";
  }
  if (!deprel_scores.empty()) {
    out += "per-deprel labeled attachment:\n";
    for (const auto& [name, prf] : deprel_scores)
      out += "  " + name + "\tP " + fmt(prf.precision()) + "\tR " + fmt(prf.recall()) +
             "\tF " + fmt(prf.f1()) + "\n";
  }
  out += "sentences\t" + std::to_string(sentences) + "\n";
  out += "tokens\t" + std::to_string(tokens) + "\n";
  return out;
}

std::string EvalReport::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = "latinpipe-eval-report";
  j["format_version"] = 1;
  j["sentence segmentation f-score"] = sentence_f;
  j["tagger accuracy (XPOS)"] = xpos_acc;
  j["tagger accuracy (UPOS)"] = upos_acc;
  j["morphologizer accuracy"] = morph_acc;
  j["trainable_lemmatizer accuracy"] = lemma_acc;
  j["parser accuracy (UAS)"] = uas;
  j["parser accuracy (LAS)"] = las;
  if (ner) {
    j["ner f-score"] = ner->micro.f1();
    nlohmann::ordered_json labels;
    for (const auto& [label, prf] : ner->per_label) labels[label] = prf_json(prf);
    j["ner per label"] = std::move(labels);
  }
  if (!feature_acc.empty()) j["per-feature accuracy"] = feature_acc;
  if (!deprel_scores.empty()) {
    nlohmann::ordered_json rows;
    for (const auto& [name, prf] : deprel_scores) rows[name] = prf_json(prf);
    j["per-deprel labeled attachment"] = std::move(rows);
  }
  j["sentences"] = sentences;
  j["tokens"] = tokens;
  return j.dump(1, '\t') + "\n";
}

}  // namespace latinpipe::eval
