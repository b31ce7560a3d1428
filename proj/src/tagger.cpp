#include "latinpipe/tagger.hpp"

#include <map>

#include "latinpipe/error.hpp"
#include "latinpipe/lemmatizer.hpp"
#include "latinpipe/strutil.hpp"
#include "nlohmann/json.hpp"

namespace latinpipe::tag {

namespace {

constexpr int kModelVersion = 1;
constexpr const char* kModelFormat = "latinpipe-tagger";

using Counts = std::map<TagTriple, uint64_t>;

void bump(std::map<std::string, Counts>& table, std::string_view key, const TagTriple& t) {
  ++table[std::string(key)][t];
}

nlohmann::ordered_json triple_json(const TagTriple& t) {
  return nlohmann::ordered_json::array({t.upos, t.xpos, t.feats});
}

TagTriple triple_from_json(const nlohmann::json& j) {
  TagTriple t;
  t.upos = j.at(0).get<std::string>();
  t.xpos = j.at(1).get<std::string>();
  t.feats = j.at(2).get<std::string>();
  return t;
}

nlohmann::ordered_json table_json(const std::map<std::string, TagTriple>& table) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [key, t] : table)
    out.push_back(nlohmann::ordered_json::array({key, t.upos, t.xpos, t.feats}));
  return out;
}

void table_from_json(const nlohmann::json& j, std::map<std::string, TagTriple>& table) {
  for (const auto& row : j) {
    TagTriple t;
    t.upos = row.at(1).get<std::string>();
    t.xpos = row.at(2).get<std::string>();
    t.feats = row.at(3).get<std::string>();
    table[row.at(0).get<std::string>()] = std::move(t);
  }
}

}  // namespace

TagTriple TaggerModel::pick(const Counts& counts) {
  TagTriple best;
  uint64_t best_count = 0;
  for (const auto& [t, c] : counts) {  // keys ascend, so ties keep the smaller triple
    if (c > best_count) {
      best = t;
      best_count = c;
    }
  }
  return best;
}

TaggerModel TaggerModel::train(const conllu::Treebank& tb, const TaggerOptions& opts) {
  std::map<std::string, Counts> norms, s3, s2, s1;
  Counts global;
  for (const auto& sent : tb.sentences) {
    for (const auto& token : sent.tokens) {
      if (token.is_mwt() || token.upos.empty()) continue;
      TagTriple t{token.upos, token.xpos, conllu::serialize_feats(token.feats)};
      if (t.feats == "_") t.feats.clear();
      std::string norm = text::normalize_orthography(token.form, opts.normalize_ij);
      bump(norms, norm, t);
      bump(s3, lemma::suffix_chars(norm, 3), t);
      bump(s2, lemma::suffix_chars(norm, 2), t);
      bump(s1, lemma::suffix_chars(norm, 1), t);
      ++global[t];
    }
  }
  if (global.empty()) throw invalid_error("no taggable tokens in the training treebank");
  TaggerModel model;
  model.opts_ = opts;
  for (const auto& [key, counts] : norms) model.norms_[key] = pick(counts);
  for (const auto& [key, counts] : s3) model.suffix3_[key] = pick(counts);
  for (const auto& [key, counts] : s2) model.suffix2_[key] = pick(counts);
  for (const auto& [key, counts] : s1) model.suffix1_[key] = pick(counts);
  model.default_ = pick(global);
  return model;
}

TagTriple TaggerModel::tag_norm(std::string_view norm) const {
  if (auto it = norms_.find(std::string(norm)); it != norms_.end()) return it->second;
  for (const auto* table : {&suffix3_, &suffix2_, &suffix1_}) {
    size_t len = table == &suffix3_ ? 3 : table == &suffix2_ ? 2 : 1;
    auto it = table->find(std::string(lemma::suffix_chars(norm, len)));
    if (it != table->end()) return it->second;
  }
  return default_;
}

TagTriple TaggerModel::tag_token(const text::SurfaceToken& token) const {
  if (token.is_enclitic_part && str::lower(token.surface) == "que") {
    auto it = norms_.find("que");
    if (it != norms_.end() && it->second.upos == "CCONJ") return it->second;
    return TagTriple{"CCONJ", "", ""};
  }
  return tag_norm(token.norm);
}

std::string TaggerModel::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = kModelFormat;
  j["version"] = kModelVersion;
  j["normalize_ij"] = opts_.normalize_ij;
  j["default"] = triple_json(default_);
  j["norms"] = table_json(norms_);
  j["suffix3"] = table_json(suffix3_);
  j["suffix2"] = table_json(suffix2_);
  j["suffix1"] = table_json(suffix1_);
  return j.dump(1, '\t') + "\n";
}

TaggerModel TaggerModel::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad tagger model: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kModelFormat)
      throw parse_error("bad tagger model: unexpected format tag");
    if (j.at("version").get<int>() != kModelVersion)
      throw parse_error("bad tagger model: unsupported version");
    TaggerModel model;
    model.opts_.normalize_ij = j.at("normalize_ij").get<bool>();
    model.default_ = triple_from_json(j.at("default"));
    table_from_json(j.at("norms"), model.norms_);
    table_from_json(j.at("suffix3"), model.suffix3_);
    table_from_json(j.at("suffix2"), model.suffix2_);
    table_from_json(j.at("suffix1"), model.suffix1_);
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad tagger model: ") + e.what());
  }
}

void TaggerModel::save(const std::filesystem::path& path) const {
  str::write_file(path, to_json());
}

TaggerModel TaggerModel::load(const std::filesystem::path& path) {
  return from_json(str::read_file(path));
}

std::vector<TaggedToken> tag_tokens(const TaggerModel& model,
                                    const std::vector<text::SurfaceToken>& tokens) {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) out.push_back({token, model.tag_token(token)});
  return out;
}

size_t tag_treebank(const TaggerModel& model, conllu::Treebank& tb) {
  bool ij = model.options().normalize_ij;
  size_t touched = 0;
  for (auto& sent : tb.sentences) {
    for (auto& token : sent.tokens) {
      if (token.is_mwt()) continue;
      text::SurfaceToken st;
      st.surface = token.form;
      st.norm = text::normalize_orthography(token.form, ij);
      st.is_enclitic_part = str::lower(token.form) == "que";
      TagTriple t = model.tag_token(st);
      token.upos = t.upos;
      token.xpos = t.xpos;
      token.feats = t.feats.empty() ? conllu::Feats{} : conllu::parse_feats(t.feats);
      ++touched;
    }
  }
  return touched;
}

conllu::Treebank tag_text(const TaggerModel& model, std::string_view input,
                          const text::QueExceptionList& exceptions) {
  text::TokenizerOptions topts;
  topts.normalize_ij = model.options().normalize_ij;
  conllu::Treebank tb;
  tb.name = "tagged";
  auto spans = text::segment_sentences(input);
  for (size_t i = 0; i < spans.size(); ++i) {
    auto [start, end] = spans[i];
    std::string_view segment = input.substr(start, end - start);
    auto tokens = text::tokenize(segment, exceptions, topts);
    if (tokens.empty()) continue;
    conllu::SentenceRecord sent;
    sent.sent_id = "s" + std::to_string(tb.sentences.size() + 1);
    std::string flat(segment);
    for (auto& c : flat)
      if (c == '\n' || c == '\r' || c == '\t') c = ' ';
    sent.text = flat;
    sent.comments.push_back("# sent_id = " + sent.sent_id);
    sent.comments.push_back("# text = " + flat);
    for (size_t k = 0; k < tokens.size(); ++k) {
      TagTriple t = model.tag_token(tokens[k]);
      conllu::TokenRecord rec;
      rec.id = static_cast<int>(k + 1);
      rec.form = tokens[k].surface;
      rec.upos = t.upos;
      rec.xpos = t.xpos;
      rec.feats = t.feats.empty() ? conllu::Feats{} : conllu::parse_feats(t.feats);
      size_t tok_start = start + tokens[k].start;
      size_t tok_end = start + tokens[k].end;
      rec.misc = "TokenRange=" + std::to_string(tok_start) + ":" + std::to_string(tok_end);
      if (k + 1 < tokens.size() && tokens[k + 1].start == tokens[k].end)
        rec.misc += "|SpaceAfter=No";
      sent.tokens.push_back(std::move(rec));
    }
    tb.sentences.push_back(std::move(sent));
  }
  return tb;
}

}  // namespace latinpipe::tag
