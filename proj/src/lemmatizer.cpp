#include "latinpipe/lemmatizer.hpp"

#include <algorithm>

#include "latinpipe/error.hpp"
#include "latinpipe/strutil.hpp"
#include "latinpipe/tokenizer.hpp"
#include "nlohmann/json.hpp"

namespace latinpipe::lemma {

namespace {

constexpr char kKeySep = '\x1f';
constexpr size_t kSuffixChars = 4;
constexpr int kModelVersion = 1;
constexpr const char* kModelFormat = "latinpipe-lemmatizer";

std::string make_key(std::string_view norm, std::string_view upos) {
  std::string key(suffix_chars(norm, kSuffixChars));
  key += kKeySep;
  key += upos;
  return key;
}

}  // namespace

std::string_view suffix_chars(std::string_view s, size_t n) {
  size_t count = 0;
  size_t i = s.size();
  while (i > 0 && count < n) {
    --i;
    while (i > 0 && (static_cast<unsigned char>(s[i]) & 0xC0) == 0x80) --i;
    ++count;
  }
  return s.substr(i);
}

int LemmatizerModel::intern_tree(const EditTree& tree) {
  std::string enc = tree.encode();
  auto it = intern_.find(enc);
  if (it != intern_.end()) return it->second;
  int id = static_cast<int>(trees_.size());
  trees_.push_back(tree);
  tree_total_.push_back(0);
  intern_.emplace(std::move(enc), id);
  return id;
}

void LemmatizerModel::add_count(const std::string& key, int tree_id, uint64_t n) {
  auto& counts = keys_[key].counts;
  for (auto& [id, c] : counts) {
    if (id == tree_id) {
      c += n;
      return;
    }
  }
  counts.emplace_back(tree_id, n);
}

void LemmatizerModel::finalize() {
  std::fill(tree_total_.begin(), tree_total_.end(), 0);
  for (auto& [key, entry] : keys_) {
    std::sort(entry.counts.begin(), entry.counts.end(),
              [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second > b.second;
                return a.first < b.first;
              });
    for (const auto& [id, c] : entry.counts) tree_total_[id] += c;
  }
}

LemmatizerModel LemmatizerModel::train(const std::vector<TrainingPair>& pairs,
                                       const LemmatizerOptions& opts) {
  if (pairs.empty()) throw invalid_error("no training pairs for the lemmatizer");
  LemmatizerModel model;
  model.opts_ = opts;
  for (const auto& p : pairs) {
    if (p.norm.empty() || p.lemma.empty())
      throw invalid_error("lemmatizer training pair with empty norm or lemma (form '" +
                          p.form + "')");
    int id = model.intern_tree(EditTree::build(p.norm, p.lemma));
    model.add_count(make_key(p.norm, p.upos), id, 1);
    ++model.pair_count_;
  }
  model.finalize();
  return model;
}

void LemmatizerModel::merge(const LemmatizerModel& other) {
  if (opts_.normalize_ij != other.opts_.normalize_ij)
    throw invalid_error("cannot merge lemmatizer models with different normalization");
  std::vector<int> remap(other.trees_.size());
  for (size_t i = 0; i < other.trees_.size(); ++i)
    remap[i] = intern_tree(other.trees_[i]);
  for (const auto& [key, entry] : other.keys_)
    for (const auto& [id, c] : entry.counts) add_count(key, remap[id], c);
  pair_count_ += other.pair_count_;
  finalize();
}

std::string LemmatizerModel::lemmatize(std::string_view norm, std::string_view upos) const {
  auto it = keys_.find(make_key(norm, upos));
  if (it == keys_.end()) return std::string(norm);
  size_t tried = 0;
  for (const auto& [id, count] : it->second.counts) {
    if (tree_total_[id] < opts_.min_tree_freq) continue;
    if (++tried > opts_.top_k) break;
    if (auto out = trees_[id].apply(norm)) return *out;
  }
  return std::string(norm);
}

std::string LemmatizerModel::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = kModelFormat;
  j["version"] = kModelVersion;
  j["min_tree_freq"] = opts_.min_tree_freq;
  j["top_k"] = opts_.top_k;
  j["normalize_ij"] = opts_.normalize_ij;
  j["pairs"] = pair_count_;
  auto trees = nlohmann::ordered_json::array();
  for (const auto& t : trees_) trees.push_back(t.encode());
  j["trees"] = std::move(trees);
  auto keys = nlohmann::ordered_json::array();
  for (const auto& [key, entry] : keys_) {  // std::map: sorted, so output is stable
    size_t sep = key.find(kKeySep);
    nlohmann::ordered_json k;
    k["suffix"] = key.substr(0, sep);
    k["upos"] = key.substr(sep + 1);
    auto counts = nlohmann::ordered_json::array();
    std::vector<std::pair<int, uint64_t>> sorted = entry.counts;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [id, c] : sorted) counts.push_back({id, c});
    k["counts"] = std::move(counts);
    keys.push_back(std::move(k));
  }
  j["keys"] = std::move(keys);
  return j.dump(1, '\t') + "\n";
}

LemmatizerModel LemmatizerModel::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad lemmatizer model: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kModelFormat)
      throw parse_error("bad lemmatizer model: unexpected format tag");
    if (j.at("version").get<int>() != kModelVersion)
      throw parse_error("bad lemmatizer model: unsupported version");
    LemmatizerModel model;
    model.opts_.min_tree_freq = j.at("min_tree_freq").get<size_t>();
    model.opts_.top_k = j.at("top_k").get<size_t>();
    model.opts_.normalize_ij = j.at("normalize_ij").get<bool>();
    model.pair_count_ = j.at("pairs").get<uint64_t>();
    for (const auto& enc : j.at("trees"))
      model.intern_tree(EditTree::decode(enc.get<std::string>()));
    for (const auto& k : j.at("keys")) {
      std::string key = k.at("suffix").get<std::string>();
      key += kKeySep;
      key += k.at("upos").get<std::string>();
      for (const auto& c : k.at("counts")) {
        int id = c.at(0).get<int>();
        if (id < 0 || static_cast<size_t>(id) >= model.trees_.size())
          throw parse_error("bad lemmatizer model: tree id out of range");
        model.add_count(key, id, c.at(1).get<uint64_t>());
      }
    }
    model.finalize();
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad lemmatizer model: ") + e.what());
  }
}

void LemmatizerModel::save(const std::filesystem::path& path) const {
  str::write_file(path, to_json());
}

LemmatizerModel LemmatizerModel::load(const std::filesystem::path& path) {
  return from_json(str::read_file(path));
}

std::string fix_lemma(std::string_view surface, std::string_view upos,
                      std::string_view predicted) {
  if (upos == "PUNCT") return std::string(surface);
  if (upos == "CCONJ" && str::lower(surface) == "que") return "que";
  return std::string(predicted);
}

std::vector<TrainingPair> pairs_from_treebank(const conllu::Treebank& tb, bool normalize_ij) {
  std::vector<TrainingPair> pairs;
  for (const auto& sent : tb.sentences) {
    for (const auto& token : sent.tokens) {
      if (token.is_mwt() || token.lemma.empty() || token.upos.empty()) continue;
      TrainingPair p;
      p.form = token.form;
      p.norm = text::normalize_orthography(token.form, normalize_ij);
      p.upos = token.upos;
      p.lemma = token.lemma;
      pairs.push_back(std::move(p));
    }
  }
  return pairs;
}

size_t lemmatize_treebank(const LemmatizerModel& model, conllu::Treebank& tb,
                          bool apply_fixes) {
  bool ij = model.options().normalize_ij;
  size_t touched = 0;
  for (auto& sent : tb.sentences) {
    for (auto& token : sent.tokens) {
      if (token.is_mwt()) continue;
      std::string norm = text::normalize_orthography(token.form, ij);
      std::string lemma = model.lemmatize(norm, token.upos);
      if (apply_fixes) lemma = fix_lemma(token.form, token.upos, lemma);
      token.lemma = std::move(lemma);
      ++touched;
    }
  }
  return touched;
}

}  // namespace latinpipe::lemma
