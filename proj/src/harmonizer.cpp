#include "latinpipe/harmonizer.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "json.hpp"
#include "latinpipe/error.hpp"
#include "latinpipe/strutil.hpp"

namespace latinpipe::harmonize {

std::string normalize_lemma(std::string_view lemma) {
  std::string out(lemma);
  for (char& c : out) {
    switch (c) {
      case 'v': c = 'u'; break;
      case 'V': c = 'U'; break;
      case 'j': c = 'i'; break;
      case 'J': c = 'I'; break;
      default: break;
    }
  }
  return out;
}

namespace {

bool has_feature(const conllu::TokenRecord& t, std::string_view name, std::string_view value) {
  for (const auto& [n, v] : t.feats)
    if (n == name && v == value) return true;
  return false;
}

bool has_feature_name(const conllu::TokenRecord& t, std::string_view name) {
  for (const auto& [n, v] : t.feats)
    if (n == name) return true;
  return false;
}

const std::array<std::string_view, 4> kNosForms = {"nos", "nobis", "nostri", "nostrum"};
const std::array<std::string_view, 4> kUosForms = {"uos", "uobis", "uestri", "uestrum"};

bool form_in(const conllu::TokenRecord& t, const std::array<std::string_view, 4>& forms) {
  std::string norm = normalize_lemma(str::lower(t.form));
  return std::find(forms.begin(), forms.end(), norm) != forms.end();
}

}  // namespace

size_t relemmatize_plural_pronouns(conllu::SentenceRecord& sentence,
                                   const std::string& treebank) {
  if (treebank != "udante") return 0;
  size_t edits = 0;
  for (auto& t : sentence.tokens) {
    if (t.is_mwt()) continue;
    bool plural = has_feature(t, "Number", "Plur");
    // With no Number feature, fall back on the closed plural form sets.
    bool no_number = !has_feature_name(t, "Number");
    if (t.lemma == "ego" && (plural || (no_number && form_in(t, kNosForms)))) {
      t.lemma = "nos";
      ++edits;
    } else if (t.lemma == "tu" && (plural || (no_number && form_in(t, kUosForms)))) {
      t.lemma = "uos";
      ++edits;
    }
  }
  return edits;
}

std::pair<conllu::Treebank, std::vector<std::string>> filter_mistokenized(
    const conllu::Treebank& tb) {
  auto is_bad_pair = [](const std::string& a, const std::string& b) {
    auto la = str::lower(a), lb = str::lower(b);
    return (la == "ne" && (lb == "c" || lb == "que")) ||
           (lb == "ne" && (la == "c" || la == "que"));
  };

  conllu::Treebank out;
  out.name = tb.name;
  out.split = tb.split;
  std::vector<std::string> removed;
  for (const auto& s : tb.sentences) {
    bool bad = false;
    const conllu::TokenRecord* prev = nullptr;
    for (const auto& t : s.tokens) {
      if (t.is_mwt()) continue;
      if (prev && is_bad_pair(prev->form, t.form)) {
        bad = true;
        break;
      }
      prev = &t;
    }
    if (bad)
      removed.push_back(s.sent_id);
    else
      out.sentences.push_back(s);
  }
  return {std::move(out), std::move(removed)};
}

void remap_token(conllu::TokenRecord& token, const std::string& treebank,
                 const TagMapConfig& cfg, const std::string& sent_id) {
  if (token.is_mwt()) return;

  std::string target_upos = token.upos;
  if (const std::string* mapped = cfg.lookup_upos(treebank, token.upos, token.xpos)) {
    target_upos = *mapped;
  } else if (!cfg.upos_fallthrough && !token.upos.empty()) {
    throw invalid_error("unmapped UPOS '" + token.upos + "' (treebank " + treebank +
                        ", sentence " + sent_id + ")");
  }
  token.upos = target_upos;
  token.xpos = cfg.map_xpos(treebank, token.xpos);

  conllu::Feats kept;
  for (auto& [name, value] : token.feats)
    if (cfg.retains(target_upos, name))
      kept.emplace_back(name, cfg.map_feature_value(name, value));
  conllu::sort_feats(kept);
  token.feats = std::move(kept);
}

namespace {

// Rewrites the sent_id both in the record field and in its comment line.
void set_sent_id(conllu::SentenceRecord& s, const std::string& id) {
  s.sent_id = id;
  for (auto& c : s.comments) {
    std::string_view body = str::trim(std::string_view(c).substr(1));
    if (body.rfind("sent_id", 0) == 0) {
      c = "# sent_id = " + id;
      return;
    }
  }
  s.comments.insert(s.comments.begin(), "# sent_id = " + id);
}

int canonical_rank(const std::string& name) {
  static const std::array<std::string_view, 5> order = {"perseus", "proiel", "ittb",
                                                        "udante", "llct"};
  for (size_t i = 0; i < order.size(); ++i)
    if (name == order[i]) return static_cast<int>(i);
  return static_cast<int>(order.size());
}

}  // namespace

HarmonizeResult harmonize(const std::vector<conllu::Treebank>& treebanks,
                          const TagMapConfig& cfg) {
  std::vector<const conllu::Treebank*> ordered;
  for (const auto& tb : treebanks) ordered.push_back(&tb);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const conllu::Treebank* a, const conllu::Treebank* b) {
                     int ra = canonical_rank(a->name), rb = canonical_rank(b->name);
                     if (ra != rb) return ra < rb;
                     if (a->name != b->name) return a->name < b->name;
                     return static_cast<int>(a->split) < static_cast<int>(b->split);
                   });

  HarmonizeResult result;
  for (const conllu::Treebank* src : ordered) {
    auto& stats = result.report.per_treebank[src->name];
    stats.sentences_in += src->sentences.size();
    stats.tokens_in += src->word_token_count();

    conllu::Treebank work = *src;
    for (auto& s : work.sentences) {
      for (auto& t : s.tokens) {
        if (t.is_mwt()) continue;
        std::string norm = normalize_lemma(t.lemma);
        if (norm != t.lemma) {
          t.lemma = std::move(norm);
          ++result.report.lemma_edit_count;
        }
      }
      result.report.lemma_edit_count += relemmatize_plural_pronouns(s, work.name);
    }

    auto [kept, removed] = filter_mistokenized(work);
    for (auto& id : removed) stats.removed_sentence_ids.push_back(id);

    auto& merged = result.merged[src->split];
    if (merged.sentences.empty()) {
      merged.name = "merged";
      merged.split = src->split;
    }
    for (auto& s : kept.sentences) {
      for (auto& t : s.tokens) {
        if (t.is_mwt()) continue;
        std::string source_upos = t.upos.empty() ? "_" : t.upos;
        remap_token(t, work.name, cfg, s.sent_id);
        std::string target_upos = t.upos.empty() ? "_" : t.upos;
        ++result.report.remap_counts[source_upos][target_upos];
        ++stats.tokens_out;
      }
      set_sent_id(s, work.name + "/" + s.sent_id);
      ++stats.sentences_out;
      merged.sentences.push_back(std::move(s));
    }
  }
  return result;
}

size_t HarmonizationReport::total_sentences_out() const {
  size_t n = 0;
  for (const auto& [name, s] : per_treebank) n += s.sentences_out;
  return n;
}

size_t HarmonizationReport::total_tokens_out() const {
  size_t n = 0;
  for (const auto& [name, s] : per_treebank) n += s.tokens_out;
  return n;
}

std::string HarmonizationReport::to_text() const {
  std::ostringstream out;
  out << "harmonization report\n";
  for (const auto& [name, s] : per_treebank) {
    out << "  " << name << ": sentences " << s.sentences_in << " -> " << s.sentences_out
        << ", tokens " << s.tokens_in << " -> " << s.tokens_out;
    if (!s.removed_sentence_ids.empty()) {
      out << ", removed:";
      for (const auto& id : s.removed_sentence_ids) out << ' ' << id;
    }
    out << '\n';
  }
  out << "  total: " << total_sentences_out() << " sentences, " << total_tokens_out()
      << " tokens, " << lemma_edit_count << " lemma edits\n";
  return out.str();
}

std::string HarmonizationReport::to_json() const {
  nlohmann::json j;
  j["format"] = "latinpipe-harmonize-report";
  j["format_version"] = 1;
  for (const auto& [name, s] : per_treebank) {
    nlohmann::json t;
    t["sentences_in"] = s.sentences_in;
    t["sentences_out"] = s.sentences_out;
    t["tokens_in"] = s.tokens_in;
    t["tokens_out"] = s.tokens_out;
    t["removed_sentence_ids"] = s.removed_sentence_ids;
    j["treebanks"][name] = std::move(t);
  }
  j["remap_counts"] = remap_counts;
  j["lemma_edit_count"] = lemma_edit_count;
  j["total_sentences_out"] = total_sentences_out();
  j["total_tokens_out"] = total_tokens_out();
  return j.dump(2) + "\n";
}

}  // namespace latinpipe::harmonize
