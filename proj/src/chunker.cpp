#include "latinpipe/chunker.hpp"

#include <algorithm>
#include <map>

#include "latinpipe/error.hpp"

namespace latinpipe::chunk {

namespace {

// "nmod:poss" and friends count as their base relation.
std::string_view base_deprel(std::string_view deprel) {
  size_t colon = deprel.find(':');
  return colon == std::string_view::npos ? deprel : deprel.substr(0, colon);
}

bool is_nominal(const conllu::TokenRecord& t, const ChunkOptions& opts) {
  if (t.upos == "NOUN" || t.upos == "PROPN") return true;
  return opts.include_pron && t.upos == "PRON";
}

}  // namespace

std::vector<Chunk> noun_chunks(const conllu::SentenceRecord& sentence,
                               const ChunkOptions& opts) {
  std::vector<const conllu::TokenRecord*> words;
  for (const auto& t : sentence.tokens)
    if (!t.is_mwt()) words.push_back(&t);

  std::map<int, std::vector<int>> children;  // head id -> child ids, ascending
  std::map<int, int> parent;
  for (const auto* t : words) {
    if (!t->head.has_value() || t->deprel.empty())
      throw invalid_error("sentence " + sentence.sent_id + ": token " +
                          std::to_string(t->id) + " lacks head/deprel annotation");
    parent[t->id] = *t->head;
    children[*t->head].push_back(t->id);
  }

  std::set<int> claimed;
  std::vector<Chunk> chunks;
  for (const auto* head : words) {
    if (!is_nominal(*head, opts)) continue;
    if (claimed.count(head->id)) continue;  // flatness: no chunks inside chunks

    // Subtree restricted to the allowed relations, minus already-used tokens.
    std::set<int> members{head->id};
    std::vector<int> stack{head->id};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      auto it = children.find(cur);
      if (it == children.end()) continue;
      for (int child : it->second) {
        const auto& rec = sentence.word(child);
        if (!opts.allowed_deprels.count(base_deprel(rec.deprel))) continue;
        if (claimed.count(child) || members.count(child)) continue;
        members.insert(child);
        stack.push_back(child);
      }
    }

    // Trim to the contiguous window around the head, then drop members whose
    // path to the head would leave the window; repeat until stable.
    for (;;) {
      std::set<int> window;
      for (int id = head->id; members.count(id); --id) window.insert(id);
      for (int id = head->id + 1; members.count(id); ++id) window.insert(id);
      bool changed = window.size() != members.size();
      members = window;
      for (auto it = members.begin(); it != members.end();) {
        if (*it != head->id && !members.count(parent[*it])) {
          it = members.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
      if (!changed) break;
    }

    if (members.size() < std::max<size_t>(opts.min_tokens, 1)) continue;
    Chunk chunk;
    chunk.head_id = head->id;
    chunk.token_ids.assign(members.begin(), members.end());
    for (size_t i = 0; i < chunk.token_ids.size(); ++i) {
      if (i > 0) chunk.text += ' ';
      chunk.text += sentence.word(chunk.token_ids[i]).form;
    }
    claimed.insert(members.begin(), members.end());
    chunks.push_back(std::move(chunk));
  }

  std::stable_sort(chunks.begin(), chunks.end(),
                   [](const Chunk& a, const Chunk& b) { return a.start() < b.start(); });
  return chunks;
}

std::string chunks_tsv(const conllu::Treebank& tb, const ChunkOptions& opts) {
  std::string out = "sent_id\tstart\tend\ttext\n";
  for (const auto& sent : tb.sentences) {
    for (const auto& chunk : noun_chunks(sent, opts)) {
      out += sent.sent_id;
      out += '\t';
      out += std::to_string(chunk.start());
      out += '\t';
      out += std::to_string(chunk.end());
      out += '\t';
      out += chunk.text;
      out += '\n';
    }
  }
  return out;
}

}  // namespace latinpipe::chunk
