#include "latinpipe/corpus.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "latinpipe/error.hpp"
#include "latinpipe/strutil.hpp"
#include "nlohmann/json.hpp"

namespace latinpipe::corpus {

namespace {

constexpr uint64_t kDedupeSeed = 0x9e3779b97f4a7c15ULL;

bool misc_says_no_space(std::string_view misc) {
  for (std::string_view part : str::split(misc, '|'))
    if (part == "SpaceAfter=No") return true;
  return false;
}

}  // namespace

std::string detokenize(const conllu::SentenceRecord& sentence) {
  std::string out;
  int skip_until = 0;  // word ids covered by a multiword token
  for (const auto& t : sentence.tokens) {
    if (t.is_mwt()) {
      out += t.form;
      if (!misc_says_no_space(t.misc)) out += ' ';
      skip_until = t.mwt_range->second;
      continue;
    }
    if (t.id <= skip_until) continue;
    out += t.form;
    if (!misc_says_no_space(t.misc)) out += ' ';
  }
  return std::string(str::trim(out));
}

std::vector<std::string> extract_sentences(const conllu::Treebank& tb) {
  std::vector<std::string> out;
  out.reserve(tb.sentences.size());
  for (const auto& sent : tb.sentences)
    out.push_back(sent.text ? std::string(str::trim(*sent.text)) : detokenize(sent));
  return out;
}

HashSet64::HashSet64(size_t initial_buckets) {
  size_t n = 16;
  while (n < initial_buckets) n <<= 1;
  slots_.assign(n, 0);
}

void HashSet64::grow() {
  std::vector<uint64_t> old;
  old.swap(slots_);
  slots_.assign(old.size() * 2, 0);
  size_ = 0;
  for (uint64_t key : old)
    if (key != 0) insert(key);
}

bool HashSet64::insert(uint64_t key) {
  if (key == 0) key = 1;  // 0 marks an empty slot
  if ((size_ + 1) * 2 > slots_.size()) grow();
  size_t mask = slots_.size() - 1;
  size_t i = key & mask;
  while (slots_[i] != 0) {
    if (slots_[i] == key) return false;
    i = (i + 1) & mask;
  }
  slots_[i] = key;
  ++size_;
  return true;
}

CorpusPrep::CorpusPrep(std::vector<std::string> patterns) : patterns_(std::move(patterns)) {
  for (auto& p : patterns_) {
    p = std::string(str::trim(p));
    if (p.empty()) throw invalid_error("empty boilerplate pattern");
  }
}

bool CorpusPrep::keep_line(std::string_view line) {
  if (line.empty()) {
    ++stats_.empty;
    return false;
  }
  for (const auto& pattern : patterns_) {
    if (str::icontains(line, pattern)) {
      ++stats_.boilerplate;
      ++stats_.removed_per_pattern[pattern];
      return false;
    }
  }
  if (!seen_.insert(str::hash64(str::collapse_ws(line), kDedupeSeed))) {
    ++stats_.duplicates;
    return false;
  }
  ++stats_.kept;
  return true;
}

void CorpusPrep::process(std::istream& in, std::ostream& out) {
  std::string line;
  while (std::getline(in, line)) {
    ++stats_.lines_in;
    std::string_view view = str::trim(line);
    if (keep_line(view)) out << view << '\n';
  }
}

void CorpusPrep::process_text(std::string_view text, std::string& out) {
  std::istringstream in{std::string(text)};
  std::ostringstream os;
  process(in, os);
  out += os.str();
}

std::string PrepStats::to_text() const {
  std::string out;
  out += "lines in\t" + std::to_string(lines_in) + "\n";
  out += "kept\t" + std::to_string(kept) + "\n";
  out += "empty\t" + std::to_string(empty) + "\n";
  out += "duplicates\t" + std::to_string(duplicates) + "\n";
  out += "boilerplate\t" + std::to_string(boilerplate) + "\n";
  for (const auto& [pattern, n] : removed_per_pattern)
    out += "  pattern '" + pattern + "'\t" + std::to_string(n) + "\n";
  return out;
}

std::string PrepStats::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = "latinpipe-corpus-stats";
  j["format_version"] = 1;
  j["lines_in"] = lines_in;
  j["kept"] = kept;
  j["empty"] = empty;
  j["duplicates"] = duplicates;
  j["boilerplate"] = boilerplate;
  j["removed_per_pattern"] = removed_per_pattern;
  return j.dump(1, '\t') + "\n";
}

}  // namespace latinpipe::corpus
