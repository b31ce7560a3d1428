#include "latinpipe/tokenizer.hpp"

#include <array>
#include <cctype>

#include "latinpipe/error.hpp"
#include "latinpipe/strutil.hpp"

namespace latinpipe::text {

namespace {

// Punctuation separated from word edges. Multi-byte marks listed first so the
// longest match wins.
constexpr std::array<std::string_view, 17> kPunct = {
    "—", "–", "…",  // em dash, en dash, ellipsis
    ".", ",", ";", ":", "?", "!", "\"", "'", "(", ")", "[", "]", "-", "·"};

std::string_view match_punct_at(std::string_view s, size_t pos) {
  for (auto p : kPunct)
    if (s.substr(pos).starts_with(p)) return p;
  return {};
}

std::string_view match_punct_before(std::string_view s, size_t end) {
  for (auto p : kPunct)
    if (end >= p.size() && s.substr(end - p.size(), p.size()) == p) return p;
  return {};
}

size_t codepoint_count(std::string_view s) {
  size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

bool is_word_like(std::string_view s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (c < 0x80 && !str::is_ascii_alpha(static_cast<char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string normalize_orthography(std::string_view surface, bool normalize_ij) {
  std::string out;
  out.reserve(surface.size());
  for (char c : surface) {
    c = str::ascii_lower(c);
    if (c == 'v') c = 'u';
    if (normalize_ij && c == 'j') c = 'i';
    out.push_back(c);
  }
  return out;
}

QueExceptionList::QueExceptionList() {
  static constexpr std::string_view kDefaults[] = {
      // quisque and compounds
      "quisque", "quidque", "quicque", "quodque", "cuiusque", "cuique", "quemque",
      "quamque", "quoque", "quaque", "quaeque", "quique", "quorumque", "quarumque",
      "quibusque", "quosque", "quasque", "unusquisque", "unaquaeque", "unumquodque",
      "unumquemque", "uniuscuiusque", "unicuique", "unoquoque", "unaquaque",
      // uterque
      "uterque", "utraque", "utrumque", "utriusque", "utrique", "utramque",
      "utroque", "utraeque", "utrorumque", "utrarumque", "utrisque", "utrosque",
      "utrasque",
      // -cumque relatives
      "cumque", "quicumque", "quaecumque", "quodcumque", "quidcumque",
      "cuiuscumque", "cuicumque", "quemcumque", "quamcumque", "quocumque",
      "quacumque", "quorumcumque", "quarumcumque", "quibuscumque", "quoscumque",
      "quascumque", "quandocumque", "quotienscumque", "ubicumque", "undecumque",
      "utcumque",
      // plerusque
      "plerumque", "plerique", "pleraque", "plerosque", "plerasque",
      "plerorumque", "plerarumque", "plerisque",
      // lexicalized conjunctions and adverbs
      "neque", "atque", "itaque", "usque", "absque", "denique", "undique",
      "utique", "ubique", "namque", "quandoque", "utrimque", "utrobique",
      "quousque", "adusque", "usquequaque",
      // adverbs of -quus adjectives
      "aeque", "oblique", "inique", "antique",
      // numeral
      "quinque"};
  for (auto e : kDefaults) insert(e);
}

void QueExceptionList::insert(std::string_view entry) {
  std::string low = str::lower(str::trim(entry));
  if (low.empty()) return;
  if (!low.ends_with("que"))
    throw invalid_error("que-exception entry does not end in 'que': '" + low + "'");
  entries_.insert(std::move(low));
}

QueExceptionList QueExceptionList::from_file(const std::string& path) {
  return from_lines(str::read_file(path));
}

QueExceptionList QueExceptionList::from_lines(std::string_view text) {
  QueExceptionList list;
  list.entries_.clear();
  for (auto line : str::split(text, '\n')) {
    auto t = str::trim(line);
    if (t.empty() || t[0] == '#') continue;
    list.insert(t);
  }
  return list;
}

bool QueExceptionList::contains(std::string_view lowercase_word) const {
  return entries_.find(lowercase_word) != entries_.end();
}

namespace {

void emit(std::vector<SurfaceToken>& out, std::string_view text, size_t start, size_t end,
          bool enclitic, const TokenizerOptions& opts) {
  SurfaceToken tok;
  tok.surface = std::string(text.substr(start, end - start));
  tok.start = start;
  tok.end = end;
  tok.norm = normalize_orthography(tok.surface, opts.normalize_ij);
  tok.is_enclitic_part = enclitic;
  out.push_back(std::move(tok));
}

}  // namespace

std::vector<SurfaceToken> tokenize(std::string_view text, const QueExceptionList& exceptions,
                                   const TokenizerOptions& opts) {
  std::vector<SurfaceToken> out;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t chunk_end = i;
    while (chunk_end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[chunk_end])))
      ++chunk_end;

    size_t lo = i, hi = chunk_end;
    // leading punctuation, one mark per token
    while (lo < hi) {
      auto p = match_punct_at(text, lo);
      if (p.empty() || lo + p.size() > hi) break;
      emit(out, text, lo, lo + p.size(), false, opts);
      lo += p.size();
    }
    // trailing punctuation, collected then emitted in text order
    std::vector<std::pair<size_t, size_t>> trail;
    while (hi > lo) {
      auto p = match_punct_before(text.substr(0, hi), hi);
      if (p.empty() || hi - p.size() < lo) break;
      trail.emplace_back(hi - p.size(), hi);
      hi -= p.size();
    }
    if (lo < hi) {
      std::string_view core = text.substr(lo, hi - lo);
      std::string low = str::lower(core);
      bool split_que = is_word_like(core) && codepoint_count(core) > 3 &&
                       low.ends_with("que") && !exceptions.contains(low);
      if (split_que) {
        emit(out, text, lo, hi - 3, false, opts);
        emit(out, text, hi - 3, hi, true, opts);
      } else {
        emit(out, text, lo, hi, false, opts);
      }
    }
    for (auto it = trail.rbegin(); it != trail.rend(); ++it)
      emit(out, text, it->first, it->second, false, opts);
    i = chunk_end;
  }
  return out;
}

std::vector<std::pair<size_t, size_t>> segment_sentences(std::string_view text) {
  std::vector<std::pair<size_t, size_t>> spans;
  auto trim_span = [&](size_t lo, size_t hi) {
    while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
    if (lo < hi) spans.emplace_back(lo, hi);
  };

  size_t span_start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '.' && c != '?' && c != '!') continue;
    size_t j = i + 1;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i + 1 && j < text.size()) continue;  // no whitespace after terminal
    if (j == text.size() || (text[j] >= 'A' && text[j] <= 'Z')) {
      trim_span(span_start, i + 1);
      span_start = j;
      i = j > 0 ? j - 1 : 0;
    }
  }
  trim_span(span_start, text.size());
  return spans;
}

}  // namespace latinpipe::text
