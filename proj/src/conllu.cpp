#include "latinpipe/conllu.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "latinpipe/error.hpp"
#include "latinpipe/strutil.hpp"

namespace latinpipe::conllu {

namespace {

[[noreturn]] void fail(size_t line_no, const std::string& reason) {
  throw parse_error("line " + std::to_string(line_no) + ": " + reason);
}

int parse_int(std::string_view s, size_t line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0)
    fail(line_no, std::string("invalid ") + what + " '" + std::string(s) + "'");
  return value;
}

// "_" encodes an empty value in every column except FORM, DEPS and MISC.
std::string decode(std::string_view field) {
  return field == "_" ? std::string() : std::string(field);
}

std::string_view encode(const std::string& value) {
  return value.empty() ? std::string_view("_") : std::string_view(value);
}

void check_no_controls(std::string_view field, size_t line_no) {
  if (field.empty()) fail(line_no, "empty column (use '_')");
  if (field.find('\r') != std::string_view::npos)
    fail(line_no, "carriage return in field; input must use LF line endings");
}

}  // namespace

void sort_feats(Feats& feats) {
  std::stable_sort(feats.begin(), feats.end(), [](const auto& a, const auto& b) {
    return str::icompare(a.first, b.first) < 0;
  });
}

Feats parse_feats(std::string_view field) {
  Feats feats;
  if (field == "_") return feats;
  for (std::string_view item : str::split(field, '|')) {
    size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
      throw parse_error("malformed feature '" + std::string(item) + "'");
    feats.emplace_back(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
  }
  for (size_t i = 0; i + 1 < feats.size(); ++i)
    for (size_t j = i + 1; j < feats.size(); ++j)
      if (feats[i].first == feats[j].first)
        throw parse_error("duplicate feature name '" + feats[i].first + "'");
  sort_feats(feats);
  return feats;
}

std::string serialize_feats(const Feats& feats) {
  if (feats.empty()) return "_";
  std::string out;
  for (size_t i = 0; i < feats.size(); ++i) {
    if (i) out.push_back('|');
    out += feats[i].first;
    out.push_back('=');
    out += feats[i].second;
  }
  return out;
}

size_t SentenceRecord::word_count() const {
  size_t n = 0;
  for (const auto& t : tokens)
    if (!t.is_mwt()) ++n;
  return n;
}

const TokenRecord& SentenceRecord::word(int id) const {
  for (const auto& t : tokens)
    if (!t.is_mwt() && t.id == id) return t;
  throw invalid_error("no token with id " + std::to_string(id));
}

TokenRecord& SentenceRecord::word(int id) {
  return const_cast<TokenRecord&>(static_cast<const SentenceRecord&>(*this).word(id));
}

std::string_view split_name(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::dev: return "dev";
    case Split::test: return "test";
    case Split::unsplit: return "unsplit";
  }
  return "unsplit";
}

Split split_from_name(std::string_view name) {
  if (name == "train") return Split::train;
  if (name == "dev") return Split::dev;
  if (name == "test") return Split::test;
  if (name == "unsplit") return Split::unsplit;
  throw invalid_error("unknown split '" + std::string(name) + "'");
}

size_t Treebank::word_token_count() const {
  size_t n = 0;
  for (const auto& s : sentences) n += s.word_count();
  return n;
}

namespace {

struct SentenceBuilder {
  SentenceRecord sent;
  size_t first_line = 0;
  int next_word_id = 1;
  std::optional<std::pair<int, int>> open_range;  // most recent mwt range

  bool empty() const { return sent.comments.empty() && sent.tokens.empty(); }
};

// Matches "key = value" and "key=value" comment bodies.
std::optional<std::string_view> comment_value(std::string_view body, std::string_view key) {
  if (body.rfind(key, 0) != 0) return std::nullopt;
  std::string_view rest = str::trim(body.substr(key.size()));
  if (rest.empty() || rest[0] != '=') return std::nullopt;
  return str::trim(rest.substr(1));
}

void finish_sentence(SentenceBuilder& b, Treebank& tb, size_t line_no,
                     std::set<std::string>& seen_ids) {
  SentenceRecord& s = b.sent;
  if (s.tokens.empty()) fail(line_no, "sentence has comments but no token lines");
  int n = b.next_word_id - 1;
  if (n == 0) fail(line_no, "sentence has no word lines");
  if (b.open_range && b.open_range->second >= b.next_word_id)
    fail(line_no, "multiword range " + std::to_string(b.open_range->first) + "-" +
                      std::to_string(b.open_range->second) + " extends past last token");

  bool any_head = false;
  bool any_deprel = false;
  int roots = 0;
  for (const auto& t : s.tokens) {
    if (t.is_mwt()) continue;
    if (t.head) {
      any_head = true;
      if (*t.head > n)
        fail(line_no, "dangling head " + std::to_string(*t.head) + " (sentence has " +
                          std::to_string(n) + " tokens)");
      if (*t.head == t.id)
        fail(line_no, "token " + std::to_string(t.id) + " is its own head");
      if (*t.head == 0) ++roots;
    }
    if (!t.deprel.empty()) any_deprel = true;
  }
  if ((any_head || any_deprel) && roots != 1)
    fail(line_no, "annotated sentence must have exactly one root token, found " +
                      std::to_string(roots));

  if (s.sent_id.empty())
    s.sent_id = "s" + std::to_string(tb.sentences.size() + 1);
  if (!seen_ids.insert(s.sent_id).second)
    fail(b.first_line, "duplicate sent_id '" + s.sent_id + "'");

  tb.sentences.push_back(std::move(s));
  b = SentenceBuilder{};
}

}  // namespace

Treebank parse(std::string_view text, std::string name, Split split) {
  Treebank tb;
  tb.name = std::move(name);
  tb.split = split;

  std::set<std::string> seen_ids;
  SentenceBuilder b;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    if (pos == text.size()) {
      if (line_no == 0 || !b.empty()) ++line_no;  // virtual final line
      if (!b.empty()) finish_sentence(b, tb, line_no, seen_ids);
      break;
    }
    size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
    ++line_no;

    if (line.empty()) {
      if (!b.empty()) finish_sentence(b, tb, line_no, seen_ids);
      continue;
    }
    if (line.find('\r') != std::string_view::npos)
      fail(line_no, "carriage return; input must use LF line endings");

    if (line[0] == '#') {
      if (!b.sent.tokens.empty())
        fail(line_no, "comment line inside token block");
      if (b.empty()) b.first_line = line_no;
      b.sent.comments.emplace_back(line);
      std::string_view body = str::trim(line.substr(1));
      if (auto v = comment_value(body, "sent_id"))
        b.sent.sent_id = std::string(*v);
      else if (auto v2 = comment_value(body, "text"))
        b.sent.text = std::string(*v2);
      continue;
    }

    auto cols = str::split(line, '\t');
    if (cols.size() != 10)
      fail(line_no, "expected 10 tab-separated columns, found " + std::to_string(cols.size()));
    for (auto c : cols) check_no_controls(c, line_no);
    if (b.empty()) b.first_line = line_no;

    std::string_view id_field = cols[0];
    TokenRecord tok;
    if (id_field.find('.') != std::string_view::npos)
      fail(line_no, "empty nodes (id '" + std::string(id_field) + "') are not supported");
    size_t dash = id_field.find('-');
    if (dash != std::string_view::npos) {
      int lo = parse_int(id_field.substr(0, dash), line_no, "range start");
      int hi = parse_int(id_field.substr(dash + 1), line_no, "range end");
      if (lo >= hi) fail(line_no, "multiword range must cover at least two tokens");
      if (lo != b.next_word_id)
        fail(line_no, "multiword range starts at " + std::to_string(lo) +
                          ", expected " + std::to_string(b.next_word_id));
      if (b.open_range && lo <= b.open_range->second)
        fail(line_no, "overlapping multiword ranges");
      for (size_t i = 2; i <= 8; ++i)  // LEMMA..DEPS must be empty
        if (cols[i] != "_")
          fail(line_no, "multiword-token line carries annotation in column " +
                            std::to_string(i + 1));
      tok.id = lo;
      tok.mwt_range = {lo, hi};
      tok.form = std::string(cols[1]);
      tok.misc = std::string(cols[9]);
      b.open_range = {lo, hi};
      b.sent.tokens.push_back(std::move(tok));
      continue;
    }

    int id = parse_int(id_field, line_no, "token id");
    if (id != b.next_word_id)
      fail(line_no, "non-contiguous token id " + std::to_string(id) + ", expected " +
                        std::to_string(b.next_word_id));
    tok.id = id;
    tok.form = std::string(cols[1]);
    tok.lemma = decode(cols[2]);
    tok.upos = decode(cols[3]);
    tok.xpos = decode(cols[4]);
    try {
      tok.feats = parse_feats(cols[5]);
    } catch (const Error& e) {
      fail(line_no, e.what());
    }
    if (cols[6] == "_") {
      tok.head = std::nullopt;
    } else {
      tok.head = parse_int(cols[6], line_no, "head");
    }
    tok.deprel = decode(cols[7]);
    tok.deps = std::string(cols[8]);
    tok.misc = std::string(cols[9]);
    ++b.next_word_id;
    b.sent.tokens.push_back(std::move(tok));
  }
  return tb;
}

std::string serialize(const Treebank& tb) {
  std::string out;
  for (const auto& s : tb.sentences) {
    for (const auto& c : s.comments) {
      out += c;
      out.push_back('\n');
    }
    for (const auto& t : s.tokens) {
      if (t.is_mwt()) {
        out += std::to_string(t.mwt_range->first);
        out.push_back('-');
        out += std::to_string(t.mwt_range->second);
        out.push_back('\t');
        out += t.form;
        out += "\t_\t_\t_\t_\t_\t_\t_\t";
        out += t.misc;
      } else {
        out += std::to_string(t.id);
        out.push_back('\t');
        out += t.form;
        out.push_back('\t');
        out += encode(t.lemma);
        out.push_back('\t');
        out += encode(t.upos);
        out.push_back('\t');
        out += encode(t.xpos);
        out.push_back('\t');
        out += serialize_feats(t.feats);
        out.push_back('\t');
        out += t.head ? std::to_string(*t.head) : "_";
        out.push_back('\t');
        out += encode(t.deprel);
        out.push_back('\t');
        out += t.deps;
        out.push_back('\t');
        out += t.misc;
      }
      out.push_back('\n');
    }
    out.push_back('\n');
  }
  return out;
}

std::string canonicalize(std::string_view text) {
  return serialize(parse(text, "canonical", Split::unsplit));
}

namespace {

void check_tsv_field(const std::string& f) {
  if (f.find('\t') != std::string::npos || f.find('\n') != std::string::npos)
    throw validation_error("field contains tab or newline, illegal in TSV output: '" + f + "'");
}

}  // namespace

std::string to_tsv(const Treebank& tb) {
  std::string out = "treebank\tsplit\tsent_id\tid\tform\tlemma\tupos\txpos\tfeats\thead\tdeprel\n";
  check_tsv_field(tb.name);
  for (const auto& s : tb.sentences) {
    check_tsv_field(s.sent_id);
    for (const auto& t : s.tokens) {
      if (t.is_mwt()) continue;
      check_tsv_field(t.form);
      check_tsv_field(t.lemma);
      check_tsv_field(t.upos);
      check_tsv_field(t.xpos);
      check_tsv_field(t.deprel);
      out += tb.name;
      out.push_back('\t');
      out += split_name(tb.split);
      out.push_back('\t');
      out += s.sent_id;
      out.push_back('\t');
      out += std::to_string(t.id);
      out.push_back('\t');
      out += t.form;
      out.push_back('\t');
      out += encode(t.lemma);
      out.push_back('\t');
      out += encode(t.upos);
      out.push_back('\t');
      out += encode(t.xpos);
      out.push_back('\t');
      out += serialize_feats(t.feats);
      out.push_back('\t');
      out += t.head ? std::to_string(*t.head) : "_";
      out.push_back('\t');
      out += encode(t.deprel);
      out.push_back('\n');
    }
  }
  return out;
}

}  // namespace latinpipe::conllu
