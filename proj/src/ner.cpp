#include "latinpipe/ner.hpp"

#include <algorithm>

#include "latinpipe/error.hpp"
#include "latinpipe/strutil.hpp"
#include "nlohmann/json.hpp"

namespace latinpipe::ner {

std::string_view label_name(Label label) {
  switch (label) {
    case Label::person: return "PERSON";
    case Label::loc: return "LOC";
    case Label::norp: return "NORP";
  }
  return "PERSON";
}

Label label_from_name(std::string_view name) {
  if (name == "PERSON") return Label::person;
  if (name == "LOC") return Label::loc;
  if (name == "NORP") return Label::norp;
  throw invalid_error("unknown entity label '" + std::string(name) + "'");
}

std::string_view source_name(Source source) {
  return source == Source::ud ? "ud" : "herodotos";
}

Source source_from_name(std::string_view name) {
  if (name == "ud") return Source::ud;
  if (name == "herodotos") return Source::herodotos;
  throw invalid_error("unknown example source '" + std::string(name) + "'");
}

LabelMap LabelMap::defaults() {
  return from_text(
      "PRS PERSON\n"
      "PER PERSON\n"
      "PERSON PERSON\n"
      "GEO LOC\n"
      "LOC LOC\n"
      "GRP NORP\n"
      "NORP NORP\n");
}

LabelMap LabelMap::from_text(std::string_view text) {
  LabelMap m;
  size_t line_no = 0;
  for (std::string_view line : str::split(text, '\n')) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = str::trim(line);
    if (line.empty()) continue;
    auto cols = str::split_ws(line);
    if (cols.size() != 2)
      throw parse_error("label map line " + std::to_string(line_no) +
                        ": expected 'SOURCE TARGET'");
    std::string src(cols[0]);
    if (m.map_.count(src))
      throw parse_error("label map line " + std::to_string(line_no) +
                        ": duplicate mapping for '" + src + "'");
    m.map_.emplace(std::move(src), label_from_name(cols[1]));
  }
  return m;
}

LabelMap LabelMap::from_file(const std::filesystem::path& path) {
  return from_text(str::read_file(path));
}

Label LabelMap::map(std::string_view source_tag) const {
  auto it = map_.find(source_tag);
  if (it == map_.end())
    throw invalid_error("unmapped entity tag '" + std::string(source_tag) + "'");
  return it->second;
}

std::vector<NerExample> parse_crf(std::string_view text, const LabelMap& labels,
                                  const CrfOptions& opts, Source source) {
  std::vector<NerExample> out;
  NerExample cur;
  cur.source = source;
  bool open = false;
  size_t open_start = 0;
  std::string open_tag;
  size_t open_line = 0;

  auto close_entity = [&](size_t end) {
    if (!open) return;
    Label label;
    try {
      label = labels.map(open_tag);
    } catch (const Error& e) {
      throw invalid_error("line " + std::to_string(open_line) + ": " + e.what());
    }
    cur.spans.push_back({open_start, end, label});
    open = false;
  };
  auto flush_sentence = [&]() {
    close_entity(cur.text.size());
    if (!cur.text.empty()) out.push_back(std::move(cur));
    cur = NerExample{};
    cur.source = source;
  };

  size_t line_no = 0;
  for (std::string_view raw : str::split(text, '\n')) {
    ++line_no;
    std::string_view line = str::trim(raw);
    if (line.empty()) {
      flush_sentence();
      continue;
    }
    auto cols = str::split_ws(line);
    int ncols = static_cast<int>(cols.size());
    int tcol = opts.token_col < 0 ? ncols + opts.token_col : opts.token_col;
    int gcol = opts.tag_col < 0 ? ncols + opts.tag_col : opts.tag_col;
    if (tcol < 0 || tcol >= ncols || gcol < 0 || gcol >= ncols)
      throw parse_error("line " + std::to_string(line_no) + ": expected at least " +
                        std::to_string(std::max(opts.token_col, opts.tag_col) + 1) +
                        " columns, got " + std::to_string(ncols));
    std::string_view token = cols[tcol];
    std::string_view tag = cols[gcol];

    // An entity closed by this token's tag ends before the separator space.
    size_t prev_end = cur.text.size();
    if (!cur.text.empty()) cur.text += ' ';
    size_t tok_start = cur.text.size();
    cur.text += token;

    if (tag == "O") {
      close_entity(prev_end);
    } else if (tag.rfind("B-", 0) == 0 && tag.size() > 2) {
      close_entity(prev_end);
      open = true;
      open_start = tok_start;
      open_tag = std::string(tag.substr(2));
      open_line = line_no;
    } else if (tag.rfind("I-", 0) == 0 && tag.size() > 2) {
      std::string_view suffix = tag.substr(2);
      if (open && suffix == open_tag) {
        // extends the open entity through this token
      } else if (opts.repair_dangling_i) {
        close_entity(prev_end);
        open = true;
        open_start = tok_start;
        open_tag = std::string(suffix);
        open_line = line_no;
      } else {
        throw parse_error("line " + std::to_string(line_no) + ": dangling I- tag '" +
                          std::string(tag) + "'");
      }
    } else {
      throw parse_error("line " + std::to_string(line_no) + ": bad BIO tag '" +
                        std::string(tag) + "'");
    }
  }
  flush_sentence();
  return out;
}

namespace {

void validate_example(NerExample& ex, size_t index) {
  std::string where = "example " + std::to_string(index) + ": ";
  std::sort(ex.spans.begin(), ex.spans.end());
  size_t prev_end = 0;
  bool first = true;
  for (const auto& span : ex.spans) {
    if (span.start >= span.end)
      throw validation_error(where + "empty span at offset " + std::to_string(span.start));
    if (span.end > ex.text.size())
      throw validation_error(where + "span end " + std::to_string(span.end) +
                             " beyond text length " + std::to_string(ex.text.size()));
    if (!first && span.start < prev_end)
      throw validation_error(where + "overlapping spans at offset " +
                             std::to_string(span.start));
    prev_end = span.end;
    first = false;
  }
}

}  // namespace

std::vector<NerExample> examples_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad examples file: ") + e.what());
  }
  if (!j.is_array()) throw validation_error("examples file must hold a top-level array");
  std::vector<NerExample> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    const auto& rec = j[i];
    std::string where = "example " + std::to_string(i) + ": ";
    if (!rec.is_object() || !rec.contains("text") || !rec["text"].is_string())
      throw validation_error(where + "missing \"text\"");
    NerExample ex;
    ex.text = rec["text"].get<std::string>();
    if (rec.contains("source")) {
      if (!rec["source"].is_string()) throw validation_error(where + "bad \"source\"");
      ex.source = source_from_name(rec["source"].get<std::string>());
    }
    const char* key = rec.contains("entities") ? "entities"
                      : rec.contains("spans")  ? "spans"
                                               : nullptr;
    if (key != nullptr) {
      if (!rec[key].is_array()) throw validation_error(where + "bad span list");
      for (const auto& s : rec[key]) {
        if (!s.is_array() || s.size() != 3 || !s[0].is_number_unsigned() ||
            !s[1].is_number_unsigned() || !s[2].is_string())
          throw validation_error(where + "spans must be [start, end, label] triples");
        EntitySpan span;
        span.start = s[0].get<size_t>();
        span.end = s[1].get<size_t>();
        try {
          span.label = label_from_name(s[2].get<std::string>());
        } catch (const Error& e) {
          throw validation_error(where + e.what());
        }
        ex.spans.push_back(span);
      }
    }
    validate_example(ex, i);
    out.push_back(std::move(ex));
  }
  return out;
}

std::string examples_to_json(const std::vector<NerExample>& examples) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& ex : examples) {
    nlohmann::ordered_json rec;
    rec["text"] = ex.text;
    auto spans = nlohmann::ordered_json::array();
    std::vector<EntitySpan> sorted = ex.spans;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& span : sorted)
      spans.push_back({span.start, span.end, label_name(span.label)});
    rec["entities"] = std::move(spans);
    rec["source"] = source_name(ex.source);
    arr.push_back(std::move(rec));
  }
  return arr.dump(1, '\t') + "\n";
}

std::vector<NerExample> read_examples(const std::filesystem::path& path) {
  return examples_from_json(str::read_file(path));
}

void write_examples(const std::vector<NerExample>& examples,
                    const std::filesystem::path& path) {
  str::write_file(path, examples_to_json(examples));
}

BalanceReport label_balance(const std::vector<NerExample>& examples) {
  BalanceReport report;
  for (const auto& ex : examples) {
    report.examples += 1;
    report.per_source_examples[std::string(source_name(ex.source))] += 1;
    auto& src_spans = report.per_source_spans[std::string(source_name(ex.source))];
    for (const auto& span : ex.spans) {
      report.per_label[std::string(label_name(span.label))] += 1;
      src_spans += 1;
      report.spans += 1;
    }
  }
  return report;
}

std::string BalanceReport::to_text() const {
  std::string out = "label counts:\n";
  for (const auto& [label, n] : per_label)
    out += "  " + label + "\t" + std::to_string(n) + "\n";
  out += "per source:\n";
  for (const auto& [src, n] : per_source_examples) {
    size_t spans_n = per_source_spans.count(src) ? per_source_spans.at(src) : 0;
    out += "  " + src + "\t" + std::to_string(n) + " examples\t" +
           std::to_string(spans_n) + " spans\n";
  }
  out += "total\t" + std::to_string(examples) + " examples\t" + std::to_string(spans) +
         " spans\n";
  return out;
}

std::string BalanceReport::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = "latinpipe-label-balance";
  j["format_version"] = 1;
  j["labels"] = per_label;
  j["source_examples"] = per_source_examples;
  j["source_spans"] = per_source_spans;
  j["examples"] = examples;
  j["spans"] = spans;
  return j.dump(1, '\t') + "\n";
}

}  // namespace latinpipe::ner
