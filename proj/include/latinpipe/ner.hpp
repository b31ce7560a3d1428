#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace latinpipe::ner {

enum class Label { person, loc, norp };

std::string_view label_name(Label label);       // "PERSON", "LOC", "NORP"
Label label_from_name(std::string_view name);   // throws on unknown label

enum class Source { ud, herodotos };

std::string_view source_name(Source source);
Source source_from_name(std::string_view name);

// Character (byte) span over the example text; end is exclusive.
struct EntitySpan {
  size_t start = 0;
  size_t end = 0;
  Label label = Label::person;

  auto operator<=>(const EntitySpan&) const = default;
};

struct NerExample {
  std::string text;
  std::vector<EntitySpan> spans;  // sorted by start, non-overlapping
  Source source = Source::ud;

  bool operator==(const NerExample&) const = default;
};

// Maps source-scheme tags (PRS, GEO, GRP, ...) onto the target label set.
class LabelMap {
 public:
  static LabelMap defaults();  // PRS/PER->PERSON, GEO/LOC->LOC, GRP/NORP->NORP
  static LabelMap from_text(std::string_view text);  // lines: "SOURCE TARGET"
  static LabelMap from_file(const std::filesystem::path& path);

  Label map(std::string_view source_tag) const;  // throws on unmapped tags
  size_t size() const { return map_.size(); }

 private:
  std::map<std::string, Label, std::less<>> map_;
};

struct CrfOptions {
  int token_col = 0;
  int tag_col = -1;            // -1 = last column
  bool repair_dangling_i = true;  // I- with no open entity starts one; else error
};

// One sentence per block of non-empty lines; token text joined with single
// spaces. Tags must be O, B-<tag>, or I-<tag>.
std::vector<NerExample> parse_crf(std::string_view text, const LabelMap& labels,
                                  const CrfOptions& opts = {}, Source source = Source::herodotos);

// JSON round-trip: a top-level array of {"text", "entities": [[start, end,
// label], ...], "source"}. "spans" is accepted as an alias on input.
std::vector<NerExample> examples_from_json(std::string_view text);
std::string examples_to_json(const std::vector<NerExample>& examples);
std::vector<NerExample> read_examples(const std::filesystem::path& path);
void write_examples(const std::vector<NerExample>& examples,
                    const std::filesystem::path& path);

struct BalanceReport {
  std::map<std::string, size_t> per_label;              // label -> span count
  std::map<std::string, size_t> per_source_examples;    // source -> example count
  std::map<std::string, size_t> per_source_spans;       // source -> span count
  size_t examples = 0;
  size_t spans = 0;

  std::string to_text() const;
  std::string to_json() const;
};

BalanceReport label_balance(const std::vector<NerExample>& examples);

}  // namespace latinpipe::ner
