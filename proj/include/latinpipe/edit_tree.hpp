#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace latinpipe::lemma {

// Recursive form->lemma transformation built around the longest common
// substring of the pair. A leaf replaces one exact segment; an interior node
// keeps the matched substring and recurses on the segments before and after
// it. Applying a tree to a form it was not built from either generalizes the
// affix pattern or reports inapplicability.
class EditTree {
 public:
  // Both strings must be non-empty. apply(build(f, l), f) == l, exactly.
  static EditTree build(std::string_view form, std::string_view lemma);

  std::optional<std::string> apply(std::string_view form) const;

  // Canonical text encoding; equality and hashing go through it.
  std::string encode() const;
  static EditTree decode(std::string_view encoded);

  bool operator==(const EditTree& other) const;

  bool is_leaf() const;
  size_t depth() const;

 private:
  struct Node {
    bool leaf = true;
    std::string replace_from, replace_to;      // leaf
    size_t prefix_form_len = 0, suffix_form_len = 0;  // interior
    std::shared_ptr<const Node> left, right;   // null = both segments empty
  };

  explicit EditTree(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  static std::shared_ptr<const Node> build_node(std::string_view form, std::string_view lemma);
  static std::optional<std::string> apply_node(const Node* node, std::string_view segment);
  static void encode_node(const Node* node, std::string& out);
  static std::shared_ptr<const Node> decode_node(std::string_view s, size_t& pos);

  std::shared_ptr<const Node> root_;  // never null
};

}  // namespace latinpipe::lemma

template <>
struct std::hash<latinpipe::lemma::EditTree> {
  size_t operator()(const latinpipe::lemma::EditTree& t) const {
    return std::hash<std::string>()(t.encode());
  }
};
