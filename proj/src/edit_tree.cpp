#include "latinpipe/edit_tree.hpp"

#include <cstdlib>
#include <vector>

#include "latinpipe/error.hpp"

namespace latinpipe::lemma {

namespace {

struct Lcs {
  size_t len = 0;
  size_t form_start = 0;
  size_t lemma_start = 0;
};

// Longest common substring (bytes). Ties prefer the leftmost occurrence in
// the form, then the leftmost in the lemma, so construction is deterministic.
Lcs longest_common_substring(std::string_view form, std::string_view lemma) {
  Lcs best;
  std::vector<size_t> prev(lemma.size() + 1, 0), cur(lemma.size() + 1, 0);
  for (size_t i = 1; i <= form.size(); ++i) {
    for (size_t j = 1; j <= lemma.size(); ++j) {
      cur[j] = form[i - 1] == lemma[j - 1] ? prev[j - 1] + 1 : 0;
      if (cur[j] > best.len) {
        best.len = cur[j];
        best.form_start = i - cur[j];
        best.lemma_start = j - cur[j];
      }
    }
    std::swap(prev, cur);
  }
  return best;
}

void append_uint(std::string& out, size_t v) {
  out += std::to_string(v);
}

size_t parse_uint(std::string_view s, size_t& pos, char terminator) {
  size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start || pos >= s.size() || s[pos] != terminator)
    throw parse_error("malformed edit tree encoding");
  size_t v = std::strtoull(std::string(s.substr(start, pos - start)).c_str(), nullptr, 10);
  ++pos;  // terminator
  return v;
}

std::string parse_counted(std::string_view s, size_t& pos) {
  size_t n = parse_uint(s, pos, ':');
  if (pos + n > s.size()) throw parse_error("malformed edit tree encoding");
  std::string out(s.substr(pos, n));
  pos += n;
  return out;
}

}  // namespace

std::shared_ptr<const EditTree::Node> EditTree::build_node(std::string_view form,
                                                           std::string_view lemma) {
  if (form.empty() && lemma.empty()) return nullptr;
  auto node = std::make_shared<Node>();
  Lcs lcs = longest_common_substring(form, lemma);
  if (lcs.len == 0) {
    node->leaf = true;
    node->replace_from = std::string(form);
    node->replace_to = std::string(lemma);
  } else {
    node->leaf = false;
    node->prefix_form_len = lcs.form_start;
    node->suffix_form_len = form.size() - lcs.form_start - lcs.len;
    node->left = build_node(form.substr(0, lcs.form_start), lemma.substr(0, lcs.lemma_start));
    node->right = build_node(form.substr(lcs.form_start + lcs.len),
                             lemma.substr(lcs.lemma_start + lcs.len));
  }
  return node;
}

EditTree EditTree::build(std::string_view form, std::string_view lemma) {
  if (form.empty() || lemma.empty())
    throw invalid_error("edit tree needs a non-empty form and lemma");
  return EditTree(build_node(form, lemma));
}

std::optional<std::string> EditTree::apply_node(const Node* node, std::string_view segment) {
  if (node == nullptr) {
    if (segment.empty()) return std::string();
    return std::nullopt;
  }
  if (node->leaf) {
    if (segment == node->replace_from) return node->replace_to;
    return std::nullopt;
  }
  if (segment.size() < node->prefix_form_len + node->suffix_form_len) return std::nullopt;
  // An interior node must actually keep at least one matched byte, otherwise
  // the split would be degenerate; build() guarantees this.
  auto left = apply_node(node->left.get(), segment.substr(0, node->prefix_form_len));
  if (!left) return std::nullopt;
  auto right = apply_node(node->right.get(),
                          segment.substr(segment.size() - node->suffix_form_len));
  if (!right) return std::nullopt;
  std::string middle(segment.substr(node->prefix_form_len,
                                    segment.size() - node->prefix_form_len -
                                        node->suffix_form_len));
  return *left + middle + *right;
}

std::optional<std::string> EditTree::apply(std::string_view form) const {
  return apply_node(root_.get(), form);
}

void EditTree::encode_node(const Node* node, std::string& out) {
  if (node == nullptr) {
    out += '-';
    return;
  }
  if (node->leaf) {
    out += 'L';
    append_uint(out, node->replace_from.size());
    out += ':';
    out += node->replace_from;
    append_uint(out, node->replace_to.size());
    out += ':';
    out += node->replace_to;
  } else {
    out += 'I';
    append_uint(out, node->prefix_form_len);
    out += ',';
    append_uint(out, node->suffix_form_len);
    out += '[';
    encode_node(node->left.get(), out);
    encode_node(node->right.get(), out);
    out += ']';
  }
}

std::string EditTree::encode() const {
  std::string out;
  encode_node(root_.get(), out);
  return out;
}

std::shared_ptr<const EditTree::Node> EditTree::decode_node(std::string_view s, size_t& pos) {
  if (pos >= s.size()) throw parse_error("malformed edit tree encoding");
  char kind = s[pos++];
  if (kind == '-') return nullptr;
  auto node = std::make_shared<Node>();
  if (kind == 'L') {
    node->leaf = true;
    node->replace_from = parse_counted(s, pos);
    node->replace_to = parse_counted(s, pos);
  } else if (kind == 'I') {
    node->leaf = false;
    node->prefix_form_len = parse_uint(s, pos, ',');
    node->suffix_form_len = parse_uint(s, pos, '[');
    node->left = decode_node(s, pos);
    node->right = decode_node(s, pos);
    if (pos >= s.size() || s[pos] != ']') throw parse_error("malformed edit tree encoding");
    ++pos;
  } else {
    throw parse_error("malformed edit tree encoding");
  }
  return node;
}

EditTree EditTree::decode(std::string_view encoded) {
  size_t pos = 0;
  auto root = decode_node(encoded, pos);
  if (root == nullptr || pos != encoded.size())
    throw parse_error("malformed edit tree encoding");
  return EditTree(std::move(root));
}

bool EditTree::operator==(const EditTree& other) const {
  return encode() == other.encode();
}

bool EditTree::is_leaf() const {
  return root_->leaf;
}

size_t EditTree::depth() const {
  struct Rec {
    static size_t depth(const Node* n) {
      if (n == nullptr) return 0;
      if (n->leaf) return 1;
      return 1 + std::max(depth(n->left.get()), depth(n->right.get()));
    }
  };
  return Rec::depth(root_.get());
}

}  // namespace latinpipe::lemma
