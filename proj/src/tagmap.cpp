#include "latinpipe/tagmap.hpp"

#include <algorithm>

#include "latinpipe/error.hpp"
#include "latinpipe/strutil.hpp"

namespace latinpipe::harmonize {

namespace {

const std::set<std::string, std::less<>> kUposInventory = {
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};

const std::set<std::string> kNominalFeatures = {"Gender", "Number", "Case"};
const std::set<std::string> kVerbalFeatures = {"Person", "Number", "Tense", "Mood", "Voice"};

[[noreturn]] void fail(size_t line_no, const std::string& reason) {
  throw parse_error("tagmap line " + std::to_string(line_no) + ": " + reason);
}

void check_target_upos(const std::string& tag, size_t line_no) {
  if (kUposInventory.find(tag) == kUposInventory.end())
    fail(line_no, "target UPOS '" + tag + "' is not in the universal inventory");
}

}  // namespace

const std::string* TagMapConfig::lookup_upos(const std::string& treebank,
                                             const std::string& upos,
                                             const std::string& xpos) const {
  const std::string star = "*";
  for (const auto* key :
       {&treebank, &star}) {
    for (const auto* xkey : {&xpos, &star}) {
      auto it = upos_map.find(std::make_tuple(*key, upos, *xkey));
      if (it != upos_map.end()) return &it->second;
    }
  }
  return nullptr;
}

std::string TagMapConfig::map_xpos(const std::string& treebank, const std::string& xpos) const {
  if (xpos.empty()) return xpos;
  auto it = xpos_map.find({treebank, xpos});
  if (it == xpos_map.end()) it = xpos_map.find({"*", xpos});
  if (it != xpos_map.end()) return it->second;

  auto tr = xpos_transforms.find(treebank);
  if (tr == xpos_transforms.end()) tr = xpos_transforms.find("*");
  XposTransform t = tr == xpos_transforms.end() ? XposTransform::identity : tr->second;
  switch (t) {
    case XposTransform::identity:
      return xpos;
    case XposTransform::drop:
      return std::string();
    case XposTransform::first_char: {
      // first UTF-8 codepoint, ASCII-lowercased
      size_t n = 1;
      while (n < xpos.size() && (static_cast<unsigned char>(xpos[n]) & 0xC0) == 0x80) ++n;
      std::string out = xpos.substr(0, n);
      for (char& c : out) c = str::ascii_lower(c);
      return out;
    }
  }
  return xpos;
}

bool TagMapConfig::retains(const std::string& target_upos, const std::string& feature) const {
  auto it = feature_retention.find(target_upos);
  if (it == feature_retention.end()) return retain_unlisted;
  return it->second.count(feature) > 0;
}

const std::string& TagMapConfig::map_feature_value(const std::string& feature,
                                                   const std::string& value) const {
  auto it = feature_value_map.find({feature, value});
  return it == feature_value_map.end() ? value : it->second;
}

TagMapConfig TagMapConfig::from_text(std::string_view text) {
  TagMapConfig cfg;
  size_t line_no = 0;
  for (auto raw : str::split(text, '\n')) {
    ++line_no;
    std::string_view line = str::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto f = str::split_ws(line);
    std::string_view directive = f[0];

    if (directive == "upos") {
      if (f.size() != 5) fail(line_no, "expected: upos <treebank> <upos> <xpos> <target>");
      std::string target(f[4]);
      check_target_upos(target, line_no);
      cfg.upos_map[{std::string(f[1]), std::string(f[2]), std::string(f[3])}] = target;
    } else if (directive == "upos-fallthrough") {
      if (f.size() != 2 || (f[1] != "keep" && f[1] != "error"))
        fail(line_no, "expected: upos-fallthrough keep|error");
      cfg.upos_fallthrough = f[1] == "keep";
    } else if (directive == "xpos") {
      if (f.size() != 4) fail(line_no, "expected: xpos <treebank> <xpos> <target>");
      cfg.xpos_map[{std::string(f[1]), std::string(f[2])}] = std::string(f[3]);
    } else if (directive == "xpos-transform") {
      if (f.size() != 3) fail(line_no, "expected: xpos-transform <treebank> <transform>");
      XposTransform t;
      if (f[2] == "identity") t = XposTransform::identity;
      else if (f[2] == "first-char") t = XposTransform::first_char;
      else if (f[2] == "drop") t = XposTransform::drop;
      else fail(line_no, "unknown xpos transform '" + std::string(f[2]) + "'");
      cfg.xpos_transforms[std::string(f[1])] = t;
    } else if (directive == "retain") {
      if (f.size() < 2) fail(line_no, "expected: retain <upos> [feature ...]");
      std::string upos(f[1]);
      check_target_upos(upos, line_no);
      std::set<std::string> feats;
      for (size_t i = 2; i < f.size(); ++i) feats.insert(std::string(f[i]));
      cfg.feature_retention[upos] = std::move(feats);
    } else if (directive == "retain-default") {
      if (f.size() != 2 || (f[1] != "keep" && f[1] != "drop"))
        fail(line_no, "expected: retain-default keep|drop");
      cfg.retain_unlisted = f[1] == "keep";
    } else if (directive == "featval") {
      if (f.size() != 4) fail(line_no, "expected: featval <feature> <source> <target>");
      cfg.feature_value_map[{std::string(f[1]), std::string(f[2])}] = std::string(f[3]);
    } else {
      fail(line_no, "unknown directive '" + std::string(directive) + "'");
    }
  }

  // Retention bounds for the core categories.
  for (const auto& [upos, feats] : cfg.feature_retention) {
    const std::set<std::string>* bound = nullptr;
    if (upos == "NOUN" || upos == "ADJ" || upos == "DET" || upos == "PRON")
      bound = &kNominalFeatures;
    else if (upos == "VERB")
      bound = &kVerbalFeatures;
    if (!bound) continue;
    for (const auto& feat : feats)
      if (!bound->count(feat))
        throw parse_error("tagmap: retained feature '" + feat + "' not allowed for " + upos);
  }
  return cfg;
}

TagMapConfig TagMapConfig::from_file(const std::string& path) {
  return from_text(str::read_file(path));
}

TagMapConfig TagMapConfig::defaults() {
  // Mirrors data/tagmap.cfg. Identity UPOS mapping with fall-through; XPOS
  // coarsened to the first character; features limited per category.
  return from_text(
      "retain NOUN Gender Number Case\n"
      "retain PROPN Gender Number Case\n"
      "retain ADJ Gender Number Case\n"
      "retain DET Gender Number Case\n"
      "retain PRON Gender Number Case\n"
      "retain NUM Gender Number Case\n"
      "retain VERB Person Number Tense Mood Voice\n"
      "retain AUX Person Number Tense Mood Voice\n"
      "retain-default drop\n"
      "upos-fallthrough keep\n"
      "xpos-transform * first-char\n");
}

}  // namespace latinpipe::harmonize
