#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace latinpipe::harmonize {

enum class XposTransform { identity, first_char, drop };

// Declarative UPOS/XPOS/feature-retention remapping tables, loaded from a
// plain-text config (see data/tagmap.cfg for the documented schema).
struct TagMapConfig {
  // (treebank, source upos, source xpos) -> target upos; "*" is a wildcard.
  std::map<std::tuple<std::string, std::string, std::string>, std::string> upos_map;
  bool upos_fallthrough = true;  // keep unmapped tags instead of erroring

  std::map<std::pair<std::string, std::string>, std::string> xpos_map;
  std::map<std::string, XposTransform> xpos_transforms;  // per treebank, "*" allowed

  std::map<std::string, std::set<std::string>> feature_retention;  // by target upos
  bool retain_unlisted = false;  // feats policy for upos without a retain entry

  std::map<std::pair<std::string, std::string>, std::string> feature_value_map;

  // Most specific match first: (tb, upos, xpos), (tb, upos, *), (*, upos, xpos),
  // (*, upos, *). Empty result = no rule.
  const std::string* lookup_upos(const std::string& treebank, const std::string& upos,
                                 const std::string& xpos) const;
  std::string map_xpos(const std::string& treebank, const std::string& xpos) const;
  bool retains(const std::string& target_upos, const std::string& feature) const;
  const std::string& map_feature_value(const std::string& feature,
                                       const std::string& value) const;

  static TagMapConfig from_text(std::string_view text);
  static TagMapConfig from_file(const std::string& path);
  static TagMapConfig defaults();
};

}  // namespace latinpipe::harmonize
