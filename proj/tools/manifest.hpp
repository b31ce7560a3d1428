#pragma once

#include <string>
#include <vector>

// Declarative run manifest: "key = value" lines, '#' comments, and
// "[kind name]" section headers. Repeated keys form lists.
//
//   out_dir = out
//   tagmap = data/tagmap.cfg
//   [treebank perseus]
//   train = ud/la_perseus-ud-train.conllu
//   [corpus]
//   input = raw/a.txt
//   input = raw/b.txt
struct ManifestSection {
  std::string kind;
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;

  const std::string* get(const std::string& key) const;
  std::vector<std::string> all(const std::string& key) const;
};

struct Manifest {
  ManifestSection globals;
  std::vector<ManifestSection> sections;

  const std::string* global(const std::string& key) const { return globals.get(key); }
  std::vector<const ManifestSection*> of_kind(const std::string& kind) const;

  static Manifest parse(const std::string& text);   // throws std::runtime_error
  static Manifest load(const std::string& path);
};
