#include "manifest.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(size_t line_no, const std::string& why) {
  throw std::runtime_error("manifest line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

const std::string* ManifestSection::get(const std::string& key) const {
  const std::string* found = nullptr;
  for (const auto& [k, v] : entries)
    if (k == key) found = &v;  // last one wins
  return found;
}

std::vector<std::string> ManifestSection::all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries)
    if (k == key) out.push_back(v);
  return out;
}

std::vector<const ManifestSection*> Manifest::of_kind(const std::string& kind) const {
  std::vector<const ManifestSection*> out;
  for (const auto& s : sections)
    if (s.kind == kind) out.push_back(&s);
  return out;
}

Manifest Manifest::parse(const std::string& text) {
  Manifest m;
  ManifestSection* current = &m.globals;
  std::istringstream in(text);
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section header");
      std::string inner = trim(line.substr(1, line.size() - 2));
      if (inner.empty()) fail(line_no, "empty section header");
      ManifestSection section;
      size_t space = inner.find_first_of(" \t");
      if (space == std::string::npos) {
        section.kind = inner;
      } else {
        section.kind = inner.substr(0, space);
        section.name = trim(inner.substr(space + 1));
      }
      m.sections.push_back(std::move(section));
      current = &m.sections.back();
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    current->entries.emplace_back(std::move(key), std::move(value));
  }
  return m;
}

Manifest Manifest::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read manifest " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}
