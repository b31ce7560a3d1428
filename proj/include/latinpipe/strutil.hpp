#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace latinpipe::str {

std::vector<std::string_view> split(std::string_view s, char sep);
std::vector<std::string_view> split_ws(std::string_view s);
std::string_view trim(std::string_view s);

inline char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c; }
inline char ascii_upper(char c) { return (c >= 'a' && c <= 'z') ? char(c - 'a' + 'A') : c; }
inline bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

std::string lower(std::string_view s);

// Case-insensitive ASCII comparison for canonical FEATS ordering.
int icompare(std::string_view a, std::string_view b);

// Collapses runs of whitespace to single spaces and trims; the dedup key.
std::string collapse_ws(std::string_view s);

bool icontains(std::string_view haystack, std::string_view needle);

// MurmurHash64A; stable across platforms, used for streaming dedup keys.
std::uint64_t hash64(std::string_view s, std::uint64_t seed = 0);

// Reads a whole file; throws latinpipe::Error on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace latinpipe::str
