#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperjump/graph.hpp"

namespace hyperjump {

/// A ".3g" document: `t m` on the first data line, then m lines `a b c`
/// with a < b < c in lexicographic order. Lines starting with '#' are
/// comments; leading comments are kept so that writing back what was read
/// reproduces the file byte for byte.
struct Document3g {
  std::vector<std::string> comments;  // without the leading '#'
  ThreeGraph graph;
};

Document3g parse_3g(std::string_view text);
std::string format_3g(const ThreeGraph& graph, const std::vector<std::string>& comments = {});

Document3g read_3g(const std::filesystem::path& path);
void write_3g(const std::filesystem::path& path, const ThreeGraph& graph,
              const std::vector<std::string>& comments = {});

/// Pair files hold two ".3g" blocks separated by a line containing only '%'.
std::pair<Document3g, Document3g> parse_pair(std::string_view text);
std::string format_pair(const Document3g& first, const Document3g& second);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace hyperjump
