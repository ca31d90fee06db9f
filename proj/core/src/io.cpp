#include "hyperjump/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hyperjump/error.hpp"

namespace hyperjump {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<long> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<long> numbers;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || value < 0) {
      throw FormatError("line " + std::to_string(line_no) + ": expected non-negative integers");
    }
    numbers.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return numbers;
}

}  // namespace

Document3g parse_3g(std::string_view text) {
  Document3g doc;
  bool have_header = false;
  long vertex_count = 0;
  long edge_count = 0;
  std::vector<Triple> edges;
  std::size_t line_no = 0;
  for (const auto line : split_lines(text)) {
    ++line_no;
    if (!line.empty() && line.front() == '#') {
      if (!have_header) doc.comments.emplace_back(line.substr(1));
      continue;
    }
    const auto numbers = parse_numbers(line, line_no);
    if (numbers.empty()) continue;
    if (!have_header) {
      if (numbers.size() != 2) throw FormatError("header must be `t m`");
      vertex_count = numbers[0];
      edge_count = numbers[1];
      have_header = true;
      continue;
    }
    if (numbers.size() != 3) {
      throw FormatError("line " + std::to_string(line_no) + ": expected a triple `a b c`");
    }
    const Triple t{static_cast<Vertex>(numbers[0]), static_cast<Vertex>(numbers[1]),
                   static_cast<Vertex>(numbers[2])};
    if (!(t[0] < t[1] && t[1] < t[2]) || t[2] >= vertex_count) {
      throw FormatError("line " + std::to_string(line_no) + ": triple must satisfy a < b < c < t");
    }
    if (!edges.empty() && !(edges.back() < t)) {
      throw FormatError("line " + std::to_string(line_no) + ": triples must be strictly increasing");
    }
    edges.push_back(t);
  }
  if (!have_header) throw FormatError("missing `t m` header");
  if (static_cast<long>(edges.size()) != edge_count) {
    throw FormatError("header announces " + std::to_string(edge_count) + " triples, found " +
                      std::to_string(edges.size()));
  }
  doc.graph = ThreeGraph::canonicalize(edges, static_cast<Vertex>(vertex_count));
  return doc;
}

std::string format_3g(const ThreeGraph& graph, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << '#' << c << '\n';
  out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (const auto& e : graph.edges()) out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
  return out.str();
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("short write to '" + path.string() + "'");
}

Document3g read_3g(const std::filesystem::path& path) { return parse_3g(read_text(path)); }

void write_3g(const std::filesystem::path& path, const ThreeGraph& graph,
              const std::vector<std::string>& comments) {
  write_text(path, format_3g(graph, comments));
}

std::pair<Document3g, Document3g> parse_pair(std::string_view text) {
  std::size_t pos = 0;
  std::size_t split = std::string_view::npos;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line == "%") {
      split = pos;
      break;
    }
    pos = end + 1;
  }
  if (split == std::string_view::npos) throw FormatError("pair file lacks a '%' separator line");
  const std::size_t after = text.find('\n', split);
  auto first = parse_3g(text.substr(0, split));
  auto second = parse_3g(after == std::string_view::npos ? std::string_view{} : text.substr(after + 1));
  if (first.graph.vertex_count() != second.graph.vertex_count()) {
    throw FormatError("pair blocks have different vertex counts");
  }
  return {std::move(first), std::move(second)};
}

std::string format_pair(const Document3g& first, const Document3g& second) {
  return format_3g(first.graph, first.comments) + "%\n" + format_3g(second.graph, second.comments);
}

}  // namespace hyperjump
