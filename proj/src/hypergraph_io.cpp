#include <cerrno>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include "hypertri/hypergraph.hpp"

namespace hypertri {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

// Strict UTF-8 validation; overlongs and surrogates are rejected.
bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c >> 5) == 0x6) {
      len = 2;
      cp = c & 0x1f;
    } else if ((c >> 4) == 0xe) {
      len = 3;
      cp = c & 0x0f;
    } else if ((c >> 3) == 0x1e) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc >> 6) != 0x2) return false;
      cp = (cp << 6) | (cc & 0x3f);
    }
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && (cp < 0x10000 || cp > 0x10ffff)) ||
        (cp >= 0xd800 && cp <= 0xdfff))
      return false;
    i += len;
  }
  return true;
}

bool is_separator(char c) { return c == ' ' || c == '\t'; }

std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::uint64_t parse_unsigned(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line_no, "expected a non-negative integer, got '" +
                                  std::string(token) + "'");
  return value;
}

}  // namespace

LoadResult load_edge_list(std::istream& in) {
  LoadResult result;
  LabelMap labels;
  std::vector<std::vector<VertexId>> edges;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim_cr(raw);
    if (!valid_utf8(line)) throw ParseError(line_no, "invalid UTF-8");

    std::size_t pos = 0;
    while (pos < line.size() && is_separator(line[pos])) ++pos;
    if (pos == line.size()) {
      ++result.report.empty_lines_skipped;
      continue;
    }
    if (line[pos] == '#') {
      ++result.report.comment_lines_skipped;
      continue;
    }

    std::vector<VertexId> edge;
    while (pos < line.size()) {
      std::size_t end = pos;
      while (end < line.size() && !is_separator(line[end])) {
        const auto c = static_cast<unsigned char>(line[end]);
        if (c < 0x20 || c == 0x7f)
          throw ParseError(line_no, "control character inside vertex token");
        ++end;
      }
      edge.push_back(labels.intern(std::string(line.substr(pos, end - pos))));
      pos = end;
      while (pos < line.size() && is_separator(line[pos])) ++pos;
    }
    edges.push_back(std::move(edge));
  }

  const std::size_t n = labels.size();
  result.graph = Hypergraph::from_edges(std::move(edges), n, &result.report,
                                        std::move(labels));
  return result;
}

LoadResult load_simplex_list(std::istream& nverts, std::istream& simplices) {
  LoadResult result;
  LabelMap labels;
  std::vector<std::vector<VertexId>> edges;

  std::string raw;
  std::size_t simplex_line = 0;
  std::size_t nverts_line = 0;
  auto next_vertex = [&]() -> VertexId {
    while (std::getline(simplices, raw)) {
      ++simplex_line;
      std::string_view token = trim_cr(raw);
      while (!token.empty() && is_separator(token.front())) token.remove_prefix(1);
      while (!token.empty() && is_separator(token.back())) token.remove_suffix(1);
      if (token.empty()) continue;
      parse_unsigned(token, simplex_line);
      return labels.intern(std::string(token));
    }
    throw ParseError(simplex_line, "simplices file ended before all hyperedges were read");
  };

  while (std::getline(nverts, raw)) {
    ++nverts_line;
    std::string_view token = trim_cr(raw);
    while (!token.empty() && is_separator(token.front())) token.remove_prefix(1);
    while (!token.empty() && is_separator(token.back())) token.remove_suffix(1);
    if (token.empty()) {
      ++result.report.empty_lines_skipped;
      continue;
    }
    const auto size = parse_unsigned(token, nverts_line);
    if (size == 0) throw ParseError(nverts_line, "hyperedge of size 0");
    std::vector<VertexId> edge;
    edge.reserve(size);
    for (std::uint64_t k = 0; k < size; ++k) edge.push_back(next_vertex());
    edges.push_back(std::move(edge));
  }

  const std::size_t n = labels.size();
  result.graph = Hypergraph::from_edges(std::move(edges), n, &result.report,
                                        std::move(labels));
  return result;
}

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::system_error(errno ? errno : ENOENT, std::generic_category(),
                            "cannot open " + path.string());
  return in;
}

}  // namespace

LoadResult load_hypergraph(const std::filesystem::path& path,
                           InputFormat format) {
  if (format == InputFormat::edge_list) {
    auto in = open_input(path);
    return load_edge_list(in);
  }
  auto nverts = open_input(path.string() + "-nverts.txt");
  auto simplices = open_input(path.string() + "-simplices.txt");
  return load_simplex_list(nverts, simplices);
}

void write_edge_list(std::ostream& out, const Hypergraph& g) {
  const auto& labels = g.labels();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    bool first = true;
    for (VertexId v : g.edge(e)) {
      if (!first) out << ' ';
      first = false;
      if (labels)
        out << labels->label(v);
      else
        out << v;
    }
    out << '\n';
  }
}

}  // namespace hypertri
