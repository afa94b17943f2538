#pragma once

// Plain-text formats: edge lists, forest assignments, violation
// certificates, and Graphviz output. All writers emit '\n'-terminated lines.

#include <array>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nwforest/decompose.hpp"
#include "nwforest/graph.hpp"

namespace nwf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  /// 1-based; 0 when the problem is the end of input.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct TextLine {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Non-blank, non-comment lines split on whitespace.
inline std::vector<TextLine> content_lines(std::string_view text) {
  std::vector<TextLine> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    TextLine tl{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tl.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tl.tokens.empty() || tl.tokens.front().front() == '#') continue;
    out.push_back(std::move(tl));
  }
  return out;
}

inline std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected non-negative integer for ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return static_cast<std::size_t>(value);
}

// Parses "<prefix><integer>".
inline std::size_t parse_tagged(std::string_view token, std::string_view prefix, std::size_t line) {
  if (token.substr(0, prefix.size()) != prefix) {
    throw ParseError(line, "expected '" + std::string(prefix) + "...', got '" + std::string(token) + "'");
  }
  return parse_count(token.substr(prefix.size()), line, std::string(prefix).c_str());
}

inline void expect_tokens(const TextLine& l, std::size_t count, const char* what) {
  if (l.tokens.size() != count) {
    throw ParseError(l.number, std::string("expected ") + what);
  }
}

}  // namespace detail

/// Edge list: header "n m", then m lines "u v". '#' lines and blank lines are skipped.
inline Graph parse_graph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header 'n m'");
  const auto& header = lines.front();
  detail::expect_tokens(header, 2, "header 'n m'");
  const std::size_t n = detail::parse_count(header.tokens[0], header.number, "vertex count");
  const std::size_t m = detail::parse_count(header.tokens[1], header.number, "edge count");
  if (lines.size() - 1 < m) {
    throw ParseError(0, "expected " + std::to_string(m) + " edge lines, found " +
                            std::to_string(lines.size() - 1));
  }
  if (lines.size() - 1 > m) {
    throw ParseError(lines[m + 1].number, "more edge lines than the header's " + std::to_string(m));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t k = 1; k <= m; ++k) {
    const auto& l = lines[k];
    detail::expect_tokens(l, 2, "edge line 'u v'");
    const Vertex u = detail::parse_count(l.tokens[0], l.number, "endpoint");
    const Vertex v = detail::parse_count(l.tokens[1], l.number, "endpoint");
    if (u >= n || v >= n) throw ParseError(l.number, "vertex id out of range (n = " + std::to_string(n) + ")");
    edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

/// Assignment: header "r m", then one "edge_id forest" line per edge, any order.
inline Decomposition parse_assignment(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header 'r m'");
  const auto& header = lines.front();
  detail::expect_tokens(header, 2, "header 'r m'");
  const std::size_t r = detail::parse_count(header.tokens[0], header.number, "forest count");
  const std::size_t m = detail::parse_count(header.tokens[1], header.number, "edge count");
  if (lines.size() - 1 != m) {
    throw ParseError(lines.size() - 1 < m ? 0 : lines[m + 1].number,
                     "expected " + std::to_string(m) + " assignment lines, found " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<ForestIndex> assign(m, kUnassigned);
  for (std::size_t k = 1; k <= m; ++k) {
    const auto& l = lines[k];
    detail::expect_tokens(l, 2, "assignment line 'edge_id forest'");
    const EdgeId id = detail::parse_count(l.tokens[0], l.number, "edge id");
    const ForestIndex f = detail::parse_count(l.tokens[1], l.number, "forest index");
    if (id >= m) throw ParseError(l.number, "edge id out of range");
    if (f < 1 || f > r) throw ParseError(l.number, "forest index outside 1.." + std::to_string(r));
    if (assign[id] != kUnassigned) throw ParseError(l.number, "edge id " + std::to_string(id) + " repeated");
    assign[id] = f;
  }
  return Decomposition(r, std::move(assign));
}

inline std::string write_assignment(const Decomposition& d) {
  std::ostringstream os;
  os << d.forests() << ' ' << d.num_edges() << '\n';
  for (EdgeId e = 0; e < d.num_edges(); ++e) os << e << ' ' << d.forest_of(e) << '\n';
  return os.str();
}

struct CertificateRecord {
  std::size_t forests = 0;
  VertexSet vertices;
  std::size_t edge_count = 0;
  std::size_t bound = 0;
};

inline std::string write_certificate(const Graph& g, std::size_t r, const Certificate& c) {
  std::ostringstream os;
  os << "VIOLATION r=" << r << '\n';
  const char* sep = "";
  for (Vertex v : c.vertices) {
    os << sep << v;
    sep = " ";
  }
  os << '\n';
  os << "e(X)=" << restriction_edge_count(g, c.vertices) << " bound=" << r * (c.vertices.size() - 1)
     << '\n';
  return os.str();
}

inline CertificateRecord parse_certificate(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.size() != 3) throw ParseError(0, "certificate must have exactly 3 lines");
  CertificateRecord rec;
  detail::expect_tokens(lines[0], 2, "'VIOLATION r=<r>'");
  if (lines[0].tokens[0] != "VIOLATION") throw ParseError(lines[0].number, "expected 'VIOLATION'");
  rec.forests = detail::parse_tagged(lines[0].tokens[1], "r=", lines[0].number);
  std::vector<Vertex> vs;
  for (auto tok : lines[1].tokens) vs.push_back(detail::parse_count(tok, lines[1].number, "vertex id"));
  rec.vertices = VertexSet(std::move(vs));
  detail::expect_tokens(lines[2], 2, "'e(X)=<count> bound=<bound>'");
  rec.edge_count = detail::parse_tagged(lines[2].tokens[0], "e(X)=", lines[2].number);
  rec.bound = detail::parse_tagged(lines[2].tokens[1], "bound=", lines[2].number);
  return rec;
}

inline constexpr std::array<std::string_view, 8> kForestPalette = {
    "red", "blue", "green3", "orange", "purple", "brown", "magenta", "cyan4"};

/// Undirected DOT graph; every edge is labelled "F<i>" and colored by forest.
inline std::string export_dot(const Graph& g, const Decomposition& d) {
  std::ostringstream os;
  os << "graph forests {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) os << "  " << v << ";\n";
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    const ForestIndex f = d.forest_of(id);
    os << "  " << e.u << " -- " << e.v << " [forest=" << f << ", color=\""
       << kForestPalette[(f - 1) % kForestPalette.size()] << "\", label=\"F" << f << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace nwf
