#pragma once

// TGG text format:
//
//   tgg 1
//   # comment
//   subject <name>
//   object <name>
//   edge <from> <to> <rights>
//
// One statement per line. Rights are a non-empty string over {t,g,r,w}.
// Vertices must be declared before any edge that mentions them.

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "takegrant/error.hpp"
#include "takegrant/graph.hpp"

namespace takegrant {

inline constexpr std::string_view kTggHeader = "tgg 1";

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace detail

inline ProtectionGraph parse_graph(std::string_view text) {
  ProtectionGraph g;
  std::size_t line_no = 0;
  bool seen_header = false;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = detail::split_ws(line);
    if (!seen_header) {
      if (tokens.size() != 2 || tokens[0] != "tgg") {
        throw ParseError(line_no, "expected header 'tgg 1'");
      }
      if (tokens[1] != "1") {
        throw ParseError(line_no, "unsupported format version '" +
                                      std::string(tokens[1]) + "'");
      }
      seen_header = true;
      continue;
    }
    if (tokens.empty() || tokens[0].front() == '#') continue;

    const std::string_view keyword = tokens[0];
    if (keyword == "subject" || keyword == "object") {
      if (tokens.size() != 2) {
        throw ParseError(line_no, "expected '" + std::string(keyword) + " <name>'");
      }
      const std::string name(tokens[1]);
      if (!is_valid_vertex_name(name)) {
        throw ParseError(line_no, "invalid vertex name '" + name + "'");
      }
      if (g.find(name)) {
        throw ParseError(line_no, "duplicate vertex '" + name + "'");
      }
      g.add_vertex(name, keyword == "subject" ? VertexKind::Subject
                                              : VertexKind::Object);
    } else if (keyword == "edge") {
      if (tokens.size() != 4) {
        throw ParseError(line_no, "expected 'edge <from> <to> <rights>'");
      }
      auto from = g.find(tokens[1]);
      if (!from) {
        throw ParseError(line_no, "unknown vertex '" + std::string(tokens[1]) + "'");
      }
      auto to = g.find(tokens[2]);
      if (!to) {
        throw ParseError(line_no, "unknown vertex '" + std::string(tokens[2]) + "'");
      }
      auto rights = Rights::from_string(tokens[3]);
      if (!rights) {
        throw ParseError(line_no, "bad rights '" + std::string(tokens[3]) + "'");
      }
      g.add_edge(*from, *to, *rights);
    } else {
      throw ParseError(line_no, "unknown keyword '" + std::string(keyword) + "'");
    }
  }

  if (!seen_header) throw ParseError(1, "expected header 'tgg 1'");
  return g;
}

/// Canonical form: header, vertices in id order, arcs sorted by (from, to),
/// rights letters in t,g,r,w order. Fixpoint under parse/serialize.
inline std::string serialize_graph(const ProtectionGraph& g) {
  std::ostringstream out;
  out << kTggHeader << '\n';
  for (const auto& v : g.vertices()) {
    out << (v.kind == VertexKind::Subject ? "subject " : "object ") << v.name
        << '\n';
  }
  for (const Edge& e : g.edges()) {
    out << "edge " << g.name(e.from) << ' ' << g.name(e.to) << ' '
        << e.rights.to_string() << '\n';
  }
  return out.str();
}

}  // namespace takegrant
