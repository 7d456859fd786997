// Copyright 2026 The ginv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/// \file io.hpp
/// \brief Text graph format and DOT export.
///
/// File format (one item per line, `#` starts a comment, blank lines ignored):
///
///     graph <V>          or      digraph <n>
///     <u> <v> [<m>]              <u> <v> [<m>]      (u < v required)
///
/// Labels are 1-based and the multiplicity m defaults to 1.

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ginv/graph.hpp"

namespace ginv {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

using ParsedGraph = std::variant<Multigraph, Digraph>;

namespace detail {

inline std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::string current;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) out.push_back(std::move(current)), current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

inline Integer parse_integer(const std::string& token, int line) {
  if (token.empty() || token.size() > 4096) throw ParseError(line, "bad integer '" + token + "'");
  std::size_t start = token[0] == '-' ? 1 : 0;
  if (start == token.size()) throw ParseError(line, "bad integer '" + token + "'");
  for (std::size_t k = start; k < token.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(token[k])))
      throw ParseError(line, "bad integer '" + token + "'");
  return Integer(token);
}

inline int parse_label(const std::string& token, int line) {
  Integer value = parse_integer(token, line);
  if (value > 1'000'000 || value < -1'000'000) throw ParseError(line, "label '" + token + "' out of range");
  return value.convert_to<int>();
}

}  // namespace detail

/// Parses the text graph format; the header keyword selects the result kind.
inline ParsedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  bool directed = false;
  int size = 0;
  Multigraph graph;
  Digraph digraph;
  std::set<std::pair<int, int>> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tokens = detail::split_tokens(raw);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 2 || (tokens[0] != "graph" && tokens[0] != "digraph"))
        throw ParseError(line_no, "expected header 'graph <V>' or 'digraph <n>'");
      directed = tokens[0] == "digraph";
      size = detail::parse_label(tokens[1], line_no);
      if (size < 1) throw ParseError(line_no, "vertex count must be positive");
      if (directed) digraph = Digraph(size);
      else graph = Multigraph(size);
      have_header = true;
      continue;
    }

    if (tokens.size() < 2 || tokens.size() > 3)
      throw ParseError(line_no, "expected '<u> <v> [<m>]'");
    int u = detail::parse_label(tokens[0], line_no);
    int v = detail::parse_label(tokens[1], line_no);
    Integer m = tokens.size() == 3 ? detail::parse_integer(tokens[2], line_no) : Integer(1);
    if (u < 1 || u > size || v < 1 || v > size)
      throw ParseError(line_no, "label out of range 1.." + std::to_string(size));
    if (u == v) throw ParseError(line_no, "loop edges are not allowed");
    if (m < 1) throw ParseError(line_no, "multiplicity must be at least 1");
    if (directed && u > v) throw ParseError(line_no, "digraph arcs must run from a lower to a higher label");
    auto key = u < v ? std::pair{u, v} : std::pair{v, u};
    if (!seen.insert(key).second) throw ParseError(line_no, "duplicate edge line");
    if (directed) digraph.add_arc(u, v, m);
    else graph.add_edge(u, v, m);
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header");
  if (directed) return digraph;
  return graph;
}

inline std::string format_graph(const Digraph& d) {
  std::ostringstream out;
  out << "digraph " << d.size() << '\n';
  for (const auto& a : d.arcs()) out << a.from << ' ' << a.to << ' ' << a.multiplicity << '\n';
  return out.str();
}

inline std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.multiplicity << '\n';
  return out.str();
}

/// DOT rendering; every edge is labelled with its multiplicity.
inline std::string to_dot(const Digraph& d, std::string_view name = "D") {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=LR;\n";
  for (int i = 1; i <= d.size(); ++i) out << "  " << i << ";\n";
  for (const auto& a : d.arcs())
    out << "  " << a.from << " -> " << a.to << " [label=\"" << a.multiplicity << "\"];\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const Multigraph& g, std::string_view name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int i = 1; i <= g.vertex_count(); ++i) out << "  " << i << ";\n";
  for (const auto& e : g.edges())
    out << "  " << e.u << " -- " << e.v << " [label=\"" << e.multiplicity << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace ginv
