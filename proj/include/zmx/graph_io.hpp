#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "zmx/graph.hpp"

namespace zmx {

// Graph text format:
//   line 1      "n m"
//   m lines     "u v" with u < v, sorted lexicographically
// Lines starting with '#' are comments. Vertices are 0-based.

inline void write_graph(std::ostream& os, const Graph& g) {
  os << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline std::string to_text(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

inline Graph read_graph(std::istream& is) {
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(is, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    rows.push_back(line);
  }
  if (rows.empty()) throw Error("graph file: missing header");
  std::istringstream head(rows[0]);
  int n = 0;
  std::size_t m = 0;
  if (!(head >> n >> m)) throw Error("graph file: bad header '" + rows[0] + "'");
  if (rows.size() != m + 1) throw Error("graph file: edge count does not match header");
  std::vector<Graph::Edge> e;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream row(rows[i]);
    int u = 0, v = 0;
    if (!(row >> u >> v)) throw Error("graph file: bad edge line '" + rows[i] + "'");
    e.emplace_back(u, v);
  }
  return Graph(n, std::move(e));
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  return read_graph(in);
}

inline void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write graph file '" + path + "'");
  write_graph(out, g);
}

/// Fill colors for DOT output, indexed by exploration color. Color 0
/// (uncolored) is white; colors above 8 wrap around 1..8.
inline constexpr std::array<const char*, 9> kDotPalette = {
    "white", "red", "green", "cyan", "gray", "yellow", "orange", "violet", "black"};

inline const char* dot_fill(std::uint8_t color) {
  if (color == 0) return kDotPalette[0];
  return kDotPalette[1 + (color - 1) % 8];
}

/// Graphviz text for g; when `coloring` is non-empty, vertex v is filled with
/// dot_fill(coloring[v]) and labeled "v:c".
inline void write_dot(std::ostream& os, const Graph& g,
                      const std::vector<std::uint8_t>& coloring = {}) {
  os << "graph G {\n  node [style=filled];\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    const std::uint8_t c = coloring.empty() ? 0 : coloring[v];
    os << "  " << v << " [label=\"" << v;
    if (!coloring.empty()) os << ':' << static_cast<int>(c);
    os << "\" fillcolor=\"" << dot_fill(c) << "\"];\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

}  // namespace zmx
