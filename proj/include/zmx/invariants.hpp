#pragma once

// Trace invariants for the built-in strategies, usable as
// VerifyOptions::check.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zmx/adversary.hpp"
#include "zmx/algorithms.hpp"

namespace zmx {

inline std::vector<int> bfs_distances(const Graph& g, Vertex from) {
  std::vector<int> dist(g.size(), -1);
  std::vector<Vertex> queue{from};
  dist[from] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (Vertex w : g.neighbors(queue[h]))
      if (dist[w] < 0) {
        dist[w] = dist[queue[h]] + 1;
        queue.push_back(w);
      }
  return dist;
}

/// Every vertex gets color (distance from start + 1) mod1 3.
inline TransitionCheck distance_coloring_check() {
  return [](const Graph& g, Vertex start, const RunState& s, const MoveDecision& d,
            std::span<const Vertex>) -> std::optional<std::string> {
    const int want = mod1(bfs_distances(g, start)[s.position] + 1, 3);
    if (d.assign != want)
      return "vertex " + std::to_string(s.position) + " colored " + std::to_string(d.assign) +
             ", expected " + std::to_string(want);
    return std::nullopt;
  };
}

/// A backtracking move (to color c-1, or (c-1) mod1 m when m > 0) always has
/// exactly one candidate.
inline TransitionCheck unique_backtrack_check(int m = 0) {
  return [m](const Graph&, Vertex, const RunState& s, const MoveDecision& d,
             std::span<const Vertex> cand) -> std::optional<std::string> {
    const int c = d.assign;
    if (c == 0 || d.target == 0) return std::nullopt;
    const int back = m > 0 ? mod1(c - 1, m) : c - 1;
    if (d.target == back && cand.size() != 1)
      return "backtrack from vertex " + std::to_string(s.position) + " has " +
             std::to_string(cand.size()) + " candidates";
    return std::nullopt;
  };
}

/// No three pairwise adjacent vertices ever carry colors {1,2,3}.
inline TransitionCheck no_rainbow_triangle_check() {
  return [](const Graph& g, Vertex, const RunState& s, const MoveDecision& d,
            std::span<const Vertex>) -> std::optional<std::string> {
    const int c = d.assign;
    if (c < 1 || c > 3) return std::nullopt;
    const auto& col = s.coloring;
    const auto& nb = g.neighbors(s.position);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        const int x = col[nb[a]], y = col[nb[b]];
        if (x == 0 || y == 0 || x > 3 || y > 3) continue;
        if (x != y && x != c && y != c && g.adjacent(nb[a], nb[b]))
          return "triangle " + std::to_string(s.position) + "," + std::to_string(nb[a]) + "," +
                 std::to_string(nb[b]) + " colored 1,2,3";
      }
    return std::nullopt;
  };
}

/// Whenever the start vertex changes its red/green color, every labeled
/// vertex that is not deleted ends up with that same color.
inline TransitionCheck phase_color_check() {
  return [](const Graph& g, Vertex start, const RunState& s, const MoveDecision& d,
            std::span<const Vertex>) -> std::optional<std::string> {
    using RC = RecolorCode;
    const Color before = s.coloring[s.position];
    if (s.position != start || !RC::labeled(before) || !RC::labeled(d.assign) || d.assign == before)
      return std::nullopt;
    const bool green = RC::green(d.assign);
    for (Vertex v = 0; v < g.size(); ++v) {
      const Color c = v == s.position ? d.assign : s.coloring[v];
      if (RC::labeled(c) && RC::green(c) != green)
        return "start recolored but vertex " + std::to_string(v) + " has the other color";
    }
    return std::nullopt;
  };
}

/// The invariant that belongs to a registered strategy name, if any.
inline TransitionCheck check_for_strategy(const std::string& name) {
  if (name == "tree") return distance_coloring_check();
  if (name == "dfs") return unique_backtrack_check();
  if (name.rfind("smalldfs:", 0) == 0) return unique_backtrack_check(2 * std::stoi(name.substr(9)) - 1);
  if (name == "squarepath") return no_rainbow_triangle_check();
  if (name == "recolorer") return phase_color_check();
  return {};
}

}  // namespace zmx
