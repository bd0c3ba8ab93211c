#pragma once

// Test-side generators and brute-force oracles. Nothing here reuses the
// library's search code, so agreement is meaningful.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zmx/zmx.hpp"

namespace zmx::testing {

/// Random connected graph: a random tree plus each remaining pair with
/// probability `extra`.
inline Graph random_connected(std::mt19937& rng, int n, double extra = 0.3) {
  std::vector<Graph::Edge> edges;
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.push_back({u, v});
    has[u][v] = has[v][u] = true;
  }
  std::bernoulli_distribution coin(extra);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!has[u][v] && coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Longest cycle by subset DP over simple paths anchored at their smallest
/// vertex. 0 for acyclic graphs.
inline int circumference_oracle(const Graph& g) {
  const int n = g.size();
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<std::vector<char>> reach(std::size_t{1} << n, std::vector<char>(n, 0));
    reach[std::size_t{1} << s][s] = 1;
    for (std::size_t mask = 0; mask < reach.size(); ++mask) {
      if (!(mask >> s & 1) || (mask & ((std::size_t{1} << s) - 1))) continue;
      for (int v = 0; v < n; ++v) {
        if (!reach[mask][v]) continue;
        const int len = std::popcount(mask);
        if (len >= 3 && g.adjacent(v, s)) best = std::max(best, len);
        for (int w : g.neighbors(v))
          if (w > s && !(mask >> w & 1)) reach[mask | (std::size_t{1} << w)][w] = 1;
      }
    }
  }
  return best;
}

/// Connected labeled graphs on n vertices, counted with a union-find over
/// every edge subset.
inline long count_connected_oracle(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  long count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = n;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      const int a = find(pairs[i].first), b = find(pairs[i].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components == 1) ++count;
  }
  return count;
}

struct NaiveVerdict {
  bool ok = true;
  int max_colors = 0;  ///< distinct nonzero colors assigned along one branch
};

/// Path-by-path exhaustive exploration without memoization. A state repeated
/// along the current path is a loop.
inline NaiveVerdict naive_verify(const Graph& g, const Strategy& s) {
  NaiveVerdict out;
  std::set<std::string> on_path;
  auto rec = [&](auto&& self, Vertex start, Vertex pos, const Coloring& col,
                 std::uint32_t visited, std::set<Color> used) -> bool {
    out.max_colors = std::max(out.max_colors, static_cast<int>(used.size()));
    const Environment env = observe(g, pos, col);
    const auto d = s.decide(env);
    if (!d) return false;
    if (d->stop) return pos == start && visited == g.all_vertices();
    if (!is_legal(env, *d, s.palette, s.recoloring)) return false;
    Coloring next = col;
    next[pos] = d->assign;
    if (d->assign != 0) used.insert(d->assign);
    out.max_colors = std::max(out.max_colors, static_cast<int>(used.size()));
    const std::string here = state_key(pos, col);
    on_path.insert(here);
    bool ok = true;
    for (Vertex w = 0; w < g.size() && ok; ++w) {
      if (!g.adjacent(pos, w) || col[w] != d->target) continue;
      if (on_path.count(state_key(w, next))) {
        ok = false;
        break;
      }
      ok = self(self, start, w, next, visited | (1u << w), used);
    }
    on_path.erase(here);
    return ok;
  };
  for (Vertex start = 0; start < g.size(); ++start) {
    if (!rec(rec, start, start, Coloring(g.size(), 0), 1u << start, {})) {
      out.ok = false;
      return out;
    }
  }
  return out;
}

/// Table over every environment reachable with colors 0..budget, with a
/// uniformly random legal decision per entry.
inline DecisionTable random_table(std::mt19937& rng, const Graph& g, int budget) {
  DecisionTable t(budget, false);
  for (const auto& e : reachable_environments(g, budget, false, 100000)) {
    const auto opts = legal_decisions(e, budget, false);
    t.set(e, opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)]);
  }
  return t;
}

}  // namespace zmx::testing
