#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "zmx/analysis.hpp"
#include "zmx/graph.hpp"

namespace zmx {

/// Decodes a Prüfer sequence over 0..n-1 into the tree's edge list.
inline Graph tree_from_pruefer(int n, const std::vector<int>& seq) {
  if (n == 1) return Graph(1, {});
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  std::vector<Graph::Edge> e;
  for (int x : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    e.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  Vertex a = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] != 1) continue;
    if (a < 0) {
      a = v;
    } else {
      e.emplace_back(a, v);
      break;
    }
  }
  return Graph(n, std::move(e));
}

/// Every labeled tree on n vertices, in lexicographic Prüfer order.
inline std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 10) throw Error("enumerate_trees: need 1 <= n <= 10");
  if (n <= 2) return {n == 1 ? Graph(1, {}) : Graph(2, {{0, 1}})};
  std::vector<Graph> out;
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    out.push_back(tree_from_pruefer(n, seq));
    int p = n - 3;
    while (p >= 0 && seq[p] == n - 1) seq[p--] = 0;
    if (p < 0) break;
    ++seq[p];
  }
  return out;
}

/// Calls `visit` on every connected labeled graph on n vertices. Edge subsets
/// of K_n are visited in increasing bitmask order, where bit t is the t-th
/// pair (u,v), u < v, in lexicographic order. With `unique`, only the first
/// member of each isomorphism class is visited.
inline void for_each_connected_graph(int n, bool unique,
                                     const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > 7) throw Error("enumerate_connected_graphs: need 1 <= n <= 7");
  std::vector<Graph::Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int m = static_cast<int>(pairs.size());

  std::vector<std::uint32_t> adj(n);
  std::set<std::uint64_t> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) + 1 < n) continue;
    std::fill(adj.begin(), adj.end(), 0u);
    for (int t = 0; t < m; ++t)
      if ((mask >> t) & 1u) {
        adj[pairs[t].first] |= 1u << pairs[t].second;
        adj[pairs[t].second] |= 1u << pairs[t].first;
      }
    std::uint32_t reach = 1u, frontier = 1u;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if ((frontier >> v) & 1u) next |= adj[v];
      frontier = next & ~reach;
      reach |= next;
    }
    if (reach != (1u << n) - 1u) continue;

    std::vector<Graph::Edge> e;
    for (int t = 0; t < m; ++t)
      if ((mask >> t) & 1u) e.push_back(pairs[t]);
    Graph g(n, std::move(e));
    if (unique && !seen.insert(canonical_code(g)).second) continue;
    visit(g);
  }
}

/// Materialized form of for_each_connected_graph. Labeled n = 7 is almost two
/// million graphs; prefer the visitor there.
inline std::vector<Graph> enumerate_connected_graphs(int n, bool unique = false) {
  std::vector<Graph> out;
  for_each_connected_graph(n, unique, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace zmx
