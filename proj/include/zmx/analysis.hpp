#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "zmx/graph.hpp"

namespace zmx {

/// Length of a longest simple cycle, 0 for forests.
///
/// Exhaustive search over simple paths anchored at the smallest vertex of the
/// cycle; only meant for n <= 16.
inline int circumference(const Graph& g) {
  const int n = g.size();
  if (n > 16) throw Error("circumference: n > 16 is out of range");
  if (g.edge_count() + 1 == static_cast<std::size_t>(n)) return 0;

  int best = 0;
  std::function<void(Vertex, Vertex, std::uint32_t, int)> extend =
      [&](Vertex anchor, Vertex v, std::uint32_t used, int len) {
        if (best == n) return;
        for (Vertex w : g.neighbors(v)) {
          if (w == anchor && len >= 3) {
            best = std::max(best, len);
          } else if (w > anchor && !(used & Graph::bit(w))) {
            extend(anchor, w, used | Graph::bit(w), len + 1);
          }
        }
      };
  for (Vertex s = 0; s < n && best < n - s; ++s) extend(s, s, Graph::bit(s), 1);
  return best;
}

inline bool is_tree(const Graph& g) {
  return g.edge_count() + 1 == static_cast<std::size_t>(g.size());
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.size(), -1);
  std::vector<Vertex> queue{0};
  side[0] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Vertex v = queue[h];
    for (Vertex w : g.neighbors(v)) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        queue.push_back(w);
      } else if (side[w] == side[v]) {
        return false;
      }
    }
  }
  return true;
}

/// True iff some ordering of the vertices (the spine) makes the edge set
/// exactly {i,i+1} and {i,i+2}.
inline bool is_square_path(const Graph& g) {
  const int n = g.size();
  const std::size_t want = n == 1 ? 0 : static_cast<std::size_t>(2 * n - 3);
  if (g.edge_count() != want) return false;
  if (n <= 3) return true;  // K1, K2, K3

  std::vector<Vertex> spine;
  std::uint32_t used = 0;
  std::function<bool()> grow = [&]() -> bool {
    const int i = static_cast<int>(spine.size());
    if (i == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used & Graph::bit(w)) continue;
      if (i >= 1 && !g.adjacent(spine[i - 1], w)) continue;
      if (i >= 2 && !g.adjacent(spine[i - 2], w)) continue;
      // no chord may reach further back than two spine positions
      bool far = false;
      for (int b = 0; b + 2 < i && !far; ++b) far = g.adjacent(spine[b], w);
      if (far) continue;
      spine.push_back(w);
      used |= Graph::bit(w);
      if (grow()) return true;
      spine.pop_back();
      used &= ~Graph::bit(w);
    }
    return false;
  };
  return grow();
}

struct Classification {
  bool is_tree = false;
  bool is_bipartite = false;
  bool is_square_path = false;
};

inline Classification classify(const Graph& g) {
  return {is_tree(g), is_bipartite(g), is_square_path(g)};
}

/// Isomorphism-invariant code for n <= 11: the minimum upper-triangle
/// adjacency bit string over all labelings that respect a degree-based
/// vertex partition.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.size();
  if (n > 11) throw Error("canonical_code: n > 11 is out of range");

  // Invariant: (degree, sorted neighbor degrees).
  std::vector<std::vector<int>> inv(n);
  for (Vertex v = 0; v < n; ++v) {
    inv[v].push_back(g.degree(v));
    std::vector<int> nd;
    for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    inv[v].insert(inv[v].end(), nd.begin(), nd.end());
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return inv[a] < inv[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end) in order
  for (int b = 0; b < n;) {
    int e = b + 1;
    while (e < n && inv[order[e]] == inv[order[b]]) ++e;
    cells.emplace_back(b, e);
    b = e;
  }

  auto encode = [&](const std::vector<Vertex>& at) {
    // at[p] = vertex placed at position p
    std::uint64_t code = 0;
    int bitpos = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q, ++bitpos)
        if (g.adjacent(at[p], at[q])) code |= std::uint64_t{1} << bitpos;
    return code;
  };

  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> per_cell = [&](std::size_t c) {
    if (c == cells.size()) {
      best = std::min(best, encode(order));
      return;
    }
    auto first = order.begin() + cells[c].first;
    auto last = order.begin() + cells[c].second;
    std::sort(first, last);
    do {
      per_cell(c + 1);
    } while (std::next_permutation(first, last));
  };
  per_cell(0);
  return best;
}

}  // namespace zmx
