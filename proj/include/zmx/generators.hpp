#pragma once

// Witness families and fixtures.
//
// Figures label path vertices v_1..v_m (1-based). Internally v_r gets id r-1;
// every generator documents where its extra vertices (leaves, apexes) land.

#include <string>
#include <utility>
#include <vector>

#include "zmx/graph.hpp"

namespace zmx {

namespace detail {

inline void add_path(std::vector<Graph::Edge>& e, int first, int count) {
  for (int i = 0; i + 1 < count; ++i) e.emplace_back(first + i, first + i + 1);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

}  // namespace detail

/// v_1..v_n as ids 0..n-1.
inline Graph build_path(int n) {
  detail::require(n >= 1, "path: n must be >= 1");
  std::vector<Graph::Edge> e;
  detail::add_path(e, 0, n);
  return Graph(n, std::move(e));
}

inline Graph build_cycle(int n) {
  detail::require(n >= 3, "cycle: n must be >= 3");
  std::vector<Graph::Edge> e;
  detail::add_path(e, 0, n);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

inline Graph build_complete(int n) {
  detail::require(n >= 1, "complete: n must be >= 1");
  std::vector<Graph::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

/// K_{1,leaves}; the center is id 0.
inline Graph build_star(int leaves) {
  detail::require(leaves >= 1, "star: needs at least one leaf");
  std::vector<Graph::Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, std::move(e));
}

/// Path 0..n-1 plus every chord {i, i+2}.
inline Graph build_square_path(int n) {
  detail::require(n >= 1, "square path: n must be >= 1");
  std::vector<Graph::Edge> e;
  detail::add_path(e, 0, n);
  for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 2);
  return Graph(n, std::move(e));
}

/// Spine v_1..v_m (ids 0..m-1). Every v_r with r not in {i, j} gets a private
/// leaf; these take ids m, m+1, ... in increasing r. The leaf shared by v_i and
/// v_j is the last id, 2m-2. i and j are 1-based.
inline Graph build_merged_leaf_caterpillar(int m, int i, int j) {
  detail::require(m >= 3, "merged-leaf caterpillar: m must be >= 3");
  detail::require(1 <= i && i < j && j <= m, "merged-leaf caterpillar: need 1 <= i < j <= m");
  std::vector<Graph::Edge> e;
  detail::add_path(e, 0, m);
  int next = m;
  for (int r = 1; r <= m; ++r) {
    if (r == i || r == j) continue;
    e.emplace_back(r - 1, next++);
  }
  const int shared = next;
  e.emplace_back(i - 1, shared);
  e.emplace_back(j - 1, shared);
  return Graph(shared + 1, std::move(e));
}

/// Path 0..m-1 and an apex (id m) adjacent to all of it.
inline Graph build_fan(int m) {
  detail::require(m >= 2, "fan: m must be >= 2");
  std::vector<Graph::Edge> e;
  detail::add_path(e, 0, m);
  for (int v = 0; v < m; ++v) e.emplace_back(v, m);
  return Graph(m + 1, std::move(e));
}

/// Path v_1..v_m (ids 0..m-1); apex u (id m) joins the odd v_h, apex u_even
/// (id m+1) joins the even v_h. The result is bipartite.
inline Graph build_bipartite_double_fan(int m) {
  detail::require(m >= 2, "bipartite double fan: m must be >= 2");
  std::vector<Graph::Edge> e;
  detail::add_path(e, 0, m);
  for (int h = 1; h <= m; ++h) e.emplace_back(h - 1, h % 2 == 1 ? m : m + 1);
  return Graph(m + 2, std::move(e));
}

/// The two graphs of circumference exactly k used for the 2k-3 bound.
///
/// Both share the path v_1..v_{2k} (ids 0..2k-1) and the leaf l_{2k-3} on
/// v_{2k-3} (id 2k).
///   first:  leaf l_{k-1} on v_{k-1} (id 2k+1), chord v_1 -- v_k.
///   second: leaves l_1 on v_1 (id 2k+1) and l_k on v_k (id 2k+2),
///           chord v_{k-1} -- v_{2k-2}.
/// At k = 3, v_k = v_{2k-3}, so the second graph hangs two leaves on v_3.
inline std::pair<Graph, Graph> build_circumference_pair(int k) {
  detail::require(k >= 3, "circumference pair: k must be >= 3");
  auto v = [](int r) { return r - 1; };
  const int len = 2 * k;

  std::vector<Graph::Edge> base;
  detail::add_path(base, 0, len);
  base.emplace_back(v(2 * k - 3), len);

  auto e1 = base;
  e1.emplace_back(v(k - 1), len + 1);
  e1.emplace_back(v(1), v(k));

  auto e2 = base;
  e2.emplace_back(v(1), len + 1);
  e2.emplace_back(v(k), len + 2);
  e2.emplace_back(v(k - 1), v(2 * k - 2));

  return {Graph(len + 2, std::move(e1)), Graph(len + 3, std::move(e2))};
}

/// Clique on ids 0..n-4; the 1-based clique vertices i and j each carry a leaf
/// (ids n-3 and n-2); every other clique vertex joins the special vertex s
/// (id n-1).
inline Graph build_clique_two_leaves(int n, int i = 1, int j = 2) {
  detail::require(n >= 6, "clique with two leaves: n must be >= 6");
  const int q = n - 3;
  detail::require(1 <= i && i < j && j <= q, "clique with two leaves: need 1 <= i < j <= n-3");
  std::vector<Graph::Edge> e;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) e.emplace_back(a, b);
  e.emplace_back(i - 1, q);
  e.emplace_back(j - 1, q + 1);
  for (int c = 1; c <= q; ++c)
    if (c != i && c != j) e.emplace_back(c - 1, n - 1);
  return Graph(n, std::move(e));
}

/// p (0) with two branches p - v (1) - u (3) and p - v' (2) - u' (4).
inline Graph build_cant_go_back_fixture() {
  return Graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}});
}

/// Triangle p (0), v (1), v' (2); v additionally carries `leaves` leaves
/// followed by `others` further pendant neighbors.
inline Graph build_triangle_fan_fixture(int leaves, int others) {
  detail::require(leaves >= 0 && others >= 0, "triangle fan fixture: negative count");
  std::vector<Graph::Edge> e{{0, 1}, {0, 2}, {1, 2}};
  const int extra = leaves + others;
  for (int t = 0; t < extra; ++t) e.emplace_back(1, 3 + t);
  return Graph(3 + extra, std::move(e));
}

}  // namespace zmx
