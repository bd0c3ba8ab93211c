#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zmx {

using Vertex = int;

/// Raised for malformed inputs: bad generator parameters, disconnected edge
/// sets, unparsable files, out-of-range corpus bounds.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected connected graph on vertices 0..n-1.
///
/// Vertex ids exist for the harness and the adversary only; nothing in the
/// exploration interface hands them to a strategy.
class Graph {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  Graph() : Graph(1, {}) {}

  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw Error("graph needs at least one vertex");
    if (n > 32) throw Error("graph too large (n > 32)");
    for (auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw Error("edge endpoint out of range");
      if (u == v) throw Error("self-loop");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw Error("parallel edge");
    edges_ = std::move(edges);

    adj_.assign(n, {});
    masks_.assign(n, 0);
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
      masks_[u] |= bit(v);
      masks_[v] |= bit(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    if (!connected()) throw Error("graph is not connected");
  }

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  [[nodiscard]] std::uint32_t neighbor_mask(Vertex v) const { return masks_[v]; }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return (masks_[u] >> v) & 1u; }
  [[nodiscard]] std::uint32_t all_vertices() const {
    return n_ == 32 ? ~0u : (1u << n_) - 1u;
  }

  /// Relabels vertex v as perm[v].
  [[nodiscard]] Graph permuted(const std::vector<Vertex>& perm) const {
    std::vector<Edge> e;
    e.reserve(edges_.size());
    for (auto [u, v] : edges_) e.emplace_back(perm[u], perm[v]);
    return Graph(n_, std::move(e));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

  static constexpr std::uint32_t bit(Vertex v) { return 1u << v; }

 private:
  bool connected() const {
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
      std::uint32_t next = 0;
      for (Vertex v = 0; v < n_; ++v)
        if ((frontier >> v) & 1u) next |= masks_[v];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == all_vertices();
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint32_t> masks_;
};

}  // namespace zmx
