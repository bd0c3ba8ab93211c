#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zmx/model.hpp"

namespace zmx {

using Decision = std::optional<MoveDecision>;

/// Palette bound used by strategies whose color count grows with the graph.
inline constexpr int kOpenPalette = 255;

// ---------------------------------------------------------------------------
// Trees: colors 1, 2, 3 by distance from the start.

inline Decision tree_exploration(const Environment& env) {
  int c = env.self();
  if (env.degree() == 0) return MoveDecision::Stop();
  if (c == 0) c = mod1(env.max_color() + 1, 3);
  if (env.has(0)) return MoveDecision::Move(c, 0);
  if (c == 1 && !env.has(3)) {
    if (env.self() == 0) return std::nullopt;  // would need color-and-stop
    return MoveDecision::Stop();
  }
  return MoveDecision::Move(c, mod1(c - 1, 3));
}

// ---------------------------------------------------------------------------
// General graphs: depth-first search with increasing colors.

inline Decision depth_first_search(const Environment& env) {
  if (env.degree() == 0) return MoveDecision::Stop();
  int c = env.self();
  if (c == 0 && !env.has(0)) {
    const int m = env.max_color();
    return MoveDecision::Move(m, m);
  }
  if (c == 0) c = env.max_color() + 1;
  if (c > kOpenPalette) return std::nullopt;
  if (env.has(0)) return MoveDecision::Move(c, 0);
  if (c > 1 && env.has(static_cast<Color>(c - 1))) return MoveDecision::Move(c, c - 1);
  if (env.self() == 0) return std::nullopt;
  return MoveDecision::Stop();
}

/// Smallest c >= 1 such that no neighbor has color c + 1.
inline int smallest_unproblematic_color(const Environment& env) {
  int c = 1;
  while (env.has(static_cast<Color>(c + 1))) ++c;
  return c;
}

/// Depth-first search tuned to graphs with exactly n vertices, saving one
/// color on the last two vertices.
inline Decision dfs_n_decide(int n, const Environment& env) {
  const Color big = static_cast<Color>(n - 2);
  const int c = env.self();
  if (c == 0 && env.count(big) == 1) {
    const int a = smallest_unproblematic_color(env);
    return MoveDecision::Move(a, env.has(0) ? 0 : big);
  }
  if (c == 0 && env.count(big) >= 2) {
    return MoveDecision::Move(smallest_unproblematic_color(env), env.min_color());
  }
  if (c > 1 && !env.has(0) && !env.has(static_cast<Color>(c - 1)) && env.degree() > 0) {
    return MoveDecision::Move(c, env.max_color());
  }
  return depth_first_search(env);
}

// ---------------------------------------------------------------------------
// Bounded circumference: cyclic colors 1..2k-1.

/// Maximum in the cyclic order on 1..2k-1 in which every value exceeds its
/// k-1 cyclic predecessors. Returns the unique value whose k-1 predecessors
/// cover all other (distinct) values; if there is none, the ordinary maximum.
/// Values of 0 are ignored; an empty input yields 0.
inline int cyclic_max(int k, const std::vector<int>& values) {
  const int m = 2 * k - 1;
  std::set<int> s;
  for (int v : values)
    if (v != 0) s.insert(v);
  if (s.empty()) return 0;
  for (int a : s) {
    bool covers = true;
    for (int b : s) {
      if (b == a) continue;
      const int back = ((a - b) % m + m) % m;  // steps from b forward to a
      if (back < 1 || back > k - 1) {
        covers = false;
        break;
      }
    }
    if (covers) return a;
  }
  return *s.rbegin();
}

inline Decision small_dfs_decide(int k, const Environment& env) {
  const int m = 2 * k - 1;
  if (env.degree() == 0) return MoveDecision::Stop();
  int c = env.self();
  if (c == 0) {
    std::vector<int> colors;
    for (auto [col, cnt] : env.counts()) colors.push_back(col);
    c = mod1(cyclic_max(k, colors) + 1, m);
  }
  if (env.has(0)) return MoveDecision::Move(c, 0);
  const int back = mod1(c - 1, m);
  if (env.has(static_cast<Color>(back))) return MoveDecision::Move(c, back);
  if (env.self() == 0) return std::nullopt;
  return MoveDecision::Stop();
}

// ---------------------------------------------------------------------------
// Square paths: colors 1..4.

namespace detail {

inline bool is_one_of(const std::vector<Color>& ms, std::initializer_list<std::vector<Color>> sets) {
  for (const auto& s : sets)
    if (ms == s) return true;
  return false;
}

inline int square_path_two(const std::vector<Color>& ms) {
  if (is_one_of(ms, {{1, 3}, {3, 3}, {3, 4}})) return 1;
  if (is_one_of(ms, {{1, 1}, {1, 2}, {1, 4}})) return 2;
  if (is_one_of(ms, {{2, 2}, {2, 3}, {2, 4}})) return 3;
  return 0;
}

inline int square_path_three(const std::vector<Color>& ms) {
  if (ms == std::vector<Color>{1, 2, 3}) return 4;
  if (is_one_of(ms, {{1, 1, 3}, {1, 3, 3}})) return 1;
  if (is_one_of(ms, {{1, 1, 2}, {1, 2, 2}, {1, 2, 4}, {1, 1, 4}, {1, 4, 4}})) return 2;
  if (is_one_of(ms, {{2, 2, 3}, {2, 2, 4}, {2, 3, 4}, {2, 4, 4}})) return 3;
  return 0;
}

}  // namespace detail

inline Decision square_path_exploration(const Environment& env) {
  const int c = env.self();
  if (c != 0) {
    if (env.has(0)) return MoveDecision::Move(c, 0);
    const int back = mod1(c - 1, 3);
    if (env.has(static_cast<Color>(back))) return MoveDecision::Move(c, back);
    return MoveDecision::Stop();
  }
  if (env.degree() == 0) return MoveDecision::Stop();

  const auto ms = env.colored_multiset();
  auto onward = [&](int a) -> Decision {
    if (env.has(0)) return MoveDecision::Move(a, 0);
    return MoveDecision::Move(a, mod1(a - 1, 3));
  };
  switch (ms.size()) {
    case 0:
      return MoveDecision::Move(1, 0);
    case 1:
      return MoveDecision::Move(mod1(ms[0] + 1, 3), ms[0]);
    case 2: {
      if (env.degree() == 4 && env.count(0) == 2 && ms == std::vector<Color>{1, 2})
        return MoveDecision::Move(2, 2);
      const int a = detail::square_path_two(ms);
      if (a == 0) return std::nullopt;
      return onward(a);
    }
    case 3: {
      const int a = detail::square_path_three(ms);
      if (a == 0) return std::nullopt;
      return onward(a);
    }
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Recoloring: breadth-first phases with labels 1..3, colors red/green and a
// deleted mark, packed into codes 0..7.

struct RecolorCode {
  static constexpr Color kUnvisited = 0;
  static constexpr Color kDeleted = 7;

  static constexpr Color encode(int label, bool green) {
    return static_cast<Color>(2 * (label - 1) + (green ? 1 : 0) + 1);
  }
  /// 1..3 for labeled codes, 0 for unvisited or deleted.
  static constexpr int label(Color code) {
    return code >= 1 && code <= 6 ? (code - 1) / 2 + 1 : 0;
  }
  static constexpr bool green(Color code) { return code >= 1 && code <= 6 && (code - 1) % 2 == 1; }
  static constexpr bool labeled(Color code) { return code >= 1 && code <= 6; }
};

namespace detail {

/// Codes present among neighbors carrying `label`, ascending.
inline std::vector<Color> codes_with_label(const Environment& env, int label) {
  std::vector<Color> out;
  for (auto [c, k] : env.counts())
    if (RecolorCode::labeled(c) && RecolorCode::label(c) == label) out.push_back(c);
  return out;
}

}  // namespace detail

inline Decision recolorer(const Environment& env) {
  using RC = RecolorCode;
  const Color self = env.self();
  if (self == RC::kDeleted) return std::nullopt;

  int label = RC::label(self);
  if (self == RC::kUnvisited) {
    std::set<int> present;
    for (auto [c, k] : env.counts())
      if (RC::labeled(c)) present.insert(RC::label(c));
    if (present.size() == 3) return std::nullopt;
    int base = 0;
    if (present.size() == 1) {
      base = *present.begin();
    } else if (present.size() == 2) {
      // the cyclically smaller of two consecutive labels
      const int a = *present.begin(), b = *present.rbegin();
      if (mod1(a + 1, 3) == b) {
        base = a;
      } else if (mod1(b + 1, 3) == a) {
        base = b;
      } else {
        return std::nullopt;
      }
    }
    label = mod1(base + 1, 3);
  }
  const int parent_label = mod1(label - 1, 3);
  const int child_label = mod1(label + 1, 3);
  const auto parents = detail::codes_with_label(env, parent_label);
  const auto children = detail::codes_with_label(env, child_label);
  const bool fresh = self == RC::kUnvisited;

  if (!env.has(RC::kUnvisited) && children.empty()) {
    if (parents.empty()) return MoveDecision::Stop();
    return MoveDecision::Move(RC::kDeleted, parents.front());
  }

  if (fresh) {
    bool red_parent = false;
    for (Color p : parents) red_parent |= !RC::green(p);
    const Color code = RC::encode(label, red_parent);
    if (!parents.empty()) {
      // a red parent first, so the move matches the color decision
      Color target = parents.front();
      for (Color p : parents)
        if (!RC::green(p)) {
          target = p;
          break;
        }
      return MoveDecision::Move(code, target);
    }
    return MoveDecision::Move(code, RC::kUnvisited);
  }

  if (env.has(RC::kUnvisited)) return MoveDecision::Move(self, RC::kUnvisited);
  const bool green = RC::green(self);
  for (Color ch : children)
    if (RC::green(ch) == green) return MoveDecision::Move(self, ch);
  // every non-deleted child now has the complementary color
  const Color flipped = RC::encode(label, !green);
  if (!parents.empty()) return MoveDecision::Move(flipped, parents.front());
  return MoveDecision::Move(flipped, children.front());
}

// ---------------------------------------------------------------------------
// Paths from a leaf with one color and recoloring.

inline Decision path_recolorer(const Environment& env) {
  const int c = env.self();
  const int colored = env.colored();
  if (c == 0 && env.has(0)) return MoveDecision::Move(1, 0);
  if (c == 1 && colored == 0) return MoveDecision::Stop();
  if (env.degree() == 0) return MoveDecision::Stop();
  if ((c == 1 || !env.has(0)) && env.has(1)) return MoveDecision::Move(0, 1);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Strategy objects and registry.

inline Strategy make_tree_exploration() { return {"tree", 3, false, tree_exploration}; }

inline Strategy make_depth_first_search() {
  return {"dfs", kOpenPalette, false, depth_first_search};
}

inline Strategy make_dfs_n(int n) {
  if (n < 5) throw Error("dfs_n: n must be >= 5");
  return {"dfs_n:" + std::to_string(n), kOpenPalette, false,
          [n](const Environment& e) { return dfs_n_decide(n, e); }};
}

inline Strategy make_small_dfs(int k) {
  if (k < 3) throw Error("smalldfs: k must be >= 3");
  return {"smalldfs:" + std::to_string(k), 2 * k - 1, false,
          [k](const Environment& e) { return small_dfs_decide(k, e); }};
}

inline Strategy make_square_path_exploration() {
  return {"squarepath", 4, false, square_path_exploration};
}

inline Strategy make_recolorer() { return {"recolorer", 7, true, recolorer}; }

inline Strategy make_path_recolorer() { return {"pathrecolorer", 1, true, path_recolorer}; }

/// Looks up `tree`, `dfs`, `dfs_n:<n>`, `smalldfs:<k>`, `squarepath`,
/// `recolorer`, `pathrecolorer`.
inline Strategy strategy_by_name(const std::string& name) {
  auto param = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      std::size_t used = 0;
      const std::string rest = name.substr(prefix.size());
      const int v = std::stoi(rest, &used);
      if (used != rest.size()) throw Error("");
      return v;
    } catch (...) {
      throw Error("bad strategy parameter in '" + name + "'");
    }
  };
  if (name == "tree") return make_tree_exploration();
  if (name == "dfs") return make_depth_first_search();
  if (name == "squarepath") return make_square_path_exploration();
  if (name == "recolorer") return make_recolorer();
  if (name == "pathrecolorer") return make_path_recolorer();
  if (auto n = param("dfs_n:")) return make_dfs_n(*n);
  if (auto k = param("smalldfs:")) return make_small_dfs(*k);
  throw Error("unknown strategy '" + name + "'");
}

inline std::vector<std::string> strategy_names() {
  return {"tree", "dfs", "dfs_n:<n>", "smalldfs:<k>", "squarepath", "recolorer", "pathrecolorer"};
}

}  // namespace zmx
