#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "zmx/graph.hpp"

namespace zmx {

/// Vertex color; 0 means uncolored and is never counted as a color.
using Color = std::uint8_t;
using Coloring = std::vector<Color>;

/// Shifted modulo with range 1..m: ((n-1) mod m) + 1. Defined for every
/// integer n (non-positive n wrap around), m >= 1.
constexpr int mod1(int n, int m) {
  const int r = (n - 1) % m;
  return (r < 0 ? r + m : r) + 1;
}

/// What the agent sees: its own color and how many neighbors carry each color.
/// `counts` is sorted by color and holds strictly positive counts only.
class Environment {
 public:
  using Entry = std::pair<Color, int>;

  Environment() = default;

  Environment(Color self, std::span<const Color> neighbor_colors) : self_(self) {
    for (Color c : neighbor_colors) add(c);
  }

  Environment(Color self, std::initializer_list<Entry> counts) : self_(self) {
    for (auto [c, k] : counts)
      for (int i = 0; i < k; ++i) add(c);
  }

  [[nodiscard]] Color self() const { return self_; }
  [[nodiscard]] const std::vector<Entry>& counts() const { return counts_; }

  [[nodiscard]] int count(Color c) const {
    auto it = std::lower_bound(counts_.begin(), counts_.end(), c,
                               [](const Entry& e, Color x) { return e.first < x; });
    return it != counts_.end() && it->first == c ? it->second : 0;
  }
  [[nodiscard]] bool has(Color c) const { return count(c) > 0; }

  [[nodiscard]] int degree() const {
    int d = 0;
    for (auto [c, k] : counts_) d += k;
    return d;
  }

  /// Neighbors with a nonzero color.
  [[nodiscard]] int colored() const { return degree() - count(0); }

  /// Largest neighbor color, 0 when every neighbor is uncolored.
  [[nodiscard]] Color max_color() const { return counts_.empty() ? 0 : counts_.back().first; }

  /// Smallest neighbor color (0 included). Requires degree() > 0.
  [[nodiscard]] Color min_color() const { return counts_.front().first; }

  /// Nonzero neighbor colors with multiplicity, ascending.
  [[nodiscard]] std::vector<Color> colored_multiset() const {
    std::vector<Color> out;
    for (auto [c, k] : counts_)
      if (c != 0) out.insert(out.end(), k, c);
    return out;
  }

  friend bool operator==(const Environment&, const Environment&) = default;
  friend auto operator<=>(const Environment&, const Environment&) = default;

 private:
  void add(Color c) {
    auto it = std::lower_bound(counts_.begin(), counts_.end(), c,
                               [](const Entry& e, Color x) { return e.first < x; });
    if (it != counts_.end() && it->first == c) {
      ++it->second;
    } else {
      counts_.insert(it, {c, 1});
    }
  }

  Color self_ = 0;
  std::vector<Entry> counts_;
};

struct EnvironmentHash {
  std::size_t operator()(const Environment& e) const noexcept {
    std::size_t h = e.self() * 0x9e3779b97f4a7c15ull;
    for (auto [c, k] : e.counts()) h = (h ^ (c * 131u + k)) * 0x100000001b3ull;
    return h;
  }
};

/// Stop, or color the current vertex with `assign` and move to some neighbor
/// whose color is `target`.
struct MoveDecision {
  bool stop = true;
  Color assign = 0;
  Color target = 0;

  static constexpr MoveDecision Stop() { return {}; }
  static constexpr MoveDecision Move(int assign, int target) {
    return {false, static_cast<Color>(assign), static_cast<Color>(target)};
  }

  friend bool operator==(const MoveDecision&, const MoveDecision&) = default;
  friend auto operator<=>(const MoveDecision&, const MoveDecision&) = default;
};

/// A memoryless exploration strategy. `decide` must be a pure function of the
/// environment; std::nullopt means no rule applies (the strategy is stuck).
struct Strategy {
  std::string name;
  int palette = 0;          ///< largest color the strategy may assign
  bool recoloring = false;  ///< may overwrite nonzero colors
  std::function<std::optional<MoveDecision>(const Environment&)> decide;
};

/// Move legality for the model: the target class must be non-empty, assigned
/// colors stay within the palette, and without recoloring a colored vertex
/// keeps its color.
inline bool is_legal(const Environment& env, const MoveDecision& d, int palette, bool recoloring) {
  if (d.stop) return true;
  if (!env.has(d.target)) return false;
  if (d.assign > palette) return false;
  if (!recoloring && env.self() != 0 && d.assign != env.self()) return false;
  return true;
}

/// Every legal decision for `env` under a palette: moves ordered by assign,
/// then target color, with Stop last.
inline std::vector<MoveDecision> legal_decisions(const Environment& env, int palette,
                                                 bool recoloring) {
  std::vector<MoveDecision> out;
  std::vector<int> assigns;
  if (!recoloring && env.self() != 0) {
    assigns.push_back(env.self());
  } else {
    for (int a = 0; a <= palette; ++a) assigns.push_back(a);
  }
  for (int a : assigns)
    for (auto [c, k] : env.counts())
      if (c <= palette) out.push_back(MoveDecision::Move(a, c));
  out.push_back(MoveDecision::Stop());
  return out;
}

struct RunState {
  Vertex position = 0;
  Coloring coloring;
  std::uint32_t visited = 0;
  long steps = 0;
};

inline RunState initial_state(const Graph& g, Vertex start) {
  if (start < 0 || start >= g.size()) throw Error("start vertex out of range");
  return {start, Coloring(g.size(), 0), Graph::bit(start), 0};
}

inline Environment observe(const Graph& g, Vertex position, const Coloring& coloring) {
  std::vector<Color> nc;
  nc.reserve(g.degree(position));
  for (Vertex w : g.neighbors(position)) nc.push_back(coloring[w]);
  return Environment(coloring[position], nc);
}

inline Environment observe(const Graph& g, const RunState& s) {
  return observe(g, s.position, s.coloring);
}

/// Key of a global state for loop detection: position plus coloring.
inline std::string state_key(Vertex position, const Coloring& coloring) {
  std::string key;
  key.reserve(coloring.size() + 1);
  key.push_back(static_cast<char>(position));
  key.append(coloring.begin(), coloring.end());
  return key;
}

/// Neighbors of `v` with color `c`, ascending by id.
inline std::vector<Vertex> candidates(const Graph& g, Vertex v, const Coloring& coloring,
                                      Color c) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v))
    if (coloring[w] == c) out.push_back(w);
  return out;
}

using Chooser = std::function<Vertex(std::span<const Vertex>)>;

struct StepResult {
  enum class Kind { Moved, Stopped, Illegal, Stuck };
  Kind kind = Kind::Stopped;
  Environment env;
  MoveDecision decision;
  Vertex chosen = -1;
};

/// Executes one step in place. The strategy sees only the environment; the
/// target class is resolved against neighbor colors, which the current
/// vertex's own assignment cannot change.
inline StepResult step(const Graph& g, const Strategy& strategy, RunState& state,
                       const Chooser& choose) {
  StepResult r;
  r.env = observe(g, state);
  auto d = strategy.decide(r.env);
  if (!d) {
    r.kind = StepResult::Kind::Stuck;
    return r;
  }
  r.decision = *d;
  if (d->stop) {
    r.kind = StepResult::Kind::Stopped;
    return r;
  }
  if (!is_legal(r.env, *d, strategy.palette, strategy.recoloring)) {
    r.kind = StepResult::Kind::Illegal;
    return r;
  }
  auto cand = candidates(g, state.position, state.coloring, d->target);
  const Vertex next = choose(cand);
  if (std::find(cand.begin(), cand.end(), next) == cand.end())
    throw Error("adversary chose a vertex outside the target class");
  state.coloring[state.position] = d->assign;
  state.position = next;
  state.visited |= Graph::bit(next);
  ++state.steps;
  r.kind = StepResult::Kind::Moved;
  r.chosen = next;
  return r;
}

enum class OutcomeKind {
  Success,
  IllegalMove,
  StoppedWrongVertex,
  StoppedIncomplete,
  InfiniteLoop,
  StrategyStuck,
};

inline const char* to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Success: return "success";
    case OutcomeKind::IllegalMove: return "illegal-move";
    case OutcomeKind::StoppedWrongVertex: return "stopped-wrong-vertex";
    case OutcomeKind::StoppedIncomplete: return "stopped-incomplete";
    case OutcomeKind::InfiniteLoop: return "infinite-loop";
    case OutcomeKind::StrategyStuck: return "strategy-stuck";
  }
  return "?";
}

struct Outcome {
  OutcomeKind kind = OutcomeKind::Success;
  long step = 0;                ///< index of the deciding step
  Vertex vertex = -1;           ///< where the run ended
  std::uint32_t missing = 0;    ///< unvisited vertices for StoppedIncomplete

  [[nodiscard]] bool success() const { return kind == OutcomeKind::Success; }
};

struct TraceStep {
  Vertex position = 0;
  Environment env;
  MoveDecision decision;
  Vertex chosen = -1;
  StepResult::Kind kind = StepResult::Kind::Stopped;
};

struct Trace {
  Vertex start = 0;
  std::vector<TraceStep> steps;
};

struct RunResult {
  Trace trace;
  Outcome outcome;
  RunState final_state;
};

inline long default_step_cap(const Graph& g, int palette) {
  const double cap = 4.0 * g.size() * std::pow(palette + 1.0, g.size());
  return cap > 1e7 ? 10'000'000L : static_cast<long>(cap);
}

/// Runs a strategy to completion under an adversary callback. A repeated
/// (position, coloring) state or exceeding `step_cap` ends the run as
/// InfiniteLoop.
inline RunResult run(const Graph& g, const Strategy& strategy, Vertex start,
                     const Chooser& choose, long step_cap = -1) {
  if (step_cap < 0) step_cap = default_step_cap(g, strategy.palette);
  RunResult res;
  res.trace.start = start;
  RunState s = initial_state(g, start);
  std::unordered_set<std::string> seen{state_key(s.position, s.coloring)};

  for (long i = 0;; ++i) {
    const Vertex here = s.position;
    StepResult r = step(g, strategy, s, choose);
    res.trace.steps.push_back({here, r.env, r.decision, r.chosen, r.kind});
    Outcome& o = res.outcome;
    o.step = i;
    o.vertex = here;
    if (r.kind == StepResult::Kind::Stuck) {
      o.kind = OutcomeKind::StrategyStuck;
      break;
    }
    if (r.kind == StepResult::Kind::Illegal) {
      o.kind = OutcomeKind::IllegalMove;
      break;
    }
    if (r.kind == StepResult::Kind::Stopped) {
      if (here != start) {
        o.kind = OutcomeKind::StoppedWrongVertex;
      } else if (s.visited != g.all_vertices()) {
        o.kind = OutcomeKind::StoppedIncomplete;
        o.missing = g.all_vertices() & ~s.visited;
      } else {
        o.kind = OutcomeKind::Success;
      }
      break;
    }
    if (!seen.insert(state_key(s.position, s.coloring)).second || i + 1 >= step_cap) {
      o.kind = OutcomeKind::InfiniteLoop;
      o.vertex = s.position;
      break;
    }
  }
  res.final_state = std::move(s);
  return res;
}

/// Replays adversary choices: the i-th move takes candidate script[i] (an
/// index into the target class sorted by vertex id); once the script runs
/// out, the first candidate is taken.
inline RunResult run_scripted(const Graph& g, const Strategy& strategy, Vertex start,
                              const std::vector<int>& script, long step_cap = -1) {
  std::size_t next = 0;
  Chooser choose = [&](std::span<const Vertex> cand) -> Vertex {
    const int idx = next < script.size() ? script[next] : 0;
    ++next;
    if (idx < 0 || static_cast<std::size_t>(idx) >= cand.size())
      throw Error("script index " + std::to_string(idx) + " out of range at move " +
                  std::to_string(next - 1));
    return cand[idx];
  };
  return run(g, strategy, start, choose, step_cap);
}

inline int colors_used(const Coloring& coloring) {
  std::set<Color> s;
  for (Color c : coloring)
    if (c != 0) s.insert(c);
  return static_cast<int>(s.size());
}

/// Distinct nonzero colors assigned anywhere along the trace.
inline int colors_used(const Trace& t) {
  std::set<Color> s;
  for (const auto& st : t.steps)
    if (st.kind == StepResult::Kind::Moved && st.decision.assign != 0)
      s.insert(st.decision.assign);
  return static_cast<int>(s.size());
}

// Text forms shared by traces and decision tables:
//   environment  "(c0|c:k,c:k,...)"
//   decision     "assign=<c1> goto=<d>" or "STOP"

inline std::string format_env(const Environment& e) {
  std::ostringstream os;
  os << '(' << static_cast<int>(e.self()) << '|';
  bool first = true;
  for (auto [c, k] : e.counts()) {
    if (!first) os << ',';
    first = false;
    os << static_cast<int>(c) << ':' << k;
  }
  os << ')';
  return os.str();
}

inline Environment parse_env(const std::string& s) {
  auto fail = [&]() -> Environment { throw Error("bad environment '" + s + "'"); };
  if (s.size() < 3 || s.front() != '(' || s.back() != ')') return fail();
  const auto bar = s.find('|');
  if (bar == std::string::npos) return fail();
  int self = 0;
  try {
    self = std::stoi(s.substr(1, bar - 1));
  } catch (...) {
    return fail();
  }
  std::vector<Color> colors;
  std::string body = s.substr(bar + 1, s.size() - bar - 2);
  std::istringstream is(body);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) return fail();
    int c = 0, k = 0;
    try {
      c = std::stoi(item.substr(0, colon));
      k = std::stoi(item.substr(colon + 1));
    } catch (...) {
      return fail();
    }
    if (c < 0 || c > 255 || k <= 0) return fail();
    colors.insert(colors.end(), k, static_cast<Color>(c));
  }
  if (self < 0 || self > 255) return fail();
  return Environment(static_cast<Color>(self), colors);
}

inline std::string format_decision(const MoveDecision& d) {
  if (d.stop) return "STOP";
  return "assign=" + std::to_string(d.assign) + " goto=" + std::to_string(d.target);
}

/// Trace text:
///   graph=<file> start=<v> strategy=<name>
///   i: v=<id> env=(...) -> assign=<c1> goto=<d> chosen=<v'>
///   i: v=<id> env=(...) -> STOP
/// A step the model rejects ends in " ILLEGAL"; a stuck strategy prints
/// "-> STUCK". The closing comment line carries the outcome.
inline void write_trace(std::ostream& os, const Trace& t, const Outcome& o,
                        const std::string& graph_name, const std::string& strategy_name) {
  os << "graph=" << graph_name << " start=" << t.start << " strategy=" << strategy_name << '\n';
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    os << i << ": v=" << s.position << " env=" << format_env(s.env) << " -> ";
    switch (s.kind) {
      case StepResult::Kind::Stuck: os << "STUCK"; break;
      case StepResult::Kind::Stopped: os << "STOP"; break;
      case StepResult::Kind::Illegal: os << format_decision(s.decision) << " ILLEGAL"; break;
      case StepResult::Kind::Moved:
        os << format_decision(s.decision) << " chosen=" << s.chosen;
        break;
    }
    os << '\n';
  }
  os << "# outcome=" << to_string(o.kind) << " colors=" << colors_used(t) << '\n';
}

}  // namespace zmx
