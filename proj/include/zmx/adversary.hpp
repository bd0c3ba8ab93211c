#pragma once

#include <bitset>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "zmx/graph.hpp"
#include "zmx/model.hpp"

namespace zmx {

enum class VerdictKind { AllSucceed, Failure, InvariantViolation, Unknown };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::AllSucceed: return "ok";
    case VerdictKind::Failure: return "fail";
    case VerdictKind::InvariantViolation: return "invariant";
    case VerdictKind::Unknown: return "unknown";
  }
  return "?";
}

/// A failing adversary branch, replayable with run_scripted(g, s, start, script).
struct FailureWitness {
  Vertex start = 0;
  std::vector<int> script;
  Outcome outcome;
  std::string note;  ///< invariant message, empty for model failures
};

/// Per-transition check evaluated once for every explored state that moves.
/// `candidates` is the target class the adversary picks from. Returns an
/// error message when the invariant is broken.
using TransitionCheck = std::function<std::optional<std::string>(
    const Graph& g, Vertex start, const RunState& before, const MoveDecision& d,
    std::span<const Vertex> candidates)>;

struct VerifyOptions {
  long node_cap = 1'000'000;  ///< per start vertex
  TransitionCheck check;
  bool fail_fast = false;     ///< skip remaining starts after the first failure
  /// Restricts the start vertices; all starts when empty.
  std::function<bool(const Graph&, Vertex)> starts;
};

struct StartVerdict {
  Vertex start = 0;
  VerdictKind kind = VerdictKind::AllSucceed;
  long states = 0;
  int max_colors = 0;
  std::optional<FailureWitness> witness;
};

struct Verdict {
  VerdictKind overall = VerdictKind::AllSucceed;
  std::vector<StartVerdict> per_start;
  std::optional<FailureWitness> failure;  ///< first failing start
  long states = 0;
  int max_colors = 0;

  [[nodiscard]] bool ok() const { return overall == VerdictKind::AllSucceed; }
};

namespace detail {

/// Exhaustive exploration of the state graph reachable from one start vertex.
class StartExplorer {
 public:
  StartExplorer(const Graph& g, const Strategy& s, Vertex start, const VerifyOptions& opt)
      : g_(g), s_(s), start_(start), opt_(opt) {
    if (s.recoloring && s.palette > 8)
      throw Error("verifier: recoloring strategies need a palette of at most 8 colors");
  }

  StartVerdict run() {
    StartVerdict out;
    out.start = start_;
    RunState init = initial_state(g_, start_);
    auto [root, fresh] = intern(init.position, init.coloring);
    (void)fresh;
    std::vector<Frame> stack{{root, 0}};
    if (auto f = expand(root, stack)) return finish(out, std::move(*f));

    while (!stack.empty()) {
      Frame& top = stack.back();
      Node& node = nodes_[top.node];
      if (top.next < node.children.size()) {
        const std::size_t which = top.next++;
        const int child = node.children[which];
        Node& c = nodes_[child];
        if (c.mark == Mark::Gray) {
          return finish(out, witness_from_stack(stack, OutcomeKind::InfiniteLoop, c.position));
        }
        if (c.mark == Mark::Black) continue;
        stack.push_back({child, 0});
        if (auto f = expand(child, stack)) return finish(out, std::move(*f));
        if (static_cast<long>(nodes_.size()) > opt_.node_cap) {
          out.kind = VerdictKind::Unknown;
          out.states = static_cast<long>(nodes_.size());
          out.max_colors = max_colors_seen_;
          return out;
        }
        continue;
      }
      close(top.node);
      stack.pop_back();
    }

    const Node& r = nodes_[root];
    out.states = static_cast<long>(nodes_.size());
    if (r.gc != g_.all_vertices()) {
      return finish(out, incomplete_witness(root));
    }
    out.max_colors = s_.recoloring ? worst_union(root) : max_colors_seen_;
    return out;
  }

 private:
  enum class Mark : std::uint8_t { White, Gray, Black };

  struct Node {
    const std::string* key = nullptr;
    Vertex position = 0;
    std::vector<int> children;  ///< aligned with the candidate list
    std::uint32_t gc = 0;
    Color assign = 0;
    bool sink = false;
    Mark mark = Mark::White;
  };

  struct Frame {
    int node;
    std::size_t next;
  };

  std::pair<int, bool> intern(Vertex position, const Coloring& coloring) {
    auto [it, inserted] = index_.try_emplace(state_key(position, coloring),
                                             static_cast<int>(nodes_.size()));
    if (inserted) {
      Node n;
      n.key = &it->first;
      n.position = position;
      nodes_.push_back(std::move(n));
    }
    return {it->second, inserted};
  }

  Coloring coloring_of(const Node& n) const {
    return Coloring(n.key->begin() + 1, n.key->end());
  }

  /// Decides the node's move and creates its successors. Returns a failure
  /// witness if the node itself fails.
  std::optional<FailureWitness> expand(int idx, const std::vector<Frame>& stack) {
    nodes_[idx].mark = Mark::Gray;
    const Vertex pos = nodes_[idx].position;
    Coloring coloring = coloring_of(nodes_[idx]);
    const Environment env = observe(g_, pos, coloring);
    const auto d = s_.decide(env);
    if (!d) return witness_from_stack(stack, OutcomeKind::StrategyStuck, pos);
    if (d->stop) {
      if (pos != start_) return witness_from_stack(stack, OutcomeKind::StoppedWrongVertex, pos);
      nodes_[idx].sink = true;
      max_colors_seen_ = std::max(max_colors_seen_, colors_used(coloring));
      return std::nullopt;
    }
    if (!is_legal(env, *d, s_.palette, s_.recoloring))
      return witness_from_stack(stack, OutcomeKind::IllegalMove, pos);

    const auto cand = candidates(g_, pos, coloring, d->target);
    if (opt_.check) {
      RunState before{pos, coloring, 0, 0};
      if (auto msg = opt_.check(g_, start_, before, *d, cand)) {
        auto w = witness_from_stack(stack, OutcomeKind::IllegalMove, pos);
        w.note = *msg;
        invariant_ = true;
        return w;
      }
    }
    coloring[pos] = d->assign;
    max_colors_seen_ = std::max(max_colors_seen_, colors_used(coloring));
    std::vector<int> children;
    children.reserve(cand.size());
    for (Vertex w : cand) children.push_back(intern(w, coloring).first);
    nodes_[idx].children = std::move(children);
    nodes_[idx].assign = d->assign;
    return std::nullopt;
  }

  void close(int idx) {
    Node& n = nodes_[idx];
    std::uint32_t meet = n.children.empty() ? 0u : ~0u;
    for (int c : n.children) meet &= nodes_[c].gc;
    n.gc = Graph::bit(n.position) | meet;
    n.mark = Mark::Black;
  }

  std::vector<int> script_of(const std::vector<Frame>& stack) const {
    std::vector<int> script;
    for (std::size_t i = 0; i + 1 < stack.size(); ++i)
      script.push_back(static_cast<int>(stack[i].next) - 1);
    return script;
  }

  FailureWitness witness_from_stack(const std::vector<Frame>& stack, OutcomeKind kind,
                                    Vertex where) {
    FailureWitness w;
    w.start = start_;
    w.script = script_of(stack);
    // the cycle-closing move is the pending choice of the top frame
    if (kind == OutcomeKind::InfiniteLoop)
      w.script.push_back(static_cast<int>(stack.back().next) - 1);
    w.outcome.kind = kind;
    w.outcome.step = static_cast<long>(w.script.size());
    w.outcome.vertex = where;
    return w;
  }

  /// Follows, from the root, successors that all miss one fixed vertex until a
  /// Stop sink is reached; the resulting branch ends incomplete.
  FailureWitness incomplete_witness(int root) {
    const std::uint32_t missing = g_.all_vertices() & ~nodes_[root].gc;
    const std::uint32_t probe = missing & (~missing + 1);
    FailureWitness w;
    w.start = start_;
    int cur = root;
    while (!nodes_[cur].sink) {
      const Node& n = nodes_[cur];
      std::size_t i = 0;
      while (nodes_[n.children[i]].gc & probe) ++i;
      w.script.push_back(static_cast<int>(i));
      cur = n.children[i];
    }
    w.outcome.kind = OutcomeKind::StoppedIncomplete;
    w.outcome.step = static_cast<long>(w.script.size());
    w.outcome.vertex = start_;
    w.outcome.missing = missing;  // over all branches; the witness branch misses at least `probe`
    return w;
  }

  /// Largest number of distinct colors assigned along any branch, by a
  /// post-order pass over achievable color-set unions (palette <= 8).
  int worst_union(int root) {
    std::vector<std::bitset<256>> sets(nodes_.size());
    std::vector<char> done(nodes_.size(), 0);
    std::vector<std::pair<int, std::size_t>> st{{root, 0}};
    while (!st.empty()) {
      auto& [idx, next] = st.back();
      const Node& n = nodes_[idx];
      if (next < n.children.size()) {
        const int c = n.children[next++];
        if (!done[c]) st.push_back({c, 0});
        continue;
      }
      const unsigned own = n.assign == 0 ? 0u : 1u << (n.assign - 1);
      std::bitset<256> s;
      if (n.children.empty()) {
        s.set(0);
      } else {
        for (int c : n.children)
          for (unsigned m = 0; m < 256; ++m)
            if (sets[c][m]) s.set(m | own);
      }
      sets[idx] = s;
      done[idx] = 1;
      st.pop_back();
    }
    int best = 0;
    for (unsigned m = 0; m < 256; ++m)
      if (sets[root][m]) best = std::max(best, std::popcount(m));
    return best;
  }

  StartVerdict& finish(StartVerdict& out, FailureWitness w) {
    out.kind = invariant_ ? VerdictKind::InvariantViolation : VerdictKind::Failure;
    out.states = static_cast<long>(nodes_.size());
    out.max_colors = max_colors_seen_;
    out.witness = std::move(w);
    return out;
  }

  const Graph& g_;
  const Strategy& s_;
  Vertex start_;
  const VerifyOptions& opt_;
  std::unordered_map<std::string, int> index_;
  std::vector<Node> nodes_;
  int max_colors_seen_ = 0;
  bool invariant_ = false;
};

}  // namespace detail

inline StartVerdict verify_start(const Graph& g, const Strategy& s, Vertex start,
                                 const VerifyOptions& opt = {}) {
  return detail::StartExplorer(g, s, start, opt).run();
}

/// Exhaustive verification over every start vertex and every adversary
/// choice. Failure beats Unknown in the overall verdict.
inline Verdict verify_all(const Graph& g, const Strategy& s, const VerifyOptions& opt = {}) {
  Verdict v;
  for (Vertex start = 0; start < g.size(); ++start) {
    if (opt.starts && !opt.starts(g, start)) continue;
    StartVerdict r = verify_start(g, s, start, opt);
    v.states += r.states;
    v.max_colors = std::max(v.max_colors, r.max_colors);
    if (r.kind == VerdictKind::Failure || r.kind == VerdictKind::InvariantViolation) {
      if (!v.failure) {
        v.failure = r.witness;
        v.overall = r.kind;
      }
    } else if (r.kind == VerdictKind::Unknown && v.overall == VerdictKind::AllSucceed) {
      v.overall = VerdictKind::Unknown;
    }
    v.per_start.push_back(std::move(r));
    if (opt.fail_fast && v.failure) break;
  }
  return v;
}

struct ScanResult {
  long states = 0;
  bool complete = true;  ///< false when the state cap stopped the scan
  std::optional<std::string> violation;
};

/// Evaluates `check` on every transition reachable from `start`, including
/// states beyond failing branches (those are simply not expanded further).
inline ScanResult scan_transitions(const Graph& g, const Strategy& s, Vertex start,
                                   const TransitionCheck& check, long state_cap = 1'000'000) {
  ScanResult r;
  RunState init = initial_state(g, start);
  std::unordered_map<std::string, char> seen;
  std::vector<std::pair<Vertex, Coloring>> queue{{init.position, init.coloring}};
  seen.emplace(state_key(init.position, init.coloring), 1);
  for (std::size_t h = 0; h < queue.size(); ++h) {
    if (static_cast<long>(queue.size()) > state_cap) {
      r.complete = false;
      break;
    }
    const auto [pos, col] = queue[h];
    const Environment env = observe(g, pos, col);
    const auto d = s.decide(env);
    if (!d || d->stop || !is_legal(env, *d, s.palette, s.recoloring)) continue;
    const auto cand = candidates(g, pos, col, d->target);
    if (auto msg = check(g, start, RunState{pos, col, 0, 0}, *d, cand)) {
      r.violation = std::move(msg);
      break;
    }
    Coloring next = col;
    next[pos] = d->assign;
    for (Vertex w : cand)
      if (seen.emplace(state_key(w, next), 1).second) queue.emplace_back(w, next);
  }
  r.states = static_cast<long>(seen.size());
  return r;
}

/// Maximum over all starts and branches of the colors a strategy assigns.
/// Only meaningful when the exploration completes.
inline int worst_case_colors(const Graph& g, const Strategy& s, const VerifyOptions& opt = {}) {
  return verify_all(g, s, opt).max_colors;
}

struct NamedGraph {
  std::string id;
  Graph graph;
};

struct ReportRow {
  std::string graph_id;
  Vertex start = 0;
  VerdictKind kind = VerdictKind::AllSucceed;
  long states = 0;
  int max_colors = 0;
  std::optional<FailureWitness> witness;
};

inline std::vector<ReportRow> verify_family(const std::vector<NamedGraph>& family,
                                            const Strategy& s, const VerifyOptions& opt = {}) {
  std::vector<ReportRow> rows;
  for (const auto& [id, g] : family) {
    Verdict v = verify_all(g, s, opt);
    for (auto& r : v.per_start)
      rows.push_back({id, r.start, r.kind, r.states, r.max_colors, std::move(r.witness)});
  }
  return rows;
}

inline std::string verdict_label(const ReportRow& r) {
  if (r.kind == VerdictKind::Failure && r.witness) return to_string(r.witness->outcome.kind);
  return to_string(r.kind);
}

/// CSV: graph_id,start,verdict,states,max_colors
inline void write_report(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << "graph_id,start,verdict,states,max_colors\n";
  for (const auto& r : rows)
    os << r.graph_id << ',' << r.start << ',' << verdict_label(r) << ',' << r.states << ','
       << r.max_colors << '\n';
}

}  // namespace zmx
