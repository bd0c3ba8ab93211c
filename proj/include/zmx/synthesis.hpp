#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "zmx/adversary.hpp"
#include "zmx/graph.hpp"
#include "zmx/model.hpp"

namespace zmx {

/// Explicit strategy: a finite map from environments to decisions.
/// Environments missing from the table make the strategy stuck.
class DecisionTable {
 public:
  DecisionTable() = default;
  DecisionTable(int palette, bool recoloring) : palette_(palette), recoloring_(recoloring) {}

  [[nodiscard]] int palette() const { return palette_; }
  [[nodiscard]] bool recoloring() const { return recoloring_; }
  [[nodiscard]] const std::map<Environment, MoveDecision>& entries() const { return entries_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }

  [[nodiscard]] std::optional<MoveDecision> lookup(const Environment& e) const {
    auto it = entries_.find(e);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  /// Adds an entry; throws if it is illegal for its environment.
  void set(const Environment& e, const MoveDecision& d) {
    if (!is_legal(e, d, palette_, recoloring_))
      throw Error("illegal table entry " + format_env(e) + " -> " + format_decision(d));
    entries_[e] = d;
  }
  void erase(const Environment& e) { entries_.erase(e); }

  [[nodiscard]] Strategy to_strategy(std::string name = "table") const {
    auto shared = std::make_shared<const std::map<Environment, MoveDecision>>(entries_);
    return {std::move(name), palette_, recoloring_,
            [shared](const Environment& e) -> std::optional<MoveDecision> {
              auto it = shared->find(e);
              if (it == shared->end()) return std::nullopt;
              return it->second;
            }};
  }

  friend bool operator==(const DecisionTable&, const DecisionTable&) = default;

 private:
  int palette_ = 0;
  bool recoloring_ = false;
  std::map<Environment, MoveDecision> entries_;
};

/// Table text:
///   # palette=<c> recoloring=<0|1>
///   env=(c0|c:k,...) -> assign=<c> goto=<d>
///   env=(c0|c:k,...) -> STOP
inline void write_table(std::ostream& os, const DecisionTable& t) {
  os << "# palette=" << t.palette() << " recoloring=" << (t.recoloring() ? 1 : 0) << '\n';
  for (const auto& [e, d] : t.entries()) os << "env=" << format_env(e) << " -> " << format_decision(d) << '\n';
}

inline DecisionTable read_table(std::istream& is) {
  std::string line;
  int palette = -1;
  bool recoloring = false;
  std::vector<std::pair<Environment, MoveDecision>> rows;
  int max_color = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string tok;
      while (hs >> tok) {
        if (tok.rfind("palette=", 0) == 0) palette = std::stoi(tok.substr(8));
        if (tok.rfind("recoloring=", 0) == 0) recoloring = tok.substr(11) == "1";
      }
      continue;
    }
    const auto arrow = line.find(" -> ");
    if (line.rfind("env=", 0) != 0 || arrow == std::string::npos)
      throw Error("bad table line '" + line + "'");
    const Environment env = parse_env(line.substr(4, arrow - 4));
    const std::string rhs = line.substr(arrow + 4);
    MoveDecision d;
    if (rhs == "STOP") {
      d = MoveDecision::Stop();
    } else {
      int a = -1, t = -1;
      if (std::sscanf(rhs.c_str(), "assign=%d goto=%d", &a, &t) != 2 || a < 0 || a > 255 || t < 0 ||
          t > 255)
        throw Error("bad table line '" + line + "'");
      d = MoveDecision::Move(a, t);
      max_color = std::max({max_color, a, t});
    }
    max_color = std::max(max_color, static_cast<int>(env.self()));
    rows.emplace_back(env, d);
  }
  DecisionTable t(palette >= 0 ? palette : max_color, recoloring);
  for (const auto& [e, d] : rows) t.set(e, d);
  return t;
}

inline std::string to_text(const DecisionTable& t) {
  std::ostringstream os;
  write_table(os, t);
  return os.str();
}

inline DecisionTable parse_table(const std::string& text) {
  std::istringstream is(text);
  return read_table(is);
}

enum class SynthesisKind { Realizable, Unrealizable, Unknown };

inline const char* to_string(SynthesisKind k) {
  switch (k) {
    case SynthesisKind::Realizable: return "realizable";
    case SynthesisKind::Unrealizable: return "unrealizable";
    case SynthesisKind::Unknown: return "unknown";
  }
  return "?";
}

struct SynthesisResult {
  SynthesisKind kind = SynthesisKind::Unknown;
  DecisionTable table;  ///< witness when Realizable
  long nodes = 0;       ///< search nodes visited
};

struct SynthesisOptions {
  bool recoloring = false;
  /// Prune decisions that no strategy exploring every graph can make (colored
  /// vertices must take an uncolored neighbor; no early retreat; no leaving a
  /// fresh vertex uncolored while its predecessor still has uncolored
  /// neighbors). Only valid when the graph set stands in for all graphs.
  bool lemma_pruning = false;
  long node_cap = 200'000'000;
};

namespace detail {

class Synthesizer {
 public:
  Synthesizer(const std::vector<Graph>& graphs, int budget, const SynthesisOptions& opt)
      : graphs_(graphs), budget_(budget), opt_(opt), table_(budget, opt.recoloring) {
    for (const auto& g : graphs)
      if (g.size() > 250) throw Error("synthesis: graph too large");
  }

  SynthesisResult run() {
    std::vector<Task> stack;
    for (int gi = static_cast<int>(graphs_.size()) - 1; gi >= 0; --gi)
      for (Vertex s = graphs_[gi].size() - 1; s >= 0; --s) {
        Node n{static_cast<std::uint8_t>(gi), static_cast<std::uint8_t>(s),
               static_cast<std::uint8_t>(s), -1, Graph::bit(s),
               std::string(graphs_[gi].size(), '\0')};
        stack.push_back({false, std::move(n)});
      }
    SynthesisResult r;
    const Status st = search(std::move(stack));
    r.nodes = nodes_;
    if (st == Status::Win) {
      r.kind = SynthesisKind::Realizable;
      r.table = table_;
    } else {
      r.kind = st == Status::Loss ? SynthesisKind::Unrealizable : SynthesisKind::Unknown;
    }
    return r;
  }

 private:
  enum class Status { Win, Loss, Cap };

  struct Node {
    std::uint8_t graph;
    std::uint8_t start;
    std::uint8_t pos;
    int from;  ///< previous vertex, -1 at the start
    std::uint32_t visited;
    std::string coloring;
  };

  struct Task {
    bool finish;  ///< true: leave the node; false: visit it
    Node node;
  };

  enum class OpKind : std::uint8_t { GrayAdd, GrayDel, BlackAdd, TableAdd };
  struct Op {
    OpKind kind;
    std::string key;
    Environment env;
  };

  static std::string path_key(const Node& n) {
    std::string k;
    k.reserve(n.coloring.size() + 3);
    k.push_back(static_cast<char>(n.graph));
    k.push_back(static_cast<char>(n.start));
    k.push_back(static_cast<char>(n.pos));
    k += n.coloring;
    return k;
  }

  std::string done_key(const Node& n) const {
    std::string k = path_key(n);
    for (int i = 0; i < 4; ++i) k.push_back(static_cast<char>((n.visited >> (8 * i)) & 0xff));
    if (opt_.lemma_pruning) k.push_back(static_cast<char>(n.from));
    return k;
  }

  Coloring coloring_of(const Node& n) const { return Coloring(n.coloring.begin(), n.coloring.end()); }

  /// True if `d` at node `n` contradicts the exploration lemmas.
  bool pruned(const Node& n, const Environment& env, const MoveDecision& d) const {
    const Graph& g = graphs_[n.graph];
    const auto& col = n.coloring;
    // a colored vertex with an uncolored neighbor moves to an uncolored one
    if (env.self() != 0 && env.has(0) && (d.stop || d.target != 0)) return true;
    if (n.from < 0) return false;
    const Vertex p = n.from;
    auto p_has_other_uncolored = [&] {
      for (Vertex w : g.neighbors(p))
        if (w != n.pos && col[w] == 0) return true;
      return false;
    };
    // the predecessor is the only colored neighbor: do not retreat yet
    if (env.colored() == 1 && col[p] != 0 && env.has(0) && (d.stop || d.target != 0) &&
        p_has_other_uncolored())
      return true;
    // a fresh vertex entered from a colored one must be colored now
    if (env.self() == 0 && col[p] != 0 && (d.stop || d.assign == 0) && p_has_other_uncolored())
      return true;
    return false;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      Op& op = trail_.back();
      switch (op.kind) {
        case OpKind::GrayAdd: gray_.erase(op.key); break;
        case OpKind::GrayDel: gray_.insert(op.key); break;
        case OpKind::BlackAdd: black_.erase(op.key); break;
        case OpKind::TableAdd: table_.erase(op.env); break;
      }
      trail_.pop_back();
    }
  }

  Status search(std::vector<Task> stack) {
    while (!stack.empty()) {
      Task task = std::move(stack.back());
      stack.pop_back();
      Node& n = task.node;

      if (task.finish) {
        std::string pk = path_key(n);
        gray_.erase(pk);
        trail_.push_back({OpKind::GrayDel, std::move(pk), {}});
        std::string dk = done_key(n);
        if (black_.insert(dk).second) trail_.push_back({OpKind::BlackAdd, std::move(dk), {}});
        continue;
      }

      if (++nodes_ > opt_.node_cap) return Status::Cap;
      std::string pk = path_key(n);
      if (gray_.count(pk)) return Status::Loss;
      if (black_.count(done_key(n))) continue;

      const Graph& g = graphs_[n.graph];
      const Coloring coloring = coloring_of(n);
      const Environment env = observe(g, n.pos, coloring);
      auto d = table_.lookup(env);
      if (!d) {
        // choice point: try every legal decision in canonical order
        const std::size_t mark = trail_.size();
        for (const MoveDecision& c : legal_decisions(env, budget_, opt_.recoloring)) {
          if (opt_.lemma_pruning && pruned(n, env, c)) continue;
          table_.set(env, c);
          trail_.push_back({OpKind::TableAdd, {}, env});
          std::vector<Task> next = stack;
          next.push_back(task);
          const Status st = search(std::move(next));
          if (st != Status::Loss) return st;
          undo_to(mark);
        }
        return Status::Loss;
      }
      if (opt_.lemma_pruning && pruned(n, env, *d)) return Status::Loss;

      if (d->stop) {
        if (n.pos != n.start || n.visited != g.all_vertices()) return Status::Loss;
        std::string dk = done_key(n);
        if (black_.insert(dk).second) trail_.push_back({OpKind::BlackAdd, std::move(dk), {}});
        continue;
      }
      gray_.insert(pk);
      trail_.push_back({OpKind::GrayAdd, pk, {}});
      const auto cand = candidates(g, n.pos, coloring, d->target);
      Node base = n;
      base.coloring[n.pos] = static_cast<char>(d->assign);
      base.from = n.pos;
      stack.push_back({true, n});
      for (auto it = cand.rbegin(); it != cand.rend(); ++it) {
        Node child = base;
        child.pos = static_cast<std::uint8_t>(*it);
        child.visited |= Graph::bit(*it);
        stack.push_back({false, std::move(child)});
      }
    }
    return Status::Win;
  }

  const std::vector<Graph>& graphs_;
  int budget_;
  const SynthesisOptions& opt_;
  DecisionTable table_;
  std::unordered_set<std::string> gray_;
  std::unordered_set<std::string> black_;
  std::vector<Op> trail_;
  long nodes_ = 0;
};

}  // namespace detail

/// Decides whether one memoryless strategy with colors 1..budget explores
/// every graph from every start against every adversary. All graphs and
/// starts share a single decision table.
inline SynthesisResult synthesize(const std::vector<Graph>& graphs, int budget,
                                  const SynthesisOptions& opt = {}) {
  if (budget < 0 || budget > 255) throw Error("synthesis: budget out of range");
  return detail::Synthesizer(graphs, budget, opt).run();
}

inline SynthesisResult refute_with_pruning(const std::vector<Graph>& graphs, int budget,
                                           bool lemma_pruning, SynthesisOptions opt = {}) {
  opt.lemma_pruning = lemma_pruning;
  return synthesize(graphs, budget, opt);
}

/// Every environment reachable from some start under some sequence of legal
/// decisions with colors 0..budget. Throws once more than `max_env` appear.
inline std::vector<Environment> reachable_environments(const Graph& g, int budget, bool recoloring,
                                                       std::size_t max_env) {
  std::set<Environment> envs;
  std::unordered_set<std::string> seen;
  std::vector<std::pair<Vertex, Coloring>> queue;
  for (Vertex s = 0; s < g.size(); ++s) {
    Coloring c(g.size(), 0);
    if (seen.insert(state_key(s, c)).second) queue.emplace_back(s, c);
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const auto [pos, col] = queue[h];
    const Environment env = observe(g, pos, col);
    envs.insert(env);
    if (envs.size() > max_env) throw Error("oracle: more than max_env reachable environments");
    for (const MoveDecision& d : legal_decisions(env, budget, recoloring)) {
      if (d.stop) continue;
      Coloring next = col;
      next[pos] = d.assign;
      for (Vertex w : candidates(g, pos, col, d.target))
        if (seen.insert(state_key(w, next)).second) queue.emplace_back(w, next);
    }
  }
  return {envs.begin(), envs.end()};
}

/// Brute force: tries every total table over the reachable environments and
/// verifies each one exhaustively.
inline SynthesisResult enumerate_tables_oracle(const Graph& g, int budget, std::size_t max_env,
                                               bool recoloring = false) {
  const auto envs = reachable_environments(g, budget, recoloring, max_env);
  std::vector<std::vector<MoveDecision>> options;
  for (const auto& e : envs) options.push_back(legal_decisions(e, budget, recoloring));

  std::vector<std::size_t> pick(envs.size(), 0);
  SynthesisResult r;
  r.kind = SynthesisKind::Unrealizable;
  for (;;) {
    DecisionTable t(budget, recoloring);
    for (std::size_t i = 0; i < envs.size(); ++i) t.set(envs[i], options[i][pick[i]]);
    ++r.nodes;
    VerifyOptions vo;
    vo.fail_fast = true;
    if (verify_all(g, t.to_strategy(), vo).ok()) {
      r.kind = SynthesisKind::Realizable;
      r.table = std::move(t);
      return r;
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return r;
}

}  // namespace zmx
