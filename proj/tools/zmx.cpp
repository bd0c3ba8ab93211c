// zmx: command-line driver for the exploration simulator, verifier and
// strategy synthesis.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "zmx/zmx.hpp"

namespace {

using namespace zmx;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

Strategy resolve_strategy(const std::string& name) {
  if (name.rfind("table:", 0) == 0) {
    std::ifstream in(name.substr(6));
    if (!in) throw UsageError("cannot open table file '" + name.substr(6) + "'");
    return read_table(in).to_strategy(name);
  }
  return strategy_by_name(name);
}

std::vector<int> parse_script(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      throw UsageError("bad script entry '" + item + "'");
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string family;
  int n = 0, m = 0, i = 0, j = 0, k = 0, leaves = 0, others = 0, which = 1;
  std::string out;
  std::string dot;
};

Graph generate(const GenArgs& a) {
  const std::string& f = a.family;
  if (f == "path") return build_path(a.n);
  if (f == "cycle") return build_cycle(a.n);
  if (f == "complete") return build_complete(a.n);
  if (f == "star") return build_star(a.leaves);
  if (f == "squarepath") return build_square_path(a.n);
  if (f == "mergedleaf") return build_merged_leaf_caterpillar(a.m, a.i, a.j);
  if (f == "fan") return build_fan(a.m);
  if (f == "doublefan") return build_bipartite_double_fan(a.m);
  if (f == "circpair") {
    if (a.which != 1 && a.which != 2) throw UsageError("--which must be 1 or 2");
    auto [g1, g2] = build_circumference_pair(a.k);
    return a.which == 1 ? g1 : g2;
  }
  if (f == "cliqueleaves") return build_clique_two_leaves(a.n, a.i > 0 ? a.i : 1, a.j > 0 ? a.j : 2);
  if (f == "cantgoback") return build_cant_go_back_fixture();
  if (f == "trianglefan") return build_triangle_fan_fixture(a.leaves, a.others);
  throw UsageError("unknown family '" + f + "'");
}

/// Runs `f`, reporting library errors as usage errors.
template <class F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int cmd_gen(const GenArgs& a) {
  const Graph g = as_usage([&] { return generate(a); });
  if (a.out.empty()) {
    write_graph(std::cout, g);
  } else {
    save_graph(a.out, g);
  }
  if (!a.dot.empty()) {
    std::ofstream d(a.dot);
    write_dot(d, g);
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct RunArgs {
  std::string graph, strategy, script, adversary = "first", dot;
  int start = 0;
  long step_cap = -1;
};

int cmd_run(const RunArgs& a) {
  const Graph g = load_graph(a.graph);
  const Strategy s = as_usage([&] { return resolve_strategy(a.strategy); });
  if (a.start < 0 || a.start >= g.size()) throw UsageError("--start out of range");
  RunResult r;
  if (!a.script.empty()) {
    r = run_scripted(g, s, a.start, parse_script(a.script), a.step_cap);
  } else if (a.adversary == "first") {
    r = run_scripted(g, s, a.start, {}, a.step_cap);
  } else if (a.adversary.rfind("seeded:", 0) == 0) {
    unsigned long seed = 0;
    try {
      seed = std::stoul(a.adversary.substr(7));
    } catch (...) {
      throw UsageError("bad seed in '" + a.adversary + "'");
    }
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    r = run(g, s, a.start, [&](std::span<const Vertex> c) { return c[rng() % c.size()]; },
            a.step_cap);
  } else {
    throw UsageError("--adversary must be first or seeded:<seed>");
  }
  write_trace(std::cout, r.trace, r.outcome, a.graph, s.name);
  if (!a.dot.empty()) {
    std::ofstream d(a.dot);
    write_dot(d, g, r.final_state.coloring);
  }
  return r.outcome.success() ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string corpus, strategy, starts = "all", out, witness_dir;
  int max_colors = -1;
  bool checks = false;
  long node_cap = 1'000'000;
};

VerifyOptions verify_options(const VerifyArgs& a) {
  VerifyOptions vo;
  vo.node_cap = a.node_cap;
  if (a.checks) vo.check = check_for_strategy(a.strategy);
  if (a.starts == "leaves") {
    vo.starts = [](const Graph& g, Vertex v) { return g.degree(v) <= 1; };
  } else if (a.starts != "all") {
    throw UsageError("--starts must be all or leaves");
  }
  return vo;
}

std::vector<ReportRow> verify_corpus(const VerifyArgs& a) {
  const Strategy s = as_usage([&] { return resolve_strategy(a.strategy); });
  const VerifyOptions vo = verify_options(a);
  std::vector<ReportRow> rows;
  const CorpusSpec spec = as_usage([&] { return parse_corpus(a.corpus); });
  for_each_corpus_graph(spec, [&](const NamedGraph& ng) {
    auto part = verify_family({ng}, s, vo);
    if (!a.witness_dir.empty())
      for (const auto& r : part)
        if (r.witness) {
          const auto run = run_scripted(ng.graph, s, r.start, r.witness->script);
          std::ostringstream os;
          write_trace(os, run.trace, run.outcome, ng.id, s.name);
          os << "# script=";
          for (std::size_t i = 0; i < r.witness->script.size(); ++i)
            os << (i ? "," : "") << r.witness->script[i];
          os << '\n';
          if (!r.witness->note.empty()) os << "# invariant: " << r.witness->note << '\n';
          std::filesystem::create_directories(a.witness_dir);
          write_text_file(a.witness_dir + "/" + ng.id + "-s" + std::to_string(r.start) + ".trace",
                          os.str());
        }
    rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  });
  return rows;
}

bool rows_pass(const std::vector<ReportRow>& rows, int max_colors) {
  return std::all_of(rows.begin(), rows.end(), [&](const ReportRow& r) {
    return r.kind == VerdictKind::AllSucceed && (max_colors < 0 || r.max_colors <= max_colors);
  });
}

int cmd_verify(const VerifyArgs& a) {
  const auto rows = verify_corpus(a);
  if (a.out.empty()) {
    write_report(std::cout, rows);
  } else {
    std::ofstream out(a.out);
    write_report(out, rows);
  }
  return rows_pass(rows, a.max_colors) ? 0 : kExitFail;
}

int cmd_report(const VerifyArgs& a) {
  const auto rows = verify_corpus(a);
  std::set<std::string> graphs;
  long ok = 0, failed = 0, unknown = 0, states = 0;
  int colors = 0;
  for (const auto& r : rows) {
    graphs.insert(r.graph_id);
    states += r.states;
    colors = std::max(colors, r.max_colors);
    if (r.kind == VerdictKind::AllSucceed) {
      ++ok;
    } else if (r.kind == VerdictKind::Unknown) {
      ++unknown;
    } else {
      ++failed;
    }
  }
  std::cout << "corpus=" << a.corpus << " strategy=" << a.strategy << '\n'
            << "graphs=" << graphs.size() << " starts=" << rows.size() << " ok=" << ok
            << " failed=" << failed << " unknown=" << unknown << '\n'
            << "states=" << states << " max_colors=" << colors << '\n';
  const bool pass = rows_pass(rows, a.max_colors);
  std::cout << "result=" << (pass ? "pass" : "fail") << '\n';
  return pass ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------

struct SynthArgs {
  std::vector<std::string> graphs;
  int budget = 0;
  bool recoloring = false, prune = false;
  std::string expect, table_out;
  long node_cap = 200'000'000;
};

int cmd_synth(const SynthArgs& a) {
  std::vector<Graph> gs;
  for (const auto& p : a.graphs) gs.push_back(load_graph(p));
  SynthesisOptions o;
  o.recoloring = a.recoloring;
  o.lemma_pruning = a.prune;
  o.node_cap = a.node_cap;
  const SynthesisResult r = synthesize(gs, a.budget, o);
  std::cout << "result=" << to_string(r.kind) << " budget=" << a.budget << " nodes=" << r.nodes
            << '\n';

  bool roundtrip = true;
  if (r.kind == SynthesisKind::Realizable) {
    const Strategy s = parse_table(to_text(r.table)).to_strategy();
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const bool ok = verify_all(gs[i], s).ok();
      roundtrip = roundtrip && ok;
      std::cout << "verify " << a.graphs[i] << " " << (ok ? "ok" : "FAILED") << '\n';
    }
    if (a.table_out.empty()) {
      write_table(std::cout, r.table);
    } else {
      write_text_file(a.table_out, to_text(r.table));
    }
  }
  if (a.expect.empty()) return r.kind == SynthesisKind::Unknown || !roundtrip ? kExitFail : 0;
  const bool match = a.expect == to_string(r.kind);
  std::cout << "expect=" << a.expect << " " << (match && roundtrip ? "pass" : "fail") << '\n';
  return match && roundtrip ? 0 : kExitFail;
}

int cmd_circumference(const std::string& path) {
  std::cout << circumference(load_graph(path)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-memory graph exploration: simulate, verify, synthesize."};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write a graph from a named family");
  g->add_option("--family", gen.family,
                "path|cycle|complete|star|squarepath|mergedleaf|fan|doublefan|circpair|"
                "cliqueleaves|cantgoback|trianglefan")
      ->required();
  g->add_option("--n", gen.n, "vertex count");
  g->add_option("--m", gen.m, "spine length");
  g->add_option("--i", gen.i, "first marked spine vertex (1-based)");
  g->add_option("--j", gen.j, "second marked spine vertex (1-based)");
  g->add_option("--k", gen.k, "circumference for circpair");
  g->add_option("--which", gen.which, "graph 1 or 2 of circpair");
  g->add_option("--leaves", gen.leaves, "leaf count (star, trianglefan)");
  g->add_option("--others", gen.others, "extra pendant neighbors (trianglefan)");
  g->add_option("--out", gen.out, "output file (stdout if omitted)");
  g->add_option("--dot", gen.dot, "also write Graphviz text");

  RunArgs run_args;
  auto* r = app.add_subcommand("run", "Run one strategy and print its trace");
  r->add_option("--graph", run_args.graph)->required();
  r->add_option("--strategy", run_args.strategy, "registered name or table:<file>")->required();
  r->add_option("--start", run_args.start);
  auto* script_opt = r->add_option("--script", run_args.script, "comma-separated choice indices");
  r->add_option("--adversary", run_args.adversary, "first | seeded:<seed>")->excludes(script_opt);
  r->add_option("--step-cap", run_args.step_cap);
  r->add_option("--dot", run_args.dot, "write the final coloring as Graphviz text");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Verify a strategy on a corpus (CSV report)");
  VerifyArgs rep;
  auto* p = app.add_subcommand("report", "Summarize verification of a corpus");
  for (auto [cmd, args] : {std::pair{v, &ver}, std::pair{p, &rep}}) {
    cmd->add_option("--corpus", args->corpus, "e.g. trees:n<=7, connected:n==6, squarepath:2..14")
        ->required();
    cmd->add_option("--strategy", args->strategy)->required();
    cmd->add_option("--max-colors", args->max_colors);
    cmd->add_option("--starts", args->starts, "all | leaves");
    cmd->add_flag("--checks", args->checks, "assert the strategy's trace invariants");
    cmd->add_option("--node-cap", args->node_cap, "state nodes per start");
    cmd->add_option("--witness-dir", args->witness_dir, "write failure traces here");
  }
  v->add_option("--out", ver.out, "CSV file (stdout if omitted)");

  SynthArgs syn;
  auto* s = app.add_subcommand("synth", "Search for a strategy within a color budget");
  s->add_option("--graphs", syn.graphs)->required()->expected(1, -1);
  s->add_option("--budget", syn.budget)->required();
  s->add_flag("--recoloring", syn.recoloring);
  s->add_flag("--prune", syn.prune, "lemma pruning (valid only for uniform lower bounds)");
  s->add_option("--expect", syn.expect)->check(CLI::IsMember({"realizable", "unrealizable"}));
  s->add_option("--table-out", syn.table_out, "write the witness table here");
  s->add_option("--node-cap", syn.node_cap);

  std::string circ_graph;
  auto* c = app.add_subcommand("circumference", "Print the length of a longest cycle");
  c->add_option("--graph", circ_graph)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*r) return cmd_run(run_args);
    if (*v) return cmd_verify(ver);
    if (*p) return cmd_report(rep);
    if (*s) return cmd_synth(syn);
    if (*c) return cmd_circumference(circ_graph);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
