#pragma once

// Corpus specs name a family of test graphs in one token:
//
//   trees:n<=7  trees:n==5          all labeled trees
//   connected:n<=6  connected:n==6  all connected labeled graphs
//   squarepath:2..14                square paths with 2..14 vertices
//   paths:2..9                      paths with 2..9 vertices
//   file:<path>                     one graph file (id: the file stem)
//
// Suffixes for connected graphs: ":unique" keeps one graph per isomorphism
// class, ":circ<=K" keeps graphs whose circumference is at most K.
// Example: connected:n<=7:unique:circ<=3

#include <filesystem>
#include <functional>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "zmx/adversary.hpp"
#include "zmx/analysis.hpp"
#include "zmx/enumerate.hpp"
#include "zmx/generators.hpp"
#include "zmx/graph_io.hpp"

namespace zmx {

struct CorpusSpec {
  enum class Kind { Trees, Connected, SquarePaths, Paths, File };
  Kind kind = Kind::Trees;
  int lo = 1;
  int hi = 1;
  bool unique = false;
  std::optional<int> max_circumference;
  std::string path;
};

inline CorpusSpec parse_corpus(const std::string& text) {
  CorpusSpec s;
  auto fail = [&]() -> CorpusSpec { throw Error("bad corpus spec '" + text + "'"); };
  if (text.rfind("file:", 0) == 0) {
    s.kind = CorpusSpec::Kind::File;
    s.path = text.substr(5);
    if (s.path.empty()) return fail();
    return s;
  }
  static const std::regex sized(R"((trees|connected):n(<=|==)(\d+)((?::unique|:circ<=\d+)*))");
  static const std::regex ranged(R"((squarepath|paths):(\d+)\.\.(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, sized)) {
    s.kind = m[1] == "trees" ? CorpusSpec::Kind::Trees : CorpusSpec::Kind::Connected;
    s.hi = std::stoi(m[3]);
    s.lo = m[2] == "==" ? s.hi : 1;
    const std::string rest = m[4];
    if (!rest.empty() && s.kind == CorpusSpec::Kind::Trees) return fail();
    static const std::regex circ(R"(:circ<=(\d+))");
    for (std::sregex_iterator it(rest.begin(), rest.end(), circ), end; it != end; ++it)
      s.max_circumference = std::stoi((*it)[1]);
    s.unique = rest.find(":unique") != std::string::npos;
  } else if (std::regex_match(text, m, ranged)) {
    s.kind = m[1] == "squarepath" ? CorpusSpec::Kind::SquarePaths : CorpusSpec::Kind::Paths;
    s.lo = std::stoi(m[2]);
    s.hi = std::stoi(m[3]);
  } else {
    return fail();
  }
  if (s.lo < 1 || s.hi < s.lo) return fail();
  if (s.kind == CorpusSpec::Kind::Trees && s.hi > 10) throw Error("trees corpus: n <= 10");
  if (s.kind == CorpusSpec::Kind::Connected && s.hi > 7) throw Error("connected corpus: n <= 7");
  if (s.hi > 32) throw Error("corpus: n <= 32");
  return s;
}

/// Visits every graph of the corpus with a stable id, in a fixed order.
inline void for_each_corpus_graph(const CorpusSpec& s,
                                  const std::function<void(const NamedGraph&)>& visit) {
  switch (s.kind) {
    case CorpusSpec::Kind::File:
      visit({std::filesystem::path(s.path).stem().string(), load_graph(s.path)});
      return;
    case CorpusSpec::Kind::SquarePaths:
      for (int n = s.lo; n <= s.hi; ++n) visit({"squarepath-" + std::to_string(n), build_square_path(n)});
      return;
    case CorpusSpec::Kind::Paths:
      for (int n = s.lo; n <= s.hi; ++n) visit({"path-" + std::to_string(n), build_path(n)});
      return;
    case CorpusSpec::Kind::Trees:
      for (int n = s.lo; n <= s.hi; ++n) {
        int i = 0;
        for (auto& g : enumerate_trees(n))
          visit({"tree-n" + std::to_string(n) + "-" + std::to_string(i++), std::move(g)});
      }
      return;
    case CorpusSpec::Kind::Connected:
      for (int n = s.lo; n <= s.hi; ++n) {
        int i = 0;
        for_each_connected_graph(n, s.unique, [&](const Graph& g) {
          const int idx = i++;
          if (s.max_circumference && circumference(g) > *s.max_circumference) return;
          visit({"conn-n" + std::to_string(n) + "-" + std::to_string(idx), g});
        });
      }
      return;
  }
}

inline std::vector<NamedGraph> load_corpus(const std::string& spec) {
  std::vector<NamedGraph> out;
  for_each_corpus_graph(parse_corpus(spec), [&](const NamedGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace zmx
