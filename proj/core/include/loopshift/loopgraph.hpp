#pragma once

#include <memory>
#include <string>
#include <vector>

#include "loopshift/series.hpp"

namespace loopshift {

using Symbol = int;

struct Alphabet {
  std::vector<std::string> names;
  int size() const { return static_cast<int>(names.size()); }
  const std::string& name(Symbol s) const;
};

// Concrete petal graph at a distinguished vertex: a finite set of first
// return loops, every edge carrying its own fresh symbol.
class LoopGraph {
 public:
  struct BaseLoop {
    int length = 0;
    std::vector<Symbol> symbols;  // this loop's edges, in order
  };

  Alphabet alphabet;
  std::vector<BaseLoop> loops;  // sorted by (length, symbols)

  // A graph with exactly f_n loops of each length n <= budget.
  static LoopGraph from_series(const Series& f, int budget,
                               const std::string& prefix = "e");

  Series census(int degree) const;
};

// A loop of a derived graph: its decomposition as a concatenation of base
// loops. The label is the concatenation of the base loops' symbol words and
// is recoverable from the word, so it is materialized on demand.
struct Loop {
  std::vector<int> word;  // base loop ids
  int length = 0;

  bool operator==(const Loop& other) const { return word == other.word; }
};

// Loop set of a graph obtained from a base graph by deletion steps,
// complete up to the length budget.
class LabeledLoopGraph {
 public:
  std::shared_ptr<const LoopGraph> base;
  std::vector<Loop> loops;  // sorted by (length, label)
  int budget = 0;
  std::vector<Loop> deleted_history;

  static LabeledLoopGraph over(std::shared_ptr<const LoopGraph> base, int budget);

  std::vector<Symbol> label(const Loop& loop) const;
  std::string label_string(const Loop& loop) const;
  Series census(int degree) const;
  // Index of the loop with this word, or -1.
  int find(const Loop& loop) const;
  // (length, label)-lexicographic order.
  bool loop_less(const Loop& a, const Loop& b) const;
};

struct DeleteOptions {
  long max_loops = 8'000'000;  // resource guard on the derived loop set
};

// One step of the deletion construction: remove l, and for every remaining
// loop c put in the loops c l^n for all n >= 0 within the budget. Throws
// LoopNotFound when l is not a loop of g.
LabeledLoopGraph delete_loop_step(const LabeledLoopGraph& g, const Loop& l,
                                  const DeleteOptions& opts = {});

// True iff a symbol of W's label occurs in a loop label only inside an
// initial segment of that label equal to W's label.
bool check_condition_star(const LabeledLoopGraph& g, const Loop& W);

// First-return loop counts at a vertex of a finite Markov graph, counted by
// dynamic programming over paths avoiding the vertex internally. Throws
// NotIrreducible when some state is not bi-reachable from the vertex.
Series first_return_series(const std::vector<std::vector<BigInt>>& adjacency,
                           int vertex, int degree);

// A derived graph re-presented as a concrete graph with fresh edge symbols,
// together with the one-block projection onto the base alphabet.
struct MaterializedGraph {
  std::shared_ptr<const LoopGraph> graph;
  std::vector<Symbol> to_parent;  // fresh symbol -> base alphabet symbol
};

MaterializedGraph materialize(const LabeledLoopGraph& g,
                              const std::string& prefix = "d");

}  // namespace loopshift
