#include "loopshift/loopgraph.hpp"

#include <algorithm>
#include <deque>

namespace loopshift {

const std::string& Alphabet::name(Symbol s) const {
  if (s < 0 || s >= size())
    throw Error(ErrorCode::UnknownSymbol, "symbol out of range: " + std::to_string(s));
  return names[s];
}

LoopGraph LoopGraph::from_series(const Series& f, int budget,
                                 const std::string& prefix) {
  if (budget < 1 || budget > f.degree())
    throw Error(ErrorCode::InvalidArgument,
                "budget must satisfy 1 <= budget <= degree of f");
  LoopGraph g;
  Symbol next = 0;
  for (int n = 1; n <= budget; ++n) {
    const BigInt& count = f.coeff(n);
    if (count > static_cast<long>(1 << 28))
      throw Error(ErrorCode::BudgetExceeded,
                  "loop census too large to materialize at length " +
                      std::to_string(n));
    long c = count.get_si();
    for (long i = 0; i < c; ++i) {
      BaseLoop loop;
      loop.length = n;
      loop.symbols.reserve(n);
      for (int j = 0; j < n; ++j) {
        g.alphabet.names.push_back(prefix + std::to_string(next));
        loop.symbols.push_back(next++);
      }
      g.loops.push_back(std::move(loop));
    }
  }
  return g;
}

Series LoopGraph::census(int degree) const {
  Series s(degree);
  for (const auto& l : loops)
    if (l.length <= degree) s.set_coeff(l.length, s.coeff(l.length) + 1);
  return s;
}

LabeledLoopGraph LabeledLoopGraph::over(std::shared_ptr<const LoopGraph> base,
                                        int budget) {
  LabeledLoopGraph g;
  g.base = std::move(base);
  g.budget = budget;
  for (int i = 0; i < static_cast<int>(g.base->loops.size()); ++i) {
    if (g.base->loops[i].length > budget) continue;
    Loop l;
    l.word = {i};
    l.length = g.base->loops[i].length;
    g.loops.push_back(std::move(l));
  }
  std::sort(g.loops.begin(), g.loops.end(),
            [&g](const Loop& a, const Loop& b) { return g.loop_less(a, b); });
  return g;
}

std::vector<Symbol> LabeledLoopGraph::label(const Loop& loop) const {
  std::vector<Symbol> out;
  out.reserve(loop.length);
  for (int id : loop.word) {
    const auto& bl = base->loops[id];
    out.insert(out.end(), bl.symbols.begin(), bl.symbols.end());
  }
  return out;
}

std::string LabeledLoopGraph::label_string(const Loop& loop) const {
  std::string s;
  bool first = true;
  for (Symbol sym : label(loop)) {
    if (!first) s += ' ';
    s += base->alphabet.name(sym);
    first = false;
  }
  return s;
}

Series LabeledLoopGraph::census(int degree) const {
  Series s(degree);
  for (const auto& l : loops)
    if (l.length <= degree) s.set_coeff(l.length, s.coeff(l.length) + 1);
  return s;
}

int LabeledLoopGraph::find(const Loop& loop) const {
  for (int i = 0; i < static_cast<int>(loops.size()); ++i)
    if (loops[i].word == loop.word) return i;
  return -1;
}

bool LabeledLoopGraph::loop_less(const Loop& a, const Loop& b) const {
  if (a.length != b.length) return a.length < b.length;
  // Lexicographic on labels, streamed through the base words.
  size_t ia = 0, ja = 0, ib = 0, jb = 0;
  for (int k = 0; k < a.length; ++k) {
    Symbol sa = base->loops[a.word[ia]].symbols[ja];
    Symbol sb = base->loops[b.word[ib]].symbols[jb];
    if (sa != sb) return sa < sb;
    if (++ja == base->loops[a.word[ia]].symbols.size()) ja = 0, ++ia;
    if (++jb == base->loops[b.word[ib]].symbols.size()) jb = 0, ++ib;
  }
  return false;
}

LabeledLoopGraph delete_loop_step(const LabeledLoopGraph& g, const Loop& l,
                                  const DeleteOptions& opts) {
  int pos = g.find(l);
  if (pos < 0)
    throw Error(ErrorCode::LoopNotFound, "loop to delete is not in the graph");
  const Loop deleted = g.loops[pos];

  LabeledLoopGraph out;
  out.base = g.base;
  out.budget = g.budget;
  out.deleted_history = g.deleted_history;
  out.deleted_history.push_back(deleted);

  long produced = 0;
  for (int i = 0; i < static_cast<int>(g.loops.size()); ++i) {
    if (i == pos) continue;
    const Loop& c = g.loops[i];
    for (int n = 0; c.length + n * deleted.length <= g.budget; ++n) {
      Loop created;
      created.length = c.length + n * deleted.length;
      created.word.reserve(c.word.size() + n * deleted.word.size());
      created.word = c.word;
      for (int rep = 0; rep < n; ++rep)
        created.word.insert(created.word.end(), deleted.word.begin(),
                            deleted.word.end());
      out.loops.push_back(std::move(created));
      if (++produced > opts.max_loops)
        throw Error(ErrorCode::BudgetExceeded,
                    "derived loop set exceeds max_loops resource guard");
    }
  }
  std::sort(out.loops.begin(), out.loops.end(),
            [&out](const Loop& a, const Loop& b) { return out.loop_less(a, b); });
  return out;
}

bool check_condition_star(const LabeledLoopGraph& g, const Loop& W) {
  std::vector<Symbol> wlab = g.label(W);
  std::vector<char> in_w(g.base->alphabet.size(), 0);
  for (Symbol s : wlab) in_w[s] = 1;

  for (const auto& loop : g.loops) {
    std::vector<Symbol> lab = g.label(loop);
    bool prefix_is_w =
        lab.size() >= wlab.size() && std::equal(wlab.begin(), wlab.end(), lab.begin());
    for (size_t p = 0; p < lab.size(); ++p) {
      if (!in_w[lab[p]]) continue;
      if (!(prefix_is_w && p < wlab.size())) return false;
    }
  }
  return true;
}

Series first_return_series(const std::vector<std::vector<BigInt>>& adjacency,
                           int vertex, int degree) {
  int m = static_cast<int>(adjacency.size());
  if (m == 0 || vertex < 0 || vertex >= m)
    throw Error(ErrorCode::InvalidArgument, "bad adjacency matrix or vertex");
  for (const auto& row : adjacency)
    if (static_cast<int>(row.size()) != m)
      throw Error(ErrorCode::InvalidArgument, "adjacency matrix must be square");
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "degree must be >= 1");

  auto reachable = [&](bool forward) {
    std::vector<char> seen(m, 0);
    std::deque<int> queue{vertex};
    seen[vertex] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w = 0; w < m; ++w) {
        const BigInt& a = forward ? adjacency[u][w] : adjacency[w][u];
        if (a > 0 && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    return seen;
  };
  auto fwd = reachable(true);
  auto bwd = reachable(false);
  for (int w = 0; w < m; ++w)
    if (!fwd[w] || !bwd[w])
      throw Error(ErrorCode::NotIrreducible,
                  "state " + std::to_string(w) + " is not bi-reachable from the vertex");

  // paths[w] = number of paths w -> vertex of the current length that avoid
  // the vertex internally.
  Series f(degree);
  std::vector<BigInt> paths(m);
  for (int w = 0; w < m; ++w)
    if (w != vertex) paths[w] = adjacency[w][vertex];
  f.set_coeff(1, adjacency[vertex][vertex]);
  for (int n = 2; n <= degree; ++n) {
    BigInt fn = 0;
    for (int w = 0; w < m; ++w)
      if (w != vertex && adjacency[vertex][w] > 0) fn += adjacency[vertex][w] * paths[w];
    // advance paths by one step before reading f_{n} from it next round
    std::vector<BigInt> next(m);
    for (int w = 0; w < m; ++w) {
      if (w == vertex) continue;
      BigInt v = 0;
      for (int u = 0; u < m; ++u)
        if (u != vertex && adjacency[w][u] > 0) v += adjacency[w][u] * paths[u];
      next[w] = std::move(v);
    }
    f.set_coeff(n, fn);
    paths = std::move(next);
  }
  return f;
}

MaterializedGraph materialize(const LabeledLoopGraph& g, const std::string& prefix) {
  auto fresh = std::make_shared<LoopGraph>();
  MaterializedGraph out;
  Symbol next = 0;
  for (int i = 0; i < static_cast<int>(g.loops.size()); ++i) {
    const Loop& l = g.loops[i];
    LoopGraph::BaseLoop bl;
    bl.length = l.length;
    bl.symbols.reserve(l.length);
    std::vector<Symbol> lab = g.label(l);
    for (int j = 0; j < l.length; ++j) {
      fresh->alphabet.names.push_back(prefix + std::to_string(i) + "." +
                                      std::to_string(j));
      bl.symbols.push_back(next++);
      out.to_parent.push_back(lab[j]);
    }
    fresh->loops.push_back(std::move(bl));
  }
  out.graph = std::move(fresh);
  return out;
}

}  // namespace loopshift
