#include "loopshift/codec.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace loopshift {

namespace {

std::vector<Symbol> map_word(const std::vector<Symbol>& map,
                             std::span<const Symbol> word) {
  std::vector<Symbol> out;
  out.reserve(word.size());
  for (Symbol s : word) {
    if (s < 0 || s >= static_cast<int>(map.size()))
      throw Error(ErrorCode::UnknownSymbol,
                  "symbol not in the domain alphabet: " + std::to_string(s));
    out.push_back(map[s]);
  }
  return out;
}

bool entry_less(const BlockCode::LoopEntry& a, const BlockCode::LoopEntry& b) {
  if (a.image_label.size() != b.image_label.size())
    return a.image_label.size() < b.image_label.size();
  return a.image_label < b.image_label;
}

}  // namespace

BlockCode identity_code(const LoopGraph& g) {
  if (g.loops.empty())
    throw Error(ErrorCode::Degenerate, "identity code of an empty loop graph");
  BlockCode code;
  code.domain_alphabet = g.alphabet;
  code.image_alphabet = g.alphabet;
  code.symbol_map.resize(g.alphabet.size());
  for (int s = 0; s < g.alphabet.size(); ++s) code.symbol_map[s] = s;
  for (const auto& l : g.loops) {
    BlockCode::LoopEntry e;
    e.domain_word = l.symbols;
    e.image_label = l.symbols;
    code.loop_table.push_back(std::move(e));
  }
  std::sort(code.loop_table.begin(), code.loop_table.end(), entry_less);
  code.magic = code.loop_table.front().domain_word;
  return code;
}

BlockCode code_from_materialized(const MaterializedGraph& m,
                                 const Alphabet& image_alphabet,
                                 std::vector<Symbol> magic) {
  BlockCode code;
  code.domain_alphabet = m.graph->alphabet;
  code.image_alphabet = image_alphabet;
  code.symbol_map = m.to_parent;
  code.magic = std::move(magic);
  for (const auto& l : m.graph->loops) {
    BlockCode::LoopEntry e;
    e.domain_word = l.symbols;
    e.image_label = map_word(code.symbol_map, l.symbols);
    code.loop_table.push_back(std::move(e));
  }
  std::sort(code.loop_table.begin(), code.loop_table.end(), entry_less);
  return code;
}

BlockCode compose(const BlockCode& outer, const BlockCode& inner) {
  if (inner.image_alphabet.size() != outer.domain_alphabet.size())
    throw Error(ErrorCode::InvalidArgument,
                "stage composition is not well-typed: alphabet sizes " +
                    std::to_string(inner.image_alphabet.size()) + " vs " +
                    std::to_string(outer.domain_alphabet.size()));
  BlockCode code;
  code.domain_alphabet = inner.domain_alphabet;
  code.image_alphabet = outer.image_alphabet;
  code.symbol_map.reserve(inner.symbol_map.size());
  for (Symbol s : inner.symbol_map) code.symbol_map.push_back(outer.symbol_map[s]);
  code.magic = map_word(outer.symbol_map, inner.magic);
  code.loop_table.reserve(inner.loop_table.size());
  for (const auto& e : inner.loop_table) {
    BlockCode::LoopEntry out;
    out.domain_word = e.domain_word;
    out.image_label = map_word(outer.symbol_map, e.image_label);
    code.loop_table.push_back(std::move(out));
  }
  std::sort(code.loop_table.begin(), code.loop_table.end(), entry_less);
  return code;
}

bool is_bijective_renaming(const BlockCode& code) {
  if (code.domain_alphabet.size() != code.image_alphabet.size()) return false;
  std::vector<char> hit(code.symbol_map.size(), 0);
  for (Symbol s : code.symbol_map) {
    if (s < 0 || s >= static_cast<int>(hit.size()) || hit[s]) return false;
    hit[s] = 1;
  }
  return true;
}

std::vector<Symbol> encode(const BlockCode& code, std::span<const Symbol> word) {
  return map_word(code.symbol_map, word);
}

// ---------------------------------------------------------------------------
// Decoding

namespace {

struct TrieNode {
  std::unordered_map<Symbol, int> child;
  int loop_id = -1;   // loop whose label ends exactly here
  int max_len = 0;    // longest label passing through this node
};

class Trie {
 public:
  Trie() : nodes_(1) {}

  void insert(std::span<const Symbol> label, int id) {
    int cur = 0;
    nodes_[cur].max_len = std::max(nodes_[cur].max_len, (int)label.size());
    for (Symbol s : label) {
      auto it = nodes_[cur].child.find(s);
      if (it == nodes_[cur].child.end()) {
        nodes_[cur].child.emplace(s, (int)nodes_.size());
        cur = (int)nodes_.size();
        nodes_.emplace_back();
      } else {
        cur = it->second;
      }
      nodes_[cur].max_len = std::max(nodes_[cur].max_len, (int)label.size());
    }
    nodes_[cur].loop_id = id;
  }

  const TrieNode& node(int i) const { return nodes_[i]; }
  int step(int node, Symbol s) const {
    auto it = nodes_[node].child.find(s);
    return it == nodes_[node].child.end() ? -1 : it->second;
  }

  // All loop ids in the subtree of node whose label length exceeds min_len.
  void collect_longer(int node, int min_len, std::vector<int>& out) const {
    const TrieNode& nd = nodes_[node];
    if (nd.max_len <= min_len) return;
    if (nd.loop_id >= 0) out.push_back(nd.loop_id);  // depth check by caller
    for (auto& [sym, ch] : nd.child) collect_longer(ch, min_len, out);
  }

 private:
  std::vector<TrieNode> nodes_;
};

struct Decoder {
  const BlockCode& code;
  Trie fwd_trie;   // over image labels
  Trie rev_trie;   // over reversed image labels
  int max_label = 0;

  explicit Decoder(const BlockCode& c) : code(c) {
    for (int i = 0; i < (int)c.loop_table.size(); ++i) {
      const auto& lab = c.loop_table[i].image_label;
      fwd_trie.insert(lab, i);
      std::vector<Symbol> rev(lab.rbegin(), lab.rend());
      rev_trie.insert(rev, i);
      max_label = std::max(max_label, (int)lab.size());
    }
  }
};

std::vector<long> find_occurrences(std::span<const Symbol> word,
                                   const std::vector<Symbol>& magic) {
  std::vector<long> occ;
  if (magic.empty() || word.size() < magic.size()) return occ;
  for (long p = 0; p + (long)magic.size() <= (long)word.size(); ++p) {
    if (std::equal(magic.begin(), magic.end(), word.begin() + p)) occ.push_back(p);
  }
  return occ;
}

}  // namespace

DecodeResult decode_window(const BlockCode& code, std::span<const Symbol> word) {
  const long n = (long)word.size();
  auto occ = find_occurrences(word, code.magic);
  if (occ.size() < 2)
    throw Error(ErrorCode::NoMagicWord,
                "image word does not contain two occurrences of the magic word");
  const long p_first = occ.front();
  const long p_last = occ.back();

  Decoder dec(code);

  // Base-point candidates. fwd[i]: position i can start a loop in some
  // parse of the word that is allowed to begin mid-loop; bwd[i]: from i the
  // parse can run off the right end.
  std::vector<char> fwd(n + 1, 0), exit_partial(n + 1, 0);
  fwd[0] = 1;
  // Free left ends: word[0..i) a proper suffix of some label.
  for (long i = 1; i <= std::min<long>(n, dec.max_label - 1); ++i) {
    int node = 0;
    bool ok = true;
    for (long t = i - 1; t >= 0; --t) {
      node = dec.rev_trie.step(node, word[t]);
      if (node < 0) {
        ok = false;
        break;
      }
    }
    if (ok && dec.rev_trie.node(node).max_len > i) fwd[i] = 1;
  }

  struct Edge {
    long start;
    int len;
    int loop;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> edges_from(n + 1);
  for (long i = 0; i < n; ++i) {
    if (!fwd[i]) continue;
    int node = 0;
    for (long t = i; t <= n; ++t) {
      if (t == n) {
        if (dec.fwd_trie.node(node).max_len > (int)(n - i)) exit_partial[i] = 1;
        break;
      }
      node = dec.fwd_trie.step(node, word[t]);
      if (node < 0) break;
      int id = dec.fwd_trie.node(node).loop_id;
      if (id >= 0) {
        int len = (int)(t - i + 1);
        edges_from[i].push_back((int)edges.size());
        edges.push_back({i, len, id});
        fwd[i + len] = 1;
      }
      if (t == n - 1 && dec.fwd_trie.node(node).max_len > (int)(n - i))
        exit_partial[i] = 1;
    }
  }

  std::vector<char> bwd(n + 1, 0);
  bwd[n] = 1;
  for (long i = n - 1; i >= 0; --i) {
    if (exit_partial[i]) bwd[i] = 1;
    if (!bwd[i])
      for (int ei : edges_from[i])
        if (bwd[i + edges[ei].len]) {
          bwd[i] = 1;
          break;
        }
  }

  // Symbol agreement across all live covers of the window.
  const long wlen = p_last - p_first;
  std::vector<Symbol> chosen(wlen, -1);
  std::vector<char> covered(wlen, 0);
  auto merge = [&](long pos, Symbol s) {
    long k = pos - p_first;
    if (k < 0 || k >= wlen) return;
    if (covered[k] && chosen[k] != s)
      throw Error(ErrorCode::AmbiguousParse,
                  "window admits two loop decompositions (defect for "
                  "pipeline-emitted codes)");
    covered[k] = 1;
    chosen[k] = s;
  };

  for (const Edge& e : edges) {
    if (!fwd[e.start] || !bwd[e.start + e.len]) continue;
    if (e.start + e.len <= p_first || e.start >= p_last) continue;
    const auto& dw = code.loop_table[e.loop].domain_word;
    long from = std::max<long>(e.start, p_first);
    long to = std::min<long>(e.start + e.len, p_last);
    for (long p = from; p < to; ++p) merge(p, dw[p - e.start]);
  }

  // Left partial covers reaching into the window.
  for (long i = std::max<long>(p_first + 1, 1);
       i <= std::min<long>(n, dec.max_label - 1); ++i) {
    if (!fwd[i] || !bwd[i]) continue;
    if (i <= p_first) continue;
    int node = 0;
    bool ok = true;
    for (long t = i - 1; t >= 0; --t) {
      node = dec.rev_trie.step(node, word[t]);
      if (node < 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<int> ids;
    dec.rev_trie.collect_longer(node, (int)i, ids);
    for (int id : ids) {
      const auto& entry = code.loop_table[id];
      int len = (int)entry.image_label.size();
      if (len <= i) continue;
      // suffix of length i covers [0, i)
      for (long p = p_first; p < std::min<long>(i, p_last); ++p)
        merge(p, entry.domain_word[len - i + p]);
    }
  }

  // Right partial covers starting inside the window.
  for (long i = p_last - 1; i >= 0 && i >= p_last - dec.max_label; --i) {
    if (!fwd[i] || !exit_partial[i]) continue;
    if (i + 1 <= p_last && n - i < dec.max_label) {
      int node = 0;
      bool ok = true;
      for (long t = i; t < n; ++t) {
        node = dec.fwd_trie.step(node, word[t]);
        if (node < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<int> ids;
      dec.fwd_trie.collect_longer(node, (int)(n - i), ids);
      for (int id : ids) {
        const auto& entry = code.loop_table[id];
        if ((int)entry.image_label.size() <= n - i) continue;
        for (long p = std::max<long>(i, p_first); p < p_last && p - i < n - i; ++p)
          merge(p, entry.domain_word[p - i]);
      }
    }
  }

  for (long k = 0; k < wlen; ++k)
    if (!covered[k])
      throw Error(ErrorCode::NotInImage,
                  "no loop decomposition covers position " +
                      std::to_string(p_first + k));

  DecodeResult res;
  res.offset = p_first;
  res.domain_word.assign(chosen.begin(), chosen.end());
  return res;
}

// ---------------------------------------------------------------------------
// Injectivity on periodic points

namespace {

bool is_primitive(const std::vector<Symbol>& w) {
  int n = (int)w.size();
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool rep = true;
    for (int i = d; i < n && rep; ++i) rep = w[i] == w[i - d];
    if (rep) return false;
  }
  return true;
}

}  // namespace

InjectivityReport verify_injectivity_periodic(const BlockCode& code, int max_period,
                                              const InjectivityOptions& opts) {
  InjectivityReport rep;
  int max_label = 0;
  for (const auto& e : code.loop_table)
    max_label = std::max(max_label, (int)e.image_label.size());

  std::vector<int> stack;
  std::vector<Symbol> dom_word, img_word;

  auto test_point = [&](void) {
    if (!is_primitive(dom_word)) return;
    if (rep.tested >= opts.max_points) {
      rep.truncated = true;
      return;
    }
    // does the periodic image contain the magic word?
    std::vector<Symbol> doubled(img_word);
    doubled.insert(doubled.end(), img_word.begin(), img_word.end());
    auto occ = find_occurrences(doubled, code.magic);
    bool seen = false;
    for (long p : occ)
      if (p < (long)img_word.size()) seen = true;
    if (!seen) {
      ++rep.skipped_no_magic;
      return;
    }
    ++rep.tested;
    int n = (int)img_word.size();
    int reps = std::max<int>(
        opts.repeats_floor,
        (int)((2 * code.magic.size() + 2 * max_label + 2 * n) / n) + 2);
    std::vector<Symbol> y;
    y.reserve((size_t)n * reps);
    for (int r = 0; r < reps; ++r) y.insert(y.end(), img_word.begin(), img_word.end());
    try {
      DecodeResult d = decode_window(code, y);
      bool ok = true;
      for (size_t k = 0; k < d.domain_word.size(); ++k) {
        if (d.domain_word[k] != dom_word[(d.offset + (long)k) % n]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        ++rep.passed;
      } else {
        ++rep.failed;
        if (rep.failures.size() < 32)
          rep.failures.push_back("decode mismatch on a period-" +
                                 std::to_string(n) + " point");
      }
    } catch (const Error& e) {
      ++rep.failed;
      if (rep.failures.size() < 32)
        rep.failures.push_back(std::string("decode error: ") + e.what());
    }
  };

  // DFS over loop sequences with total length <= max_period.
  auto extend = [&](auto&& self, int total) -> void {
    if (rep.truncated) return;
    if (total > 0) test_point();
    for (int i = 0; i < (int)code.loop_table.size(); ++i) {
      int len = (int)code.loop_table[i].image_label.size();
      if (total + len > max_period) continue;
      stack.push_back(i);
      dom_word.insert(dom_word.end(), code.loop_table[i].domain_word.begin(),
                      code.loop_table[i].domain_word.end());
      img_word.insert(img_word.end(), code.loop_table[i].image_label.begin(),
                      code.loop_table[i].image_label.end());
      self(self, total + len);
      img_word.resize(img_word.size() - len);
      dom_word.resize(dom_word.size() - len);
      stack.pop_back();
    }
  };
  extend(extend, 0);
  return rep;
}

// ---------------------------------------------------------------------------
// Maximal-entropy sampling

namespace {

class GmpRng {
 public:
  explicit GmpRng(unsigned long seed) {
    gmp_randinit_mt(state_);
    gmp_randseed_ui(state_, seed);
  }
  ~GmpRng() { gmp_randclear(state_); }
  GmpRng(const GmpRng&) = delete;
  GmpRng& operator=(const GmpRng&) = delete;

  BigInt below(const BigInt& bound) {
    BigInt r;
    mpz_urandomm(r.get_mpz_t(), state_, bound.get_mpz_t());
    return r;
  }

 private:
  gmp_randstate_t state_;
};

// Exact length distribution: weight of length n is count_n a^n d^(N-n)
// where x = a/d is the evaluation point 1/lambda.
struct LengthSampler {
  std::vector<int> lengths;
  std::vector<BigInt> counts;
  std::vector<BigInt> cumulative;  // cumulative weights
  BigInt total;
  BigInt denom;  // d^N

  LengthSampler(const std::vector<std::pair<int, BigInt>>& census, const Rational& x) {
    const BigInt& a = x.get_num();
    const BigInt& d = x.get_den();
    int N = 0;
    for (auto& [n, c] : census) N = std::max(N, n);
    std::vector<BigInt> apow(N + 1), dpow(N + 1);
    apow[0] = 1;
    dpow[0] = 1;
    for (int i = 1; i <= N; ++i) {
      apow[i] = apow[i - 1] * a;
      dpow[i] = dpow[i - 1] * d;
    }
    total = 0;
    for (auto& [n, c] : census) {
      if (c == 0) continue;
      BigInt w = c * apow[n] * dpow[N - n];
      lengths.push_back(n);
      counts.push_back(c);
      total += w;
      cumulative.push_back(total);
    }
    denom = dpow[N];
  }

  // index into lengths
  int draw(GmpRng& rng) const {
    BigInt r = const_cast<GmpRng&>(rng).below(total);
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    return (int)(it - cumulative.begin());
  }
};

bool mass_within(const BigInt& total, const BigInt& denom, double tolerance) {
  BigInt diff = total - denom;
  if (diff < 0) diff = -diff;
  Rational tol = rational_from_double(tolerance, 1L << 40);
  // diff/denom <= tol
  return diff * tol.get_den() <= tol.get_num() * denom;
}

}  // namespace

Trajectory sample_max_entropy(const Series& f, const LambdaEnclosure& lambda,
                              long steps, unsigned long seed,
                              const SampleOptions& opts) {
  Rational x = 2 / (lambda.lo + lambda.hi);
  x.canonicalize();
  std::vector<std::pair<int, BigInt>> census;
  for (int n = 1; n <= f.degree(); ++n)
    if (f.coeff(n) != 0) census.emplace_back(n, f.coeff(n));
  if (census.empty()) throw Error(ErrorCode::ZeroSeries, "cannot sample the zero series");
  LengthSampler sampler(census, x);
  if (!mass_within(sampler.total, sampler.denom, opts.mass_tolerance))
    throw Error(ErrorCode::NotRecurrent,
                "loop-length distribution mass deviates from 1 beyond tolerance");

  GmpRng rng(seed);
  Trajectory traj;
  while (traj.total_length < steps) {
    int k = sampler.draw(rng);
    LoopPick pick;
    pick.length = sampler.lengths[k];
    pick.index = rng.below(sampler.counts[k]);
    traj.total_length += pick.length;
    traj.loops.push_back(std::move(pick));
  }
  return traj;
}

// ---------------------------------------------------------------------------
// Return-time tails

ReturnTimeTail return_time_tail(const Series& f, const LambdaEnclosure& lambda,
                                int n_max, bool normalize,
                                const ReturnTimeOptions& opts) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 1");
  n_max = std::min(n_max, f.degree());

  auto tails_at = [&](const Rational& lam) {
    Rational x = 1 / lam;
    int deg = f.degree();
    // suffix sums, exact
    std::vector<Rational> xpow(deg + 1);
    xpow[0] = 1;
    for (int i = 1; i <= deg; ++i) xpow[i] = xpow[i - 1] * x;
    std::vector<Rational> t(deg + 2);
    for (int n = deg; n >= 1; --n) {
      t[n] = t[n + 1];
      if (f.coeff(n) != 0) t[n] += Rational(f.coeff(n)) * xpow[n];
    }
    return t;
  };

  auto t_lo = tails_at(lambda.lo);
  auto t_hi = tails_at(lambda.hi);

  if (!normalize) {
    Rational mass = (t_lo[1] + t_hi[1]) / 2;
    Rational diff = mass - 1;
    if (diff < 0) diff = -diff;
    Rational tol = rational_from_double(opts.mass_tolerance, 1L << 40);
    if (diff > tol)
      throw Error(ErrorCode::NotRecurrent,
                  "return-time mass deviates from 1; pass normalize for the "
                  "conditional distribution");
  } else {
    for (auto* t : {&t_lo, &t_hi}) {
      if ((*t)[1] == 0) continue;
      Rational total = (*t)[1];
      for (auto& v : *t) v /= total;
    }
  }

  ReturnTimeTail out;
  int w = std::min(opts.window, std::max(2, n_max / 5));
  out.window_begin = std::max(1, n_max - w);
  out.window_end = n_max;

  auto ratio_of = [&](const std::vector<Rational>& t) {
    double best = 0.0;
    for (int n = out.window_begin; n < out.window_end; ++n) {
      if (t[n] == 0) continue;
      best = std::max(best, to_double(t[n + 1] / t[n]));
    }
    return best;
  };
  out.ratio_at_lambda_lo = ratio_of(t_lo);
  out.ratio_at_lambda_hi = ratio_of(t_hi);
  out.ratio = std::max(out.ratio_at_lambda_lo, out.ratio_at_lambda_hi);
  out.exponential = out.ratio < opts.nonexponential_threshold;

  out.tail_at_lambda_lo.assign(t_lo.begin() + 1, t_lo.begin() + n_max + 1);
  out.tail_at_lambda_hi.assign(t_hi.begin() + 1, t_hi.begin() + n_max + 1);
  return out;
}

// ---------------------------------------------------------------------------
// Coding-time statistics

CodingTimeStats coding_time_stats(const BlockCode& code, const Series& f_common,
                                  const LambdaEnclosure& lambda, long samples,
                                  unsigned long seed, const CodingTimeOptions& opts) {
  CodingTimeStats stats;
  stats.samples = samples;
  stats.histogram.assign(opts.window_cap + 1, 0);

  if (is_bijective_renaming(code)) {
    // One-block with one-block inverse: the image symbol is pinned by the
    // coordinate itself.
    stats.histogram[0] = samples;
    return stats;
  }

  // Group loops by length; sampling weights follow the maximal-entropy
  // measure of the common shift.
  std::map<int, std::vector<int>> by_length;
  for (int i = 0; i < (int)code.loop_table.size(); ++i)
    by_length[(int)code.loop_table[i].image_label.size()].push_back(i);
  std::vector<std::pair<int, BigInt>> census;
  for (auto& [len, ids] : by_length) census.emplace_back(len, BigInt((long)ids.size()));
  (void)f_common;  // census of the loop table is the truncated f_common

  Rational x = 2 / (lambda.lo + lambda.hi);
  x.canonicalize();
  LengthSampler sampler(census, x);
  GmpRng rng(seed);

  const int margin = (int)code.magic.size() + 1;
  const long need = opts.window_cap + margin;

  std::vector<Symbol> left, right;  // left is reversed (grown away from 0)
  long total_n = 0;
  for (long s = 0; s < samples; ++s) {
    left.clear();
    right.clear();
    while ((long)right.size() < need) {
      int k = sampler.draw(rng);
      int len = sampler.lengths[k];
      long j = rng.below(sampler.counts[k]).get_si();
      const auto& lab = code.loop_table[by_length[len][j]].image_label;
      right.insert(right.end(), lab.begin(), lab.end());
    }
    while ((long)left.size() < need) {
      int k = sampler.draw(rng);
      int len = sampler.lengths[k];
      long j = rng.below(sampler.counts[k]).get_si();
      const auto& lab = code.loop_table[by_length[len][j]].image_label;
      left.insert(left.end(), lab.rbegin(), lab.rend());
    }

    // y[p] for p in [-L, R)
    auto at = [&](long p) -> Symbol {
      return p >= 0 ? right[p] : left[-p - 1];
    };
    long L = (long)left.size(), R = (long)right.size();
    long wlen = (long)code.magic.size();

    auto occurrence_at = [&](long p) {
      for (long t = 0; t < wlen; ++t)
        if (at(p + t) != code.magic[t]) return false;
      return true;
    };

    long n_minus = -1, n_plus = -1;
    for (long p = -wlen; p >= -L; --p) {
      if (occurrence_at(p)) {
        n_minus = -p;
        break;
      }
    }
    for (long p = 1; p + wlen <= R; ++p) {
      if (occurrence_at(p)) {
        n_plus = p + wlen - 1;
        break;
      }
    }
    long n;
    if (n_minus < 0 || n_plus < 0) {
      ++stats.censored;
      n = opts.window_cap;
    } else {
      n = std::min<long>(std::max(n_minus, n_plus), opts.window_cap);
    }
    ++stats.histogram[n];
    stats.max_n = std::max(stats.max_n, n);
    total_n += n;
  }
  stats.mean_n = samples > 0 ? (double)total_n / (double)samples : 0.0;

  // survival function and its geometric decay over the quantile window
  std::vector<long> survival(opts.window_cap + 2, 0);
  for (int k = opts.window_cap; k >= 0; --k)
    survival[k] = survival[k + 1] + stats.histogram[k];
  auto quantile_k = [&](double q) {
    long bound = (long)std::floor((double)samples * (1.0 - q));
    int k = 0;
    while (k <= opts.window_cap && survival[k] > bound) ++k;
    return k;
  };
  int k_lo = quantile_k(opts.quantile_lo);
  int k_hi = quantile_k(opts.quantile_hi);
  while (k_hi > k_lo && survival[k_hi] == 0) --k_hi;
  if (k_hi > k_lo && survival[k_lo] > 0 && survival[k_hi] > 0) {
    stats.tail_ratio = std::pow((double)survival[k_hi] / (double)survival[k_lo],
                                1.0 / (double)(k_hi - k_lo));
  }
  return stats;
}

}  // namespace loopshift
