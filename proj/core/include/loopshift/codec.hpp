#pragma once

#include <span>
#include <string>
#include <vector>

#include "loopshift/loopgraph.hpp"
#include "loopshift/spectral.hpp"

namespace loopshift {

// An injective one-block code between loop shifts, with magic-word
// metadata (offset I = 0). The loop_table lists every domain loop up to the
// construction budget together with its image label; decoding parses image
// text back into domain loops through this table.
struct BlockCode {
  Alphabet domain_alphabet;
  Alphabet image_alphabet;
  std::vector<Symbol> symbol_map;  // domain symbol -> image symbol
  std::vector<Symbol> magic;       // image word

  struct LoopEntry {
    std::vector<Symbol> domain_word;
    std::vector<Symbol> image_label;
  };
  std::vector<LoopEntry> loop_table;  // sorted by (length, image_label)
};

// The identity code of a concrete loop graph; its magic word is the label
// of the smallest loop.
BlockCode identity_code(const LoopGraph& g);

// Code of a materialized derived graph: domain alphabet is the fresh edge
// set, image symbols come from the projection onto the base alphabet.
BlockCode code_from_materialized(const MaterializedGraph& m,
                                 const Alphabet& image_alphabet,
                                 std::vector<Symbol> magic);

// outer o inner. Requires inner's image alphabet to be outer's domain
// alphabet; the composed magic word is inner's magic pushed through outer.
BlockCode compose(const BlockCode& outer, const BlockCode& inner);

bool is_bijective_renaming(const BlockCode& code);

std::vector<Symbol> encode(const BlockCode& code, std::span<const Symbol> word);

struct DecodeResult {
  long offset = 0;  // position of the first magic-word occurrence
  std::vector<Symbol> domain_word;
};

// Decodes the segment between the first and the last magic-word occurrence
// of an image word. Parsing considers every loop decomposition of the whole
// word (partial loops allowed at both ends) and demands that all of them
// agree on the window: disagreement raises AmbiguousParse (a defect for
// pipeline-emitted codes), an uncoverable position raises NotInImage.
DecodeResult decode_window(const BlockCode& code, std::span<const Symbol> word);

struct InjectivityOptions {
  long max_points = 1'000'000;
  int repeats_floor = 4;
};

struct InjectivityReport {
  long tested = 0;
  long passed = 0;
  long failed = 0;
  long skipped_no_magic = 0;
  bool truncated = false;  // enumeration hit max_points
  std::vector<std::string> failures;
  bool all_passed() const { return failed == 0 && !truncated; }
};

// Enumerates the base-aligned periodic points of the domain up to the given
// period (one representative per loop rotation), encodes them, and checks
// decode o encode = id on every point whose image contains the magic word.
InjectivityReport verify_injectivity_periodic(const BlockCode& code, int max_period,
                                              const InjectivityOptions& opts = {});

struct LoopPick {
  int length = 0;
  BigInt index;  // which of the f_length loops of that length
};

struct Trajectory {
  std::vector<LoopPick> loops;
  long total_length = 0;
};

struct SampleOptions {
  double mass_tolerance = 1e-6;
};

// Return-loop sampling under the maximal-entropy measure at the base
// vertex: a loop of length n is drawn with probability proportional to
// lambda^{-n}, uniformly among the f_n loops of that length. Deterministic
// for a fixed seed. Throws NotRecurrent when the loop-length mass deviates
// from 1 beyond the tolerance.
Trajectory sample_max_entropy(const Series& f, const LambdaEnclosure& lambda,
                              long steps, unsigned long seed,
                              const SampleOptions& opts = {});

struct ReturnTimeOptions {
  double mass_tolerance = 1e-6;
  double nonexponential_threshold = 0.9;
  int window = 8;
};

struct ReturnTimeTail {
  // T(n) = sum_{m>=n} f_m lambda^{-m} at both enclosure endpoints.
  std::vector<Rational> tail_at_lambda_lo;
  std::vector<Rational> tail_at_lambda_hi;
  double ratio_at_lambda_lo = 0.0;  // max T(n+1)/T(n) over the last window
  double ratio_at_lambda_hi = 0.0;
  double ratio = 0.0;  // max of the two
  int window_begin = 0;
  int window_end = 0;
  bool exponential = false;
};

// Exact induced-measure tails of the return time at the base vertex. With
// normalize the tails are divided by the total mass (the conditional
// return-time distribution), and the recurrence precondition is waived.
ReturnTimeTail return_time_tail(const Series& f, const LambdaEnclosure& lambda,
                                int n_max, bool normalize = false,
                                const ReturnTimeOptions& opts = {});

struct CodingTimeOptions {
  int window_cap = 512;
  double quantile_lo = 0.5;
  double quantile_hi = 0.9;
};

struct CodingTimeStats {
  std::vector<long> histogram;  // histogram[n] = #samples with n(x) = n
  long samples = 0;
  long censored = 0;
  long max_n = 0;
  double mean_n = 0.0;
  double tail_ratio = 0.0;  // geometric decay of the survival function
};

// Structural coding-time statistic: n(x) is the distance from coordinate 0
// to the nearest magic-word occurrence on each side of the image of a
// sampled trajectory (return-word aligned sampling of the maximal-entropy
// measure). Bijective renamings code with n(x) = 0.
CodingTimeStats coding_time_stats(const BlockCode& code, const Series& f_common,
                                  const LambdaEnclosure& lambda, long samples,
                                  unsigned long seed,
                                  const CodingTimeOptions& opts = {});

}  // namespace loopshift
