#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "mltl/ast.hpp"

namespace mltl {

enum class TraceLenPolicy { AtComplen, AboveComplen, BelowComplen };

struct GenConfig {
  std::uint64_t seed = 0;
  std::uint64_t max_depth = 3;
  std::uint64_t max_bound = 3;     // interval endpoints stay <= this
  std::uint64_t num_props = 2;     // propositions p0..p(num_props-1)
  std::uint64_t num_cases = 1;
  TraceLenPolicy policy = TraceLenPolicy::AtComplen;
  std::uint64_t above_extra = 2;   // AboveComplen: |t| = complen + extra
};

struct BenchmarkRecord {
  FormulaPtr formula;
  Trace trace;
  bool label = false;
  std::uint64_t complen = 0;
  std::uint64_t trace_len = 0;
  std::string seed_path; // "seed/index" generation provenance
};

/// Counter-based splittable RNG: the stream is a pure function of the
/// seeding material, so case generation is reproducible from
/// (seed, case index) alone, independent of thread scheduling.
class SplitMix64 {
public:
  SplitMix64(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  /// Uniform in [0, n); n must be > 0.
  std::uint64_t below(std::uint64_t n);
  bool coin() { return (next() & 1) != 0; }

private:
  std::uint64_t state_;
};

/// Random well-formed formula: intervals_welldef by construction, depth
/// <= cfg.max_depth, endpoints <= cfg.max_bound, props from
/// p0..p(num_props-1). Deterministic given the rng state.
FormulaPtr gen_formula(const GenConfig &cfg, SplitMix64 &rng);

/// Random trace of the given length over cfg's proposition pool.
Trace gen_trace(const GenConfig &cfg, std::size_t length, SplitMix64 &rng);

/// Draws a formula and trace per cfg.policy, labels by direct semantics,
/// and cross-checks against the progression verdict whenever
/// trace_len >= complen. A failed cross-check throws CrossCheckFailed.
BenchmarkRecord gen_labeled_case(const GenConfig &cfg, std::uint64_t index);

/// JSON object (single line, no trailing newline) with keys formula,
/// trace, label, complen, trace_len, seed_path.
std::string record_to_json(const BenchmarkRecord &rec);

/// Emits cfg.num_cases records as JSON lines, ordered by case index.
/// threads > 1 fans generation out; output bytes are identical for any
/// thread count.
void write_benchmarks(const GenConfig &cfg, std::ostream &out,
                      unsigned threads = 1);

} // namespace mltl
