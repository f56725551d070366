#include "selftest.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "mltl/benchgen.hpp"
#include "mltl/progression.hpp"
#include "mltl/semantics.hpp"
#include "mltl/transforms.hpp"

namespace mltl::selftest {

namespace {

// Stream offsets keep each suite's random draws independent.
constexpr std::uint64_t kStreamStride = 1u << 20;

struct Suite {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;

  void tally(bool ok) { ok ? ++passed : ++failed; }

  bool report(std::ostream &out, const char *name) const {
    out << (failed == 0 ? "PASS " : "FAIL ") << name << ": " << passed << "/"
        << (passed + failed) << "\n";
    return failed == 0;
  }
};

GenConfig small_config(std::uint64_t seed) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.max_depth = 3;
  cfg.max_bound = 3;
  cfg.num_props = 3;
  return cfg;
}

GenConfig tiny_config(std::uint64_t seed) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.max_depth = 2;
  cfg.max_bound = 2;
  cfg.num_props = 2;
  return cfg;
}

} // namespace

int run(const Options &opts, std::ostream &out) {
  int failures = 0;

  { // prog(f, t) = prog(prog(f, t^k), t_k)
    const GenConfig cfg = small_config(opts.seed);
    Suite suite;
    for (std::uint64_t i = 0; i < opts.cases; ++i) {
      SplitMix64 rng(opts.seed, i);
      const FormulaPtr f = gen_formula(cfg, rng);
      const Trace t = gen_trace(cfg, 1 + rng.below(6), rng);
      const std::size_t k = 1 + rng.below(t.size());
      suite.tally(check_decomposition(f, t, k));
    }
    if (!suite.report(out, "decomposition")) {
      ++failures;
    }
  }

  { // t |= f iff t_k |= prog(f, t^k), for 1 <= k < |t|
    const GenConfig cfg = small_config(opts.seed);
    Suite suite;
    for (std::uint64_t i = 0; i < opts.cases; ++i) {
      SplitMix64 rng(opts.seed, kStreamStride + i);
      const FormulaPtr f = gen_formula(cfg, rng);
      const Trace t = gen_trace(cfg, 2 + rng.below(5), rng);
      const std::size_t k = 1 + rng.below(t.size() - 1);
      const bool whole = evaluate(t, *f);
      const bool split = evaluate(suffix(t, k), *progress(f, prefix(t, k)));
      suite.tally(whole == split);
    }
    if (!suite.report(out, "prefix-suffix-biconditional")) {
      ++failures;
    }
  }

  { // |t| >= complen(f): residual resolves, and matches direct semantics
    const GenConfig cfg = tiny_config(opts.seed);
    Suite suite;
    for (std::uint64_t i = 0; i < opts.cases; ++i) {
      SplitMix64 rng(opts.seed, 2 * kStreamStride + i);
      const FormulaPtr f = gen_formula(cfg, rng);
      const std::size_t len = complen(*f) + rng.below(3);
      const Trace t = gen_trace(cfg, len, rng);
      bool ok = false;
      try {
        const Verdict v = classify(f, t);
        ok = !v.is_residual() && v.resolved_true() == evaluate(t, *f);
      } catch (const DichotomyViolation &) {
      }
      suite.tally(ok);
    }
    if (!suite.report(out, "resolution-dichotomy")) {
      ++failures;
    }
  }

  { // |t| >= complen(f): appending states never flips the verdict
    const GenConfig cfg = tiny_config(opts.seed);
    Suite suite;
    for (std::uint64_t i = 0; i < opts.cases; ++i) {
      SplitMix64 rng(opts.seed, 3 * kStreamStride + i);
      const FormulaPtr f = gen_formula(cfg, rng);
      Trace t = gen_trace(cfg, complen(*f) + rng.below(3), rng);
      const bool before = evaluate(t, *f);
      const Trace ext = gen_trace(cfg, rng.below(5), rng);
      t.insert(t.end(), ext.begin(), ext.end());
      suite.tally(before == evaluate(t, *f));
    }
    if (!suite.report(out, "extension-corollary")) {
      ++failures;
    }
  }

  { // computation-length lemmas
    const GenConfig cfg = tiny_config(opts.seed);
    Suite suite;
    for (std::uint64_t i = 0; i < opts.cases; ++i) {
      SplitMix64 rng(opts.seed, 4 * kStreamStride + i);
      const FormulaPtr f = gen_formula(cfg, rng);
      const std::uint64_t cl = complen(*f);
      const Trace t = gen_trace(cfg, 1 + rng.below(4), rng);
      bool ok = true;

      if (cl == 1) {
        ok = ok && complen(*progress_step(f, t[0])) == 1;
        const FormulaPtr stepped = progress_step(f, t[0]);
        ok = ok && (semantic_equiv(*stepped, *make_true()) ||
                    semantic_equiv(*stepped, *make_false()));
      }
      const std::uint64_t after = complen(*progress(f, t));
      ok = ok && (cl == 1 || after == 1 ||
                  (cl >= t.size() && after <= cl - t.size()));
      suite.tally(ok);
    }
    if (!suite.report(out, "complen-lemmas")) {
      ++failures;
    }
  }

  return failures;
}

} // namespace mltl::selftest
