#include "mltl/benchgen.hpp"

#include <mutex>
#include <ostream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mltl/errors.hpp"
#include "mltl/parser.hpp"
#include "mltl/progression.hpp"
#include "mltl/semantics.hpp"
#include "mltl/transforms.hpp"

namespace mltl {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace

SplitMix64::SplitMix64(std::uint64_t seed, std::uint64_t stream)
    : state_(mix(seed) ^ mix(stream * 0xd1342543de82ef95ULL + 1)) {}

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  // Modulo bias is negligible for the small ranges used here.
  return next() % n;
}

namespace {

std::string prop_name(std::uint64_t i) { return "p" + std::to_string(i); }

Interval gen_interval(const GenConfig &cfg, SplitMix64 &rng) {
  const std::uint64_t lo = rng.below(cfg.max_bound + 1);
  const std::uint64_t hi = lo + rng.below(cfg.max_bound - lo + 1);
  return Interval{lo, hi};
}

FormulaPtr gen_node(const GenConfig &cfg, std::uint64_t depth_left,
                    SplitMix64 &rng) {
  if (depth_left == 0) {
    switch (rng.below(4)) {
    case 0:
      return make_true();
    case 1:
      return make_false();
    default:
      return make_prop(prop_name(rng.below(cfg.num_props)));
    }
  }
  // Leaves stay reachable at every level so sizes vary.
  switch (rng.below(12)) {
  case 0:
    return make_true();
  case 1:
    return make_false();
  case 2:
  case 3:
    return make_prop(prop_name(rng.below(cfg.num_props)));
  case 4:
    return make_not(gen_node(cfg, depth_left - 1, rng));
  case 5:
    return make_and(gen_node(cfg, depth_left - 1, rng),
                    gen_node(cfg, depth_left - 1, rng));
  case 6:
    return make_or(gen_node(cfg, depth_left - 1, rng),
                   gen_node(cfg, depth_left - 1, rng));
  case 7:
    return make_future(gen_node(cfg, depth_left - 1, rng),
                       gen_interval(cfg, rng));
  case 8:
    return make_global(gen_node(cfg, depth_left - 1, rng),
                       gen_interval(cfg, rng));
  case 9:
  case 10:
    return make_until(gen_node(cfg, depth_left - 1, rng),
                      gen_node(cfg, depth_left - 1, rng),
                      gen_interval(cfg, rng));
  default:
    return make_release(gen_node(cfg, depth_left - 1, rng),
                        gen_node(cfg, depth_left - 1, rng),
                        gen_interval(cfg, rng));
  }
}

} // namespace

FormulaPtr gen_formula(const GenConfig &cfg, SplitMix64 &rng) {
  return gen_node(cfg, cfg.max_depth, rng);
}

Trace gen_trace(const GenConfig &cfg, std::size_t length, SplitMix64 &rng) {
  Trace t(length);
  for (State &s : t) {
    for (std::uint64_t p = 0; p < cfg.num_props; ++p) {
      if (rng.coin()) {
        s.insert(prop_name(p));
      }
    }
  }
  return t;
}

BenchmarkRecord gen_labeled_case(const GenConfig &cfg, std::uint64_t index) {
  SplitMix64 rng(cfg.seed, index);
  const FormulaPtr f = gen_formula(cfg, rng);
  const std::uint64_t cl = complen(*f);

  std::uint64_t len = cl;
  switch (cfg.policy) {
  case TraceLenPolicy::AtComplen:
    break;
  case TraceLenPolicy::AboveComplen:
    len = cl + cfg.above_extra;
    break;
  case TraceLenPolicy::BelowComplen:
    len = rng.below(cl); // complen >= 1, so 0..cl-1
    break;
  }

  BenchmarkRecord rec;
  rec.formula = f;
  rec.trace = gen_trace(cfg, len, rng);
  rec.label = evaluate(rec.trace, *f);
  rec.complen = cl;
  rec.trace_len = len;
  rec.seed_path = std::to_string(cfg.seed) + "/" + std::to_string(index);

  if (len >= cl) {
    // Independent second route: the progression dichotomy must agree with
    // the direct-semantics label.
    EquivBudget budget{std::max<std::uint64_t>(cfg.num_props, 1), cl + 1};
    try {
      const Verdict v = classify(f, rec.trace, budget);
      if (v.resolved_true() != rec.label || v.resolved_false() == rec.label) {
        throw CrossCheckFailed("gen_labeled_case: progression verdict "
                               "disagrees with direct semantics for case " +
                               rec.seed_path);
      }
    } catch (const DichotomyViolation &e) {
      throw CrossCheckFailed(std::string("gen_labeled_case: ") + e.what());
    }
  }
  return rec;
}

std::string record_to_json(const BenchmarkRecord &rec) {
  nlohmann::json j;
  j["formula"] = print_formula(*rec.formula);
  nlohmann::json trace = nlohmann::json::array();
  for (const State &s : rec.trace) {
    trace.push_back(std::vector<std::string>(s.begin(), s.end()));
  }
  j["trace"] = std::move(trace);
  j["label"] = rec.label;
  j["complen"] = rec.complen;
  j["trace_len"] = rec.trace_len;
  j["seed_path"] = rec.seed_path;
  return j.dump();
}

void write_benchmarks(const GenConfig &cfg, std::ostream &out,
                      unsigned threads) {
  std::vector<std::string> lines(cfg.num_cases);
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < cfg.num_cases; ++i) {
      lines[i] = record_to_json(gen_labeled_case(cfg, i));
    }
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t i = w; i < cfg.num_cases; i += threads) {
            lines[i] = record_to_json(gen_labeled_case(cfg, i));
          }
        } catch (...) {
          std::scoped_lock lock(failure_mu);
          if (!failure) {
            failure = std::current_exception();
          }
        }
      });
    }
    for (std::thread &t : pool) {
      t.join();
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
  }
  // Index-ordered assembly keeps output independent of scheduling.
  for (const std::string &line : lines) {
    out << line << '\n';
  }
}

} // namespace mltl
