#include <doctest.h>

#include <map>
#include <sstream>

#include <json.hpp>

#include "mltl/benchgen.hpp"
#include "mltl/parser.hpp"
#include "mltl/progression.hpp"
#include "mltl/semantics.hpp"
#include "mltl/transforms.hpp"

#include "test_util.hpp"

using namespace mltl;

TEST_CASE("gen_formula is deterministic and well-formed") {
  const GenConfig cfg = testutil::small_config(101);
  for (std::uint64_t i = 0; i < 100; ++i) {
    SplitMix64 rng1(cfg.seed, i);
    SplitMix64 rng2(cfg.seed, i);
    const FormulaPtr a = gen_formula(cfg, rng1);
    const FormulaPtr b = gen_formula(cfg, rng2);
    CHECK(equal(*a, *b));
    CHECK(intervals_welldef(*a));
    CHECK(depth(*a) <= cfg.max_depth);
    for (const auto &g : subformulas(a)) {
      if (g->is_temporal()) {
        CHECK(g->interval().hi <= cfg.max_bound);
        CHECK(g->interval().lo <= g->interval().hi);
      }
      if (g->kind() == Kind::Prop) {
        CHECK(g->name().starts_with("p"));
      }
    }
  }

  GenConfig atom_cfg = cfg;
  atom_cfg.max_depth = 0;
  SplitMix64 rng(cfg.seed, 0);
  for (int i = 0; i < 20; ++i) {
    CHECK(gen_formula(atom_cfg, rng)->is_atom());
  }
}

TEST_CASE("constructor histogram covers all ten variants") {
  GenConfig cfg = testutil::small_config(103);
  cfg.max_depth = 3;
  std::map<Kind, int> histogram;
  for (std::uint64_t i = 0; i < 200; ++i) {
    SplitMix64 rng(cfg.seed, i);
    for (const auto &g : subformulas(gen_formula(cfg, rng))) {
      ++histogram[g->kind()];
    }
  }
  CHECK(histogram.size() == 10);
}

TEST_CASE("gen_labeled_case invariants") {
  GenConfig cfg = testutil::tiny_config(107);
  cfg.policy = TraceLenPolicy::AtComplen;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const BenchmarkRecord rec = gen_labeled_case(cfg, i);
    CHECK(rec.trace_len == rec.complen);
    CHECK(rec.trace.size() == rec.trace_len);
    CHECK(rec.complen == complen(*rec.formula));
    CHECK(rec.label == evaluate(rec.trace, *rec.formula));
  }

  cfg.policy = TraceLenPolicy::BelowComplen;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const BenchmarkRecord rec = gen_labeled_case(cfg, i);
    CHECK(rec.trace_len < rec.complen);
    CHECK(rec.label == evaluate(rec.trace, *rec.formula));
  }

  cfg.policy = TraceLenPolicy::AboveComplen;
  cfg.above_extra = 3;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const BenchmarkRecord rec = gen_labeled_case(cfg, i);
    CHECK(rec.trace_len == rec.complen + 3);
  }
}

TEST_CASE("record JSON shape") {
  GenConfig cfg = testutil::tiny_config(109);
  const BenchmarkRecord rec = gen_labeled_case(cfg, 0);
  const nlohmann::json j = nlohmann::json::parse(record_to_json(rec));

  REQUIRE(j.is_object());
  CHECK(j.size() == 6);
  CHECK(equal(*parse_formula(j["formula"].get<std::string>()), *rec.formula));
  CHECK(j["label"].get<bool>() == rec.label);
  CHECK(j["complen"].get<std::uint64_t>() == rec.complen);
  CHECK(j["trace_len"].get<std::uint64_t>() == rec.trace_len);
  CHECK(j["seed_path"].get<std::string>() == "109/0");
  REQUIRE(j["trace"].is_array());
  CHECK(j["trace"].size() == rec.trace_len);

  Trace parsed;
  for (const auto &state : j["trace"]) {
    State s;
    for (const auto &prop : state) {
      s.insert(prop.get<std::string>());
    }
    parsed.push_back(std::move(s));
  }
  CHECK(parsed == rec.trace);
}

TEST_CASE("write_benchmarks determinism across runs and thread counts") {
  GenConfig cfg = testutil::tiny_config(113);
  cfg.num_cases = 64;

  std::ostringstream a;
  std::ostringstream b;
  std::ostringstream c;
  write_benchmarks(cfg, a, 1);
  write_benchmarks(cfg, b, 1);
  write_benchmarks(cfg, c, 4);
  CHECK(a.str() == b.str());
  CHECK(a.str() == c.str());
  CHECK(a.str().back() == '\n');

  // every line re-validates
  std::istringstream in(a.str());
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    const nlohmann::json j = nlohmann::json::parse(line);
    const FormulaPtr f = parse_formula(j["formula"].get<std::string>());
    Trace t;
    for (const auto &state : j["trace"]) {
      State s;
      for (const auto &prop : state) {
        s.insert(prop.get<std::string>());
      }
      t.push_back(std::move(s));
    }
    CHECK(evaluate(t, *f) == j["label"].get<bool>());
    ++count;
  }
  CHECK(count == cfg.num_cases);
}
