#include <doctest.h>

#include "mltl/benchgen.hpp"
#include "mltl/parser.hpp"

#include "test_util.hpp"

using namespace mltl;
using testutil::p;
using testutil::q;
using testutil::trace_of;

TEST_CASE("parse_formula basics") {
  CHECK(equal(*parse_formula("G[0,2] p"), *make_global(p(), Interval{0, 2})));
  CHECK(equal(*parse_formula("true"), *make_true()));
  CHECK(equal(*parse_formula("false"), *make_false()));
  CHECK(equal(*parse_formula("!p"), *make_not(p())));
  CHECK(equal(*parse_formula("  F[1,4]   q  "),
              *make_future(q(), Interval{1, 4})));
  // lo > hi parses; well-definedness is a separate check
  const auto bad = parse_formula("F[5,3] true");
  CHECK_FALSE(intervals_welldef(*bad));
}

TEST_CASE("precedence and associativity") {
  CHECK(equal(*parse_formula("p U[1,3] q & r"),
              *make_and(make_until(p(), q(), Interval{1, 3}),
                        make_prop("r"))));
  CHECK(equal(*parse_formula("p & q | r"),
              *make_or(make_and(p(), q()), make_prop("r"))));
  CHECK(equal(*parse_formula("p | q | r"),
              *make_or(make_or(p(), q()), make_prop("r"))));
  // U/R right-associative
  CHECK(equal(*parse_formula("p U[0,1] q U[0,2] r"),
              *make_until(p(), make_until(q(), make_prop("r"), Interval{0, 2}),
                          Interval{0, 1})));
  // unary binds tighter than U
  CHECK(equal(*parse_formula("!p U[0,1] G[0,2] q"),
              *make_until(make_not(p()), make_global(q(), Interval{0, 2}),
                          Interval{0, 1})));
  CHECK(equal(*parse_formula("(p | q) & r"),
              *make_and(make_or(p(), q()), make_prop("r"))));
}

TEST_CASE("parse errors carry spans") {
  CHECK_THROWS_AS(parse_formula("!("), ParseError);
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_formula("G p"), ParseError);
  CHECK_THROWS_AS(parse_formula("G[1] p"), ParseError);
  CHECK_THROWS_AS(parse_formula("U[0,1] p"), ParseError);
  CHECK_THROWS_AS(parse_formula("p &"), ParseError);
  try {
    parse_formula("p & (q |");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.span().begin <= e.span().end);
  }
}

TEST_CASE("print_formula canonical forms") {
  CHECK(print_formula(*make_global(p(), Interval{0, 2})) == "(G[0,2] p)");
  CHECK(print_formula(*make_not(make_true())) == "(! true)");
  CHECK(print_formula(*make_until(p(), q(), Interval{0, 0})) ==
        "(p U[0,0] q)");
  CHECK(print_formula(*make_release(p(), q(), Interval{2, 7})) ==
        "(p R[2,7] q)");
  CHECK(print_formula(*make_and(p(), make_or(q(), p()))) ==
        "(p & (q | p))");
}

TEST_CASE("formula round-trip on random formulas") {
  const GenConfig cfg = testutil::small_config(71);
  for (std::uint64_t i = 0; i < 500; ++i) {
    SplitMix64 rng(cfg.seed, i);
    const FormulaPtr f = gen_formula(cfg, rng);
    CHECK(equal(*parse_formula(print_formula(*f)), *f));
  }
}

TEST_CASE("parse_trace") {
  CHECK(parse_trace("a\na,b\nb\na") ==
        trace_of({{"a"}, {"a", "b"}, {"b"}, {"a"}}));
  CHECK(parse_trace("p\np\n-") == trace_of({{"p"}, {"p"}, {}}));
  CHECK(parse_trace("").empty());
  CHECK(parse_trace("-\n-\n") == trace_of({{}, {}}));
  CHECK(parse_trace("a, b ,a\n") == trace_of({{"a", "b"}})); // dups collapse
  CHECK(parse_trace("x\r\ny\r\n") == trace_of({{"x"}, {"y"}})); // CRLF
  CHECK(parse_trace("a\n\nb") == trace_of({{"a"}, {}, {"b"}}));
  CHECK(parse_trace("2\n3\n4\n2,3") ==
        trace_of({{"2"}, {"3"}, {"4"}, {"2", "3"}}));

  CHECK_THROWS_AS(parse_trace("a,,b"), ParseError);
  CHECK_THROWS_AS(parse_trace("a;b"), ParseError);
}

TEST_CASE("trace round-trip") {
  const Trace t = trace_of({{"a"}, {}, {"a", "b"}, {"z9", "under_score"}});
  CHECK(parse_trace(print_trace(t)) == t);
  CHECK(print_trace({}).empty());
  CHECK(print_trace(trace_of({{}})) == "-\n");

  const GenConfig cfg = testutil::small_config(73);
  for (std::uint64_t i = 0; i < 200; ++i) {
    SplitMix64 rng(cfg.seed, i);
    const Trace rt = gen_trace(cfg, rng.below(9), rng);
    CHECK(parse_trace(print_trace(rt)) == rt);
  }
}
