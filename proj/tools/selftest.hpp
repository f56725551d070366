#pragma once

#include <cstdint>
#include <iosfwd>

namespace mltl::selftest {

struct Options {
  std::uint64_t cases = 500;
  std::uint64_t seed = 2024;
};

/// Runs the randomized theorem suites (progression decomposition,
/// prefix/suffix biconditional, resolution dichotomy, trace-extension
/// corollary, computation-length lemmas) and prints one pass/fail line per
/// suite to `out`. Returns the number of failing suites.
int run(const Options &opts, std::ostream &out);

} // namespace mltl::selftest
