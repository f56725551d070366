#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "mltl/ast.hpp"
#include "mltl/errors.hpp"

namespace mltl {

/// Caps for the enumeration-based equivalence decision.
struct EquivBudget {
  std::uint64_t max_alphabet = 4;
  std::uint64_t max_length = 12;
};

/// Suffix from index i onwards; over-drop yields the empty trace.
Trace suffix(const Trace &t, std::size_t i);

/// First k states; k beyond the end clamps to the whole trace.
Trace prefix(const Trace &t, std::size_t k);

/// Finite-trace satisfaction. Throws IllFormedInterval if f has a
/// temporal node with lo > hi.
bool evaluate(const Trace &t, const Formula &f);

/// Visits every trace of exactly `length` over `alphabet`, states ordered
/// by subset bitmask, lexicographic over positions (position 0 varies
/// slowest). Returns false if the visitor stopped early.
bool for_each_trace(const std::set<std::string> &alphabet, std::size_t length,
                    const std::function<bool(const Trace &)> &visit);

/// Materialized form of for_each_trace; guarded by the budget.
std::vector<Trace> enumerate_traces(const std::set<std::string> &alphabet,
                                    std::size_t length,
                                    const EquivBudget &budget = {});

/// Decides semantic equivalence by exhaustive enumeration of traces over
/// alphabet(f) ∪ alphabet(g) ∪ extra_alphabet, lengths 0 through
/// max(complen(f), complen(g)). Throws BudgetExceeded when the alphabet,
/// the length bound, or the estimated trace count is out of budget.
bool semantic_equiv(const Formula &f, const Formula &g,
                    const EquivBudget &budget = {},
                    const std::set<std::string> &extra_alphabet = {});

/// Like semantic_equiv but returns a distinguishing trace on
/// inequivalence, nullopt when equivalent.
std::optional<Trace> equiv_witness(const Formula &f, const Formula &g,
                                   const EquivBudget &budget = {},
                                   const std::set<std::string> &extra_alphabet = {});

} // namespace mltl
