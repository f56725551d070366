#pragma once

#include <cstdint>

#include "mltl/ast.hpp"

namespace mltl {

/// Pushes negations down to atomic propositions by the operator duality
/// rewrites. No simplification beyond negation-pushing (no constant
/// folding). Throws IllFormedInterval on ill-formed input.
FormulaPtr convert_nnf(const FormulaPtr &f);

/// True iff every Not node's child is a Prop node.
bool is_nnf(const Formula &f);

/// Computation length: the trace length beyond which further states
/// cannot change the satisfaction verdict.
///   atoms -> 1; Not g -> complen g; And/Or -> max of children;
///   F/G [a,b] g -> b + complen g;
///   U/R [a,b] (g,h) -> b + max(complen g - 1, complen h).
std::uint64_t complen(const Formula &f);

} // namespace mltl
