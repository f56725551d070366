#pragma once

#include <variant>

#include "mltl/ast.hpp"
#include "mltl/semantics.hpp"

namespace mltl {

/// Three-valued progression outcome. Resolved verdicts are emitted only
/// when the residual is semantically equivalent to True/False under the
/// equivalence budget.
struct Verdict {
  enum class Tag { ResolvedTrue, ResolvedFalse, Residual } tag;
  FormulaPtr residual; // set for every tag; the raw progression output

  bool resolved_true() const { return tag == Tag::ResolvedTrue; }
  bool resolved_false() const { return tag == Tag::ResolvedFalse; }
  bool is_residual() const { return tag == Tag::Residual; }
};

/// One step of formula progression against a single state.
/// Release and Global step through the Until/Future dualities, so outputs
/// keep the literal nested-negation shapes of the definition.
FormulaPtr progress_step(const FormulaPtr &f, const State &s);

/// Folds progress_step over the trace; the empty trace returns f
/// unchanged.
FormulaPtr progress(const FormulaPtr &f, const Trace &t);

/// Progresses f over t and classifies the residual. For |t| >= complen(f)
/// exactly one constant equivalence must hold; a violation throws
/// DichotomyViolation (an implementation-bug signal, never expected).
Verdict classify(const FormulaPtr &f, const Trace &t,
                 const EquivBudget &budget = {});

/// Checks prog(f, t) = prog(prog(f, t^k), t_k) at structural equality.
/// Requires 1 <= k <= |t|.
bool check_decomposition(const FormulaPtr &f, const Trace &t, std::size_t k);

} // namespace mltl
