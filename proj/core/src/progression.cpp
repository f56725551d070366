#include "mltl/progression.hpp"

#include <string>

#include "mltl/errors.hpp"
#include "mltl/transforms.hpp"

namespace mltl {

namespace {

// Single-state progression; assumes intervals already checked.
FormulaPtr step(const FormulaPtr &f, const State &s) {
  switch (f->kind()) {
  case Kind::True:
  case Kind::False:
    return f;
  case Kind::Prop:
    return s.count(f->name()) > 0 ? make_true() : make_false();
  case Kind::Not:
    return make_not(step(f->left(), s));
  case Kind::And:
    return make_and(step(f->left(), s), step(f->right(), s));
  case Kind::Or:
    return make_or(step(f->left(), s), step(f->right(), s));
  case Kind::Until: {
    const auto [a, b] = f->interval();
    if (0 < a) {
      return make_until(f->left(), f->right(), Interval{a - 1, b - 1});
    }
    if (a < b) {
      return make_or(step(f->right(), s),
                     make_and(step(f->left(), s),
                              make_until(f->left(), f->right(),
                                         Interval{0, b - 1})));
    }
    return step(f->right(), s);
  }
  case Kind::Future: {
    const auto [a, b] = f->interval();
    if (0 < a) {
      return make_future(f->left(), Interval{a - 1, b - 1});
    }
    if (a < b) {
      return make_or(step(f->left(), s),
                     make_future(f->left(), Interval{0, b - 1}));
    }
    return step(f->left(), s);
  }
  case Kind::Release:
    return make_not(step(make_until(make_not(f->left()),
                                    make_not(f->right()), f->interval()),
                         s));
  case Kind::Global:
    return make_not(
        step(make_future(make_not(f->left()), f->interval()), s));
  }
  return f;
}

} // namespace

FormulaPtr progress_step(const FormulaPtr &f, const State &s) {
  if (!intervals_welldef(*f)) {
    throw IllFormedInterval("progress_step: ill-formed interval in formula");
  }
  return step(f, s);
}

FormulaPtr progress(const FormulaPtr &f, const Trace &t) {
  if (!intervals_welldef(*f)) {
    throw IllFormedInterval("progress: ill-formed interval in formula");
  }
  FormulaPtr cur = f;
  for (const State &s : t) {
    cur = step(cur, s);
  }
  return cur;
}

Verdict classify(const FormulaPtr &f, const Trace &t,
                 const EquivBudget &budget) {
  const FormulaPtr residual = progress(f, t);
  const bool equiv_true = semantic_equiv(*residual, *make_true(), budget);
  const bool equiv_false = semantic_equiv(*residual, *make_false(), budget);

  if (t.size() >= complen(*f)) {
    if (equiv_true == equiv_false) {
      throw DichotomyViolation(
          "classify: residual equivalent to neither/both constants at "
          "length >= complen");
    }
    return Verdict{equiv_true ? Verdict::Tag::ResolvedTrue
                              : Verdict::Tag::ResolvedFalse,
                   residual};
  }
  if (equiv_true) {
    return Verdict{Verdict::Tag::ResolvedTrue, residual};
  }
  if (equiv_false) {
    return Verdict{Verdict::Tag::ResolvedFalse, residual};
  }
  return Verdict{Verdict::Tag::Residual, residual};
}

bool check_decomposition(const FormulaPtr &f, const Trace &t, std::size_t k) {
  if (k < 1 || k > t.size()) {
    throw PreconditionViolated("check_decomposition: k must satisfy 1 <= k <= |t|");
  }
  const FormulaPtr whole = progress(f, t);
  const FormulaPtr split = progress(progress(f, prefix(t, k)), suffix(t, k));
  return equal(*whole, *split);
}

} // namespace mltl
