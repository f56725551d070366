#include "mltl/transforms.hpp"

#include <algorithm>

#include "mltl/errors.hpp"

namespace mltl {

namespace {

// NNF of Not(g), dispatching on g's constructor.
FormulaPtr nnf_negated(const FormulaPtr &g);

FormulaPtr nnf(const FormulaPtr &f) {
  switch (f->kind()) {
  case Kind::True:
  case Kind::False:
  case Kind::Prop:
    return f;
  case Kind::Not:
    return nnf_negated(f->left());
  case Kind::And:
    return make_and(nnf(f->left()), nnf(f->right()));
  case Kind::Or:
    return make_or(nnf(f->left()), nnf(f->right()));
  case Kind::Future:
    return make_future(nnf(f->left()), f->interval());
  case Kind::Global:
    return make_global(nnf(f->left()), f->interval());
  case Kind::Until:
    return make_until(nnf(f->left()), nnf(f->right()), f->interval());
  case Kind::Release:
    return make_release(nnf(f->left()), nnf(f->right()), f->interval());
  }
  return f;
}

FormulaPtr nnf_negated(const FormulaPtr &g) {
  switch (g->kind()) {
  case Kind::True:
    return make_false();
  case Kind::False:
    return make_true();
  case Kind::Prop:
    return make_not(g);
  case Kind::Not:
    return nnf(g->left());
  case Kind::And:
    return make_or(nnf_negated(g->left()), nnf_negated(g->right()));
  case Kind::Or:
    return make_and(nnf_negated(g->left()), nnf_negated(g->right()));
  case Kind::Future:
    return make_global(nnf_negated(g->left()), g->interval());
  case Kind::Global:
    return make_future(nnf_negated(g->left()), g->interval());
  case Kind::Until:
    return make_release(nnf_negated(g->left()), nnf_negated(g->right()),
                        g->interval());
  case Kind::Release:
    return make_until(nnf_negated(g->left()), nnf_negated(g->right()),
                      g->interval());
  }
  return make_not(g);
}

} // namespace

FormulaPtr convert_nnf(const FormulaPtr &f) {
  if (!intervals_welldef(*f)) {
    throw IllFormedInterval("convert_nnf: ill-formed interval in input");
  }
  return nnf(f);
}

bool is_nnf(const Formula &f) {
  if (f.kind() == Kind::Not) {
    return f.left()->kind() == Kind::Prop;
  }
  if (f.left() && !is_nnf(*f.left())) {
    return false;
  }
  if (f.right() && !is_nnf(*f.right())) {
    return false;
  }
  return true;
}

std::uint64_t complen(const Formula &f) {
  switch (f.kind()) {
  case Kind::True:
  case Kind::False:
  case Kind::Prop:
    return 1;
  case Kind::Not:
    return complen(*f.left());
  case Kind::And:
  case Kind::Or:
    return std::max(complen(*f.left()), complen(*f.right()));
  case Kind::Future:
  case Kind::Global:
    return f.interval().hi + complen(*f.left());
  case Kind::Until:
  case Kind::Release: {
    std::uint64_t cl = complen(*f.left());
    std::uint64_t cr = complen(*f.right());
    return f.interval().hi + std::max(cl - 1, cr);
  }
  }
  return 1;
}

} // namespace mltl
