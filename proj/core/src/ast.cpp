#include "mltl/ast.hpp"

#include <algorithm>

namespace mltl {

FormulaPtr make_true() {
  static const FormulaPtr t =
      std::make_shared<Formula>(Kind::True, "", nullptr, nullptr, Interval{});
  return t;
}

FormulaPtr make_false() {
  static const FormulaPtr f =
      std::make_shared<Formula>(Kind::False, "", nullptr, nullptr, Interval{});
  return f;
}

FormulaPtr make_prop(std::string name) {
  return std::make_shared<Formula>(Kind::Prop, std::move(name), nullptr,
                                   nullptr, Interval{});
}

FormulaPtr make_not(FormulaPtr child) {
  return std::make_shared<Formula>(Kind::Not, "", std::move(child), nullptr,
                                   Interval{});
}

FormulaPtr make_and(FormulaPtr left, FormulaPtr right) {
  return std::make_shared<Formula>(Kind::And, "", std::move(left),
                                   std::move(right), Interval{});
}

FormulaPtr make_or(FormulaPtr left, FormulaPtr right) {
  return std::make_shared<Formula>(Kind::Or, "", std::move(left),
                                   std::move(right), Interval{});
}

FormulaPtr make_future(FormulaPtr child, Interval iv) {
  return std::make_shared<Formula>(Kind::Future, "", std::move(child), nullptr,
                                   iv);
}

FormulaPtr make_global(FormulaPtr child, Interval iv) {
  return std::make_shared<Formula>(Kind::Global, "", std::move(child), nullptr,
                                   iv);
}

FormulaPtr make_until(FormulaPtr left, FormulaPtr right, Interval iv) {
  return std::make_shared<Formula>(Kind::Until, "", std::move(left),
                                   std::move(right), iv);
}

FormulaPtr make_release(FormulaPtr left, FormulaPtr right, Interval iv) {
  return std::make_shared<Formula>(Kind::Release, "", std::move(left),
                                   std::move(right), iv);
}

int compare(const Formula &a, const Formula &b) {
  if (a.kind() != b.kind()) {
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  }
  switch (a.kind()) {
  case Kind::True:
  case Kind::False:
    return 0;
  case Kind::Prop:
    return a.name().compare(b.name());
  default:
    break;
  }
  if (a.is_temporal()) {
    if (a.interval().lo != b.interval().lo) {
      return a.interval().lo < b.interval().lo ? -1 : 1;
    }
    if (a.interval().hi != b.interval().hi) {
      return a.interval().hi < b.interval().hi ? -1 : 1;
    }
  }
  if (int c = compare(*a.left(), *b.left()); c != 0) {
    return c;
  }
  if (a.is_binary()) {
    return compare(*a.right(), *b.right());
  }
  return 0;
}

bool equal(const Formula &a, const Formula &b) { return compare(a, b) == 0; }

bool intervals_welldef(const Formula &f) {
  switch (f.kind()) {
  case Kind::True:
  case Kind::False:
  case Kind::Prop:
    return true;
  case Kind::Not:
    return intervals_welldef(*f.left());
  case Kind::And:
  case Kind::Or:
    return intervals_welldef(*f.left()) && intervals_welldef(*f.right());
  case Kind::Future:
  case Kind::Global:
    return f.interval().welldef() && intervals_welldef(*f.left());
  case Kind::Until:
  case Kind::Release:
    return f.interval().welldef() && intervals_welldef(*f.left()) &&
           intervals_welldef(*f.right());
  }
  return false;
}

std::uint64_t depth(const Formula &f) {
  if (f.is_atom()) {
    return 0;
  }
  std::uint64_t d = depth(*f.left());
  if (f.is_binary()) {
    d = std::max(d, depth(*f.right()));
  }
  return d + 1;
}

static void collect_subformulas(const FormulaPtr &f, FormulaSet &out) {
  out.insert(f);
  if (f->left()) {
    collect_subformulas(f->left(), out);
  }
  if (f->right()) {
    collect_subformulas(f->right(), out);
  }
}

FormulaSet subformulas(const FormulaPtr &f) {
  FormulaSet out;
  collect_subformulas(f, out);
  return out;
}

static void collect_alphabet(const Formula &f, std::set<std::string> &out) {
  if (f.kind() == Kind::Prop) {
    out.insert(f.name());
    return;
  }
  if (f.left()) {
    collect_alphabet(*f.left(), out);
  }
  if (f.right()) {
    collect_alphabet(*f.right(), out);
  }
}

std::set<std::string> alphabet(const Formula &f) {
  std::set<std::string> out;
  collect_alphabet(f, out);
  return out;
}

std::uint64_t node_count(const Formula &f) {
  std::uint64_t n = 1;
  if (f.left()) {
    n += node_count(*f.left());
  }
  if (f.right()) {
    n += node_count(*f.right());
  }
  return n;
}

} // namespace mltl
