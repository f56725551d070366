#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace mltl {

/// Closed integer time bound [lo, hi] attached to a temporal operator.
/// The type itself admits lo > hi; well-definedness is a separate check
/// (intervals_welldef), matching the unrestricted syntax.
struct Interval {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  bool welldef() const { return lo <= hi; }
  friend bool operator==(const Interval &, const Interval &) = default;
};

enum class Kind {
  True,
  False,
  Prop,
  Not,
  And,
  Or,
  Future,
  Global,
  Until,
  Release,
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable MLTL formula node. Construct through the factory functions
/// below; children are shared, never mutated.
class Formula {
public:
  Kind kind() const { return kind_; }

  /// Proposition name; only meaningful for Kind::Prop.
  const std::string &name() const { return name_; }

  /// First (or only) child; null for atoms.
  const FormulaPtr &left() const { return left_; }
  /// Second child; null for atoms and unary nodes.
  const FormulaPtr &right() const { return right_; }

  /// Time bound; only meaningful for temporal kinds.
  const Interval &interval() const { return interval_; }

  bool is_atom() const {
    return kind_ == Kind::True || kind_ == Kind::False || kind_ == Kind::Prop;
  }
  bool is_temporal() const {
    return kind_ == Kind::Future || kind_ == Kind::Global ||
           kind_ == Kind::Until || kind_ == Kind::Release;
  }
  bool is_binary() const {
    return kind_ == Kind::And || kind_ == Kind::Or || kind_ == Kind::Until ||
           kind_ == Kind::Release;
  }

  Formula(Kind kind, std::string name, FormulaPtr left, FormulaPtr right,
          Interval interval)
      : kind_(kind), name_(std::move(name)), left_(std::move(left)),
        right_(std::move(right)), interval_(interval) {}

private:
  Kind kind_;
  std::string name_;
  FormulaPtr left_;
  FormulaPtr right_;
  Interval interval_;
};

FormulaPtr make_true();
FormulaPtr make_false();
FormulaPtr make_prop(std::string name);
FormulaPtr make_not(FormulaPtr child);
FormulaPtr make_and(FormulaPtr left, FormulaPtr right);
FormulaPtr make_or(FormulaPtr left, FormulaPtr right);
FormulaPtr make_future(FormulaPtr child, Interval iv);
FormulaPtr make_global(FormulaPtr child, Interval iv);
FormulaPtr make_until(FormulaPtr left, FormulaPtr right, Interval iv);
FormulaPtr make_release(FormulaPtr left, FormulaPtr right, Interval iv);

/// Structural equality: plain constructor/field comparison, no
/// normalization.
bool equal(const Formula &a, const Formula &b);
inline bool equal(const FormulaPtr &a, const FormulaPtr &b) {
  return equal(*a, *b);
}

/// Total structural order, so formulas can key std::set/std::map.
int compare(const Formula &a, const Formula &b);

struct FormulaLess {
  bool operator()(const FormulaPtr &a, const FormulaPtr &b) const {
    return compare(*a, *b) < 0;
  }
};

using FormulaSet = std::set<FormulaPtr, FormulaLess>;

/// Set of atomic propositions true at one timestep.
using State = std::set<std::string>;

/// Finite ordered sequence of states; the empty trace is a valid value.
using Trace = std::vector<State>;

/// True iff every temporal node satisfies lo <= hi, recursively.
bool intervals_welldef(const Formula &f);

/// Atoms have depth 0; every other node is 1 + max over children.
std::uint64_t depth(const Formula &f);

/// The formula itself plus, recursively, all subformulas of its children.
FormulaSet subformulas(const FormulaPtr &f);

/// All proposition names occurring in f.
std::set<std::string> alphabet(const Formula &f);

/// Node count, counting every constructor occurrence.
std::uint64_t node_count(const Formula &f);

} // namespace mltl
