#include "mltl/semantics.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "mltl/transforms.hpp"

namespace mltl {

namespace {

// Hard ceiling on the number of traces any single equivalence decision may
// enumerate; decisions above it refuse with BudgetExceeded instead of
// running for hours.
constexpr std::uint64_t kMaxEnumeratedTraces = std::uint64_t{1} << 22;

std::size_t remaining(const Trace &t, std::size_t off) {
  return off >= t.size() ? 0 : t.size() - off;
}

// Satisfaction of f on the suffix of t starting at off. Suffix indices past
// the end denote the empty trace; no clamping of interval bounds.
bool eval_at(const Trace &t, std::size_t off, const Formula &f) {
  switch (f.kind()) {
  case Kind::True:
    return true;
  case Kind::False:
    return false;
  case Kind::Prop:
    return remaining(t, off) > 0 && t[off].count(f.name()) > 0;
  case Kind::Not:
    return !eval_at(t, off, *f.left());
  case Kind::And:
    return eval_at(t, off, *f.left()) && eval_at(t, off, *f.right());
  case Kind::Or:
    return eval_at(t, off, *f.left()) || eval_at(t, off, *f.right());
  case Kind::Future: {
    const auto [a, b] = f.interval();
    if (remaining(t, off) <= a) {
      return false;
    }
    for (std::uint64_t i = a; i <= b; ++i) {
      if (eval_at(t, off + i, *f.left())) {
        return true;
      }
    }
    return false;
  }
  case Kind::Global: {
    const auto [a, b] = f.interval();
    if (remaining(t, off) <= a) {
      return true;
    }
    for (std::uint64_t i = a; i <= b; ++i) {
      if (!eval_at(t, off + i, *f.left())) {
        return false;
      }
    }
    return true;
  }
  case Kind::Until: {
    const auto [a, b] = f.interval();
    if (remaining(t, off) <= a) {
      return false;
    }
    for (std::uint64_t i = a; i <= b; ++i) {
      if (!eval_at(t, off + i, *f.right())) {
        continue;
      }
      bool held = true;
      for (std::uint64_t j = a; j < i; ++j) {
        if (!eval_at(t, off + j, *f.left())) {
          held = false;
          break;
        }
      }
      if (held) {
        return true;
      }
    }
    return false;
  }
  case Kind::Release: {
    const auto [a, b] = f.interval();
    if (remaining(t, off) <= a) {
      return true;
    }
    bool all_right = true;
    for (std::uint64_t i = a; i <= b; ++i) {
      if (!eval_at(t, off + i, *f.right())) {
        all_right = false;
        break;
      }
    }
    if (all_right) {
      return true;
    }
    for (std::uint64_t j = a; j <= b; ++j) {
      if (!eval_at(t, off + j, *f.left())) {
        continue;
      }
      bool held = true;
      for (std::uint64_t k = a; k <= j; ++k) {
        if (!eval_at(t, off + k, *f.right())) {
          held = false;
          break;
        }
      }
      if (held) {
        return true;
      }
    }
    return false;
  }
  }
  return false;
}

// Number of traces of the given length, saturating at max.
std::uint64_t trace_count(std::size_t alphabet_size, std::size_t length) {
  if (alphabet_size >= 63) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  const std::uint64_t states = std::uint64_t{1} << alphabet_size;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / states) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= states;
  }
  return total;
}

} // namespace

Trace suffix(const Trace &t, std::size_t i) {
  if (i >= t.size()) {
    return {};
  }
  return Trace(t.begin() + static_cast<std::ptrdiff_t>(i), t.end());
}

Trace prefix(const Trace &t, std::size_t k) {
  if (k >= t.size()) {
    return t;
  }
  return Trace(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k));
}

bool evaluate(const Trace &t, const Formula &f) {
  if (!intervals_welldef(f)) {
    throw IllFormedInterval("evaluate: ill-formed interval in formula");
  }
  return eval_at(t, 0, f);
}

bool for_each_trace(const std::set<std::string> &alphabet, std::size_t length,
                    const std::function<bool(const Trace &)> &visit) {
  const std::vector<std::string> props(alphabet.begin(), alphabet.end());
  std::vector<std::uint64_t> digits(length, 0);
  const std::uint64_t states = std::uint64_t{1} << props.size();

  Trace t(length);
  while (true) {
    for (std::size_t pos = 0; pos < length; ++pos) {
      State s;
      for (std::size_t bit = 0; bit < props.size(); ++bit) {
        if (digits[pos] & (std::uint64_t{1} << bit)) {
          s.insert(props[bit]);
        }
      }
      t[pos] = std::move(s);
    }
    if (!visit(t)) {
      return false;
    }
    // Odometer increment, last position fastest: position 0 is the most
    // significant digit, giving lexicographic order over positions.
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < states) {
        break;
      }
      digits[pos] = 0;
      if (pos == 0) {
        return true;
      }
    }
    if (length == 0) {
      return true;
    }
  }
}

std::vector<Trace> enumerate_traces(const std::set<std::string> &alphabet,
                                    std::size_t length,
                                    const EquivBudget &budget) {
  if (alphabet.size() > budget.max_alphabet || length > budget.max_length ||
      trace_count(alphabet.size(), length) > kMaxEnumeratedTraces) {
    throw BudgetExceeded("enumerate_traces: alphabet/length out of budget");
  }
  std::vector<Trace> out;
  for_each_trace(alphabet, length, [&out](const Trace &t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::optional<Trace> equiv_witness(const Formula &f, const Formula &g,
                                   const EquivBudget &budget,
                                   const std::set<std::string> &extra_alphabet) {
  if (!intervals_welldef(f) || !intervals_welldef(g)) {
    throw IllFormedInterval("semantic_equiv: ill-formed interval in input");
  }
  std::set<std::string> alpha = alphabet(f);
  alpha.merge(alphabet(g));
  for (const auto &p : extra_alphabet) {
    alpha.insert(p);
  }
  if (alpha.size() > budget.max_alphabet) {
    throw BudgetExceeded("semantic_equiv: alphabet exceeds budget");
  }
  const std::uint64_t max_len = std::max(complen(f), complen(g));
  if (max_len > budget.max_length) {
    throw BudgetExceeded("semantic_equiv: computation length exceeds budget");
  }

  // Pre-flight cost estimate; refuse rather than hang.
  std::uint64_t total = 0;
  for (std::uint64_t len = 0; len <= max_len; ++len) {
    const std::uint64_t n = trace_count(alpha.size(), len);
    if (n > kMaxEnumeratedTraces - total) {
      throw BudgetExceeded("semantic_equiv: enumeration too large");
    }
    total += n;
  }

  // Lengths beyond max(complen) cannot flip either verdict, so 0..max_len
  // is exhaustive for the restricted domain.
  std::optional<Trace> witness;
  for (std::uint64_t len = 0; len <= max_len && !witness; ++len) {
    for_each_trace(alpha, len, [&](const Trace &t) {
      if (eval_at(t, 0, f) != eval_at(t, 0, g)) {
        witness = t;
        return false;
      }
      return true;
    });
  }
  return witness;
}

bool semantic_equiv(const Formula &f, const Formula &g,
                    const EquivBudget &budget,
                    const std::set<std::string> &extra_alphabet) {
  return !equiv_witness(f, g, budget, extra_alphabet).has_value();
}

} // namespace mltl
