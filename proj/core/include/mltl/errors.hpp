#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mltl {

/// A formula contains a temporal operator whose interval has lo > hi.
class IllFormedInterval : public std::runtime_error {
public:
  explicit IllFormedInterval(const std::string &what)
      : std::runtime_error(what) {}
};

/// An enumeration-based decision would exceed the caller's budget.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string &what)
      : std::runtime_error(what) {}
};

/// A caller violated a stated precondition (e.g. k out of range).
class PreconditionViolated : public std::invalid_argument {
public:
  explicit PreconditionViolated(const std::string &what)
      : std::invalid_argument(what) {}
};

/// A progressed residual on a sufficiently long trace was equivalent to
/// neither True nor False. The correctness theorems rule this out, so it
/// always indicates an implementation bug.
class DichotomyViolation : public std::logic_error {
public:
  explicit DichotomyViolation(const std::string &what)
      : std::logic_error(what) {}
};

/// A generated benchmark record failed its independent re-validation.
class CrossCheckFailed : public std::logic_error {
public:
  explicit CrossCheckFailed(const std::string &what)
      : std::logic_error(what) {}
};

/// Byte range of an input that a parse error points at.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, SourceSpan span)
      : std::runtime_error(what), span_(span) {}

  SourceSpan span() const { return span_; }

private:
  SourceSpan span_;
};

} // namespace mltl
