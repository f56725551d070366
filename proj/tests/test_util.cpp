#include "test_util.hpp"

#include <vector>

namespace mltl::testutil {

namespace {

// Recursively extends the trace one state at a time, checking every
// intermediate length. Deliberately structured differently from the
// library's odometer enumeration.
bool extend_and_check(const Formula &f, const Formula &g,
                      const std::vector<State> &states, Trace &t,
                      std::size_t max_len) {
  if (evaluate(t, f) != evaluate(t, g)) {
    return false;
  }
  if (t.size() == max_len) {
    return true;
  }
  for (const State &s : states) {
    t.push_back(s);
    if (!extend_and_check(f, g, states, t, max_len)) {
      return false;
    }
    t.pop_back();
  }
  return true;
}

} // namespace

bool oracle_equiv(const Formula &f, const Formula &g,
                  const std::set<std::string> &alphabet,
                  std::size_t max_len) {
  const std::vector<std::string> props(alphabet.begin(), alphabet.end());
  std::vector<State> states;
  for (std::size_t mask = 0; mask < (std::size_t{1} << props.size()); ++mask) {
    State s;
    for (std::size_t bit = 0; bit < props.size(); ++bit) {
      if (mask & (std::size_t{1} << bit)) {
        s.insert(props[bit]);
      }
    }
    states.push_back(std::move(s));
  }
  Trace t;
  return extend_and_check(f, g, states, t, max_len);
}

} // namespace mltl::testutil
