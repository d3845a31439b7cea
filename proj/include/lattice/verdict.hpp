#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace lattice {

/// Named pass/fail outcome; `detail` carries the counterexample when failed.
struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

using Verdicts = std::vector<Check>;

inline bool all_passed(const Verdicts& v) {
  return std::all_of(v.begin(), v.end(), [](const Check& c) { return c.passed; });
}

inline void append(Verdicts& into, Verdicts more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace lattice
