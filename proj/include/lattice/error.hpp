#pragma once

#include <stdexcept>
#include <string>

namespace lattice {

/// Raised when an operation's precondition or a structural invariant fails.
/// The message is the short reason string ("not a cycle", "seed vacant", ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lattice
