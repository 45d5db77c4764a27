#pragma once

#include <stdexcept>
#include <string>

namespace symcov {

// Violated precondition on user-supplied data.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured cap (element count, vertex count, ...) was exceeded.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed; indicates a bug, not a data condition.
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace symcov
