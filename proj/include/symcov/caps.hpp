#pragma once

#include <cstddef>

namespace symcov {

// Global resource caps. Set once at startup (CLI flags or the
// SYMCOV_MAX_ELEMENTS environment variable) before concurrent use.
struct Caps {
  static std::size_t max_elements;  // element enumeration cap
  static std::size_t max_vertices;  // coset / transversal cap
};

}  // namespace symcov
