#pragma once

#include <cstddef>

namespace lamanchiral {

// Desk-scale guards for the exponential parts of the library.
struct Limits {
  unsigned max_order = 6;
  std::size_t max_vertices = 10;

  // Defaults, with max_vertices overridden by LAMANCHIRAL_MAX_VERTICES when set.
  static Limits from_env();
};

}  // namespace lamanchiral
