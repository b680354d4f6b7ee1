#pragma once

#include <ostream>

#include "chern/invariants.hpp"

namespace chern {

/// Chern numbers (c3, c1^3, c1 c2) of an almost complex 6-manifold.
struct ChernTriple {
  Integer c3 = 0;
  Integer c1_cubed = 0;
  Integer c1c2 = 0;

  friend bool operator==(const ChernTriple&, const ChernTriple&) = default;
  friend auto operator<=>(const ChernTriple&, const ChernTriple&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const ChernTriple& t) {
  return os << '(' << t.c3 << ", " << t.c1_cubed << ", " << t.c1c2 << ')';
}

}  // namespace chern
