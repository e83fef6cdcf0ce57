#pragma once

#include <compare>
#include <vector>

namespace edgepoly {

/// Integer point of Z^d.
struct LatticePoint {
  std::vector<int> coords;

  std::size_t dim() const { return coords.size(); }
  int operator[](std::size_t k) const { return coords[k]; }
  auto operator<=>(const LatticePoint&) const = default;
};

}  // namespace edgepoly
