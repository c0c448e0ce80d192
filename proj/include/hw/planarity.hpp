#pragma once

#include <utility>
#include <vector>

#include "hw/core.hpp"

namespace hw {

struct PlanarityResult {
  bool planar = false;
  // Planar: clockwise neighbor order around each vertex.
  std::vector<std::vector<int>> rotation;
  // Non-planar: edges of a subdivision of K5 or K3,3, sorted.
  std::vector<std::pair<int, int>> kuratowski;
};

PlanarityResult planarity_check(const Graph& g);

}  // namespace hw
