#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setreal/rep.hpp"

namespace sr {

/// E_n (n = 6, 7, 8) with a length-2 arm a1-a2-c, a length-(n-4) arm b1-...-c
/// and a length-1 arm s-c. Flags as in shapes::e6: arm a from the outside in,
/// then arm b from the outside in, then s; true points away from c.
Shape e_shape(std::size_t n, const std::vector<bool>& out);
std::size_t e_edge_count(std::size_t n);

/// Reference list of orientations on which free is additively surjective.
bool e_expected_surjective(std::size_t n, const std::vector<bool>& out);

struct OrientationResult {
  std::vector<bool> out;
  bool surjective = true;
  std::optional<DimVector> failing_root;  // first non-realizable root
  std::size_t roots_checked = 0;
};

/// Every orientation of E_n (index bit i = flag i), every positive root: build
/// an indecomposable and decide realizability. Stops at the first failing root
/// of each orientation.
std::vector<OrientationResult> e_sweep(const Field& F, std::size_t n, std::uint64_t seed = 0);
OrientationResult e_orientation(const Field& F, std::size_t n, const std::vector<bool>& out, std::uint64_t seed = 0);

}  // namespace sr
