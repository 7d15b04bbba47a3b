#pragma once

#include <string>
#include <vector>

#include "setreal/rep.hpp"

namespace sr::catalog {

/// Three lines into a plane: (1,0), (0,1), (1,1).
LinRep d4_inward(const Field& F);
/// Seven 2x3 maps out of F^3.
LinRep star7(const Field& F);
/// 2x5 commutative grid with a non-realizable summand structure.
LinRep intro_grid(const Field& F);
/// Indecomposables on the 2x4 grid with a dimension-2 vertex. k = 1: one arrow
/// into the 2 and two out; k = 2: two in and one out; k = 3: the one with two
/// separate 2s.
LinRep grid_pattern(const Field& F, int k);

/// Names accepted by by_name.
std::vector<std::string> names();
/// Throws std::invalid_argument for unknown names.
LinRep by_name(const std::string& name, const Field& F);

}  // namespace sr::catalog
