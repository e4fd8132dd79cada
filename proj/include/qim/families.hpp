#pragma once

#include <vector>

#include "qim/quiver.hpp"

namespace qim {

// One representative per isomorphism class of admissible oriented trees on
// 2..max_n vertices, canonically labeled, ordered by vertex count and then
// by arrow list. Meant for exhaustive small-scale sweeps.
std::vector<Quiver> admissible_tree_family(int max_n);

// Every orientation of the path 1 - 2 - ... - n (all 2^(n-1), each
// admissible), ordered by bitmask: bit i set orients edge {i+1, i+2} as
// i+1 -> i+2.
std::vector<Quiver> type_a_orientations(int n);

}  // namespace qim
