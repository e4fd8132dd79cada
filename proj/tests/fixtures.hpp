#pragma once

#include <utility>
#include <vector>

#include "qim/bimodule.hpp"
#include "qim/quiver.hpp"

// Small quivers shared across the test binaries, named by their shape.
namespace fx {

inline qim::Quiver quiver(int n, std::vector<qim::Arrow> arrows) {
  return qim::Quiver::from_arrows(n, std::move(arrows));
}

// 1 -> 2
inline qim::Quiver a2() { return quiver(2, {{1, 2}}); }
// 1 -> 2 -> 3
inline qim::Quiver a3_uniform() { return quiver(3, {{1, 2}, {2, 3}}); }
// 1 -> 2 <- 3
inline qim::Quiver a3_in() { return quiver(3, {{1, 2}, {3, 2}}); }
// 1 <- 2 -> 3
inline qim::Quiver a3_out() { return quiver(3, {{2, 1}, {2, 3}}); }
// three arrows into a central sink: 1 -> 2 <- 3, 4 -> 2
inline qim::Quiver star4_in() { return quiver(4, {{1, 2}, {3, 2}, {4, 2}}); }
// branching tree 1 -> 2 <- 3 <- 4 -> 5 -> 6 (split vertices 2 and 4)
inline qim::Quiver branch6() {
  return quiver(6, {{1, 2}, {3, 2}, {4, 3}, {4, 5}, {5, 6}});
}
// same shape with the last arrow flipped: 1 -> 2 <- 3 <- 4 -> 5 <- 6
inline qim::Quiver branch6_in() {
  return quiver(6, {{1, 2}, {3, 2}, {4, 3}, {4, 5}, {6, 5}});
}
// long zigzag 1 -> 2 -> 3 <- 4 <- 5 -> 6 -> 7 -> 8 <- 9
inline qim::Quiver zigzag9() {
  return quiver(9, {{1, 2}, {2, 3}, {4, 3}, {5, 4}, {5, 6}, {6, 7}, {7, 8}, {9, 8}});
}

inline qim::AlgebraPtr algebra(qim::Quiver q) {
  return qim::PathAlgebra::make(std::move(q));
}

}  // namespace fx
