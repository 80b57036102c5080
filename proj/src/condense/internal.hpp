#pragma once

#include <cmath>
#include <vector>

#include "nnc/types.hpp"

namespace nnc::detail {

void check_alpha(double alpha);
void check_xi(double xi);

/// Point ordinals sorted by (enemy distance, index).
std::vector<PointIndex> order_by_enemy_distance(const std::vector<NeighborResult>& enemies);

/// Training point q with nearest neighbor at `dnn` and nearest enemy at
/// `dne` (both w.r.t. some subset) meets the alpha condition.
inline bool alpha_satisfied(double dnn, double dne, double alpha) {
  return certified_less(dnn, dne / (1.0 + alpha));
}

}  // namespace nnc::detail
