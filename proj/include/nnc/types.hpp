#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

#include <Eigen/Core>

namespace nnc {

using PointMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstPoint = Eigen::Ref<const Eigen::RowVectorXd>;

using PointIndex = std::size_t;
using Label = std::uint32_t;

inline constexpr PointIndex kNoPoint = std::numeric_limits<PointIndex>::max();
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A point ordinal together with its distance to some query.
struct NeighborResult {
  PointIndex index = kNoPoint;
  double distance = kInfinity;

  // Strict total order used for every nearest-point reduction: smaller
  // distance first, lower index on exact ties.
  bool better_than(const NeighborResult& other) const {
    return distance < other.distance ||
           (distance == other.distance && index < other.index);
  }
  void offer(PointIndex i, double d) {
    if (d < distance || (d == distance && i < index)) {
      index = i;
      distance = d;
    }
  }
  bool found() const { return index != kNoPoint; }
};

/// Absolute slack for the strict inequalities of the condensation criteria.
inline constexpr double kStrictSlack = 1e-9;

/// `lhs < rhs` with the slack applied against `lhs`: values within the slack
/// of the bound are treated as not below it. Algorithms and checkers share
/// this predicate so that an algorithm never accepts what a checker rejects.
inline bool certified_less(double lhs, double rhs, double slack = kStrictSlack) {
  return lhs < rhs - slack;
}

inline bool certified_greater(double lhs, double rhs, double slack = kStrictSlack) {
  return lhs > rhs + slack;
}

}  // namespace nnc
