#pragma once

#include <memory>
#include <span>
#include <vector>

#include "nnc/kd_tree.hpp"
#include "nnc/training_set.hpp"

namespace nnc::detail {

/// Exact per-class nearest-point search over a subset of a training set.
/// Small subsets are scanned; larger ones go through exact kd-trees.
class ClassIndex {
 public:
  static constexpr std::size_t kScanLimit = 4096;

  ClassIndex(const TrainingSet& set, std::span<const PointIndex> ids);

  NeighborResult nearest(ConstPoint q) const;
  NeighborResult nearest_with_label(ConstPoint q, Label label) const;
  NeighborResult nearest_other_label(ConstPoint q, Label label) const;

  /// Labels present in the subset.
  std::size_t label_count() const;

 private:
  NeighborResult search(ConstPoint q, Label label) const;

  const TrainingSet* set_;
  std::vector<std::vector<PointIndex>> members_;
  std::vector<std::unique_ptr<KdTree>> trees_;
};

}  // namespace nnc::detail
