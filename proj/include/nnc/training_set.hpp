#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nnc/metric.hpp"
#include "nnc/types.hpp"

namespace nnc {

/// View of one stored point.
struct LabeledPoint {
  PointIndex index;
  ConstPoint coords;
  Label label;
};

/// Immutable labeled point set. Labels are dense class ids in
/// [0, class_count); every class has at least one point and no two points
/// share coordinates while carrying different labels.
class TrainingSet {
 public:
  /// Validates all invariants; throws nnc::Error on violation.
  /// `class_names`, when given, must have one entry per class.
  TrainingSet(PointMatrix coords, std::vector<Label> labels, Metric metric = {},
              std::vector<std::string> class_names = {});

  std::size_t size() const { return static_cast<std::size_t>(coords_.rows()); }
  std::size_t dim() const { return static_cast<std::size_t>(coords_.cols()); }
  std::size_t class_count() const { return class_count_; }

  const PointMatrix& coords() const { return coords_; }
  auto row(PointIndex i) const { return coords_.row(static_cast<Eigen::Index>(i)); }
  const std::vector<Label>& labels() const { return labels_; }
  Label label(PointIndex i) const { return labels_[i]; }
  const Metric& metric() const { return metric_; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  LabeledPoint point(PointIndex i) const { return {i, row(i), labels_[i]}; }

  /// Indices of the points of each class, in storage order.
  std::vector<std::vector<PointIndex>> class_members() const;

  /// 64-bit FNV-1a over dimension, labels and coordinate bytes.
  std::uint64_t fingerprint() const { return fingerprint_; }

  /// Same labels and metric, new coordinates (re-validated).
  TrainingSet with_coords(PointMatrix coords) const;

 private:
  PointMatrix coords_;
  std::vector<Label> labels_;
  Metric metric_;
  std::vector<std::string> class_names_;
  std::size_t class_count_ = 0;
  std::uint64_t fingerprint_ = 0;
};

}  // namespace nnc
