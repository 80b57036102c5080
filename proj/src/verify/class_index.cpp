#include "verify/class_index.hpp"

#include "nnc/metric.hpp"

namespace nnc::detail {

ClassIndex::ClassIndex(const TrainingSet& set, std::span<const PointIndex> ids)
    : set_(&set), members_(set.class_count()), trees_(set.class_count()) {
  for (PointIndex i : ids) members_[set.label(i)].push_back(i);
  if (ids.size() > kScanLimit) {
    for (std::size_t c = 0; c < members_.size(); ++c) {
      if (!members_[c].empty()) trees_[c] = std::make_unique<KdTree>(set, members_[c]);
    }
  }
}

NeighborResult ClassIndex::search(ConstPoint q, Label label) const {
  if (trees_[label]) return trees_[label]->nearest(q);
  NeighborResult best;
  const Metric& m = set_->metric();
  for (PointIndex i : members_[label]) best.offer(i, distance(q, set_->row(i), m));
  return best;
}

NeighborResult ClassIndex::nearest(ConstPoint q) const {
  NeighborResult best;
  for (Label c = 0; c < members_.size(); ++c) {
    const NeighborResult r = search(q, c);
    if (r.better_than(best)) best = r;
  }
  return best;
}

NeighborResult ClassIndex::nearest_with_label(ConstPoint q, Label label) const {
  return search(q, label);
}

NeighborResult ClassIndex::nearest_other_label(ConstPoint q, Label label) const {
  NeighborResult best;
  for (Label c = 0; c < members_.size(); ++c) {
    if (c == label) continue;
    const NeighborResult r = search(q, c);
    if (r.better_than(best)) best = r;
  }
  return best;
}

std::size_t ClassIndex::label_count() const {
  std::size_t k = 0;
  for (const auto& m : members_) k += m.empty() ? 0 : 1;
  return k;
}

}  // namespace nnc::detail
