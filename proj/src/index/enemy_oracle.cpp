#include <algorithm>

#include "nnc/kd_tree.hpp"
#include "nnc/parallel.hpp"

namespace nnc {

EnemyOracle::EnemyOracle(const TrainingSet& set, double xi, KdTreeParams params) : set_(&set) {
  auto members = set.class_members();
  per_class_.reserve(members.size());
  for (auto& ids : members) per_class_.emplace_back(set, std::move(ids), xi, params);
}

NeighborResult EnemyOracle::nearest_other_label(ConstPoint q, Label label) const {
  NeighborResult best;
  for (std::size_t c = 0; c < per_class_.size(); ++c) {
    if (c == label) continue;
    const NeighborResult r = per_class_[c].nearest(q);
    if (r.better_than(best)) best = r;
  }
  if (!best.found()) {
    throw Error(ErrorCode::kSingleClass, "no enemy exists: single-class set");
  }
  return best;
}

NeighborResult EnemyOracle::nearest_enemy(PointIndex p) const {
  return nearest_other_label(set_->row(p), set_->label(p));
}

std::vector<NeighborResult> nearest_enemy_all(const TrainingSet& set, double xi,
                                              KdTreeParams params) {
  if (set.class_count() < 2) {
    throw Error(ErrorCode::kSingleClass, "nearest enemies need at least two classes");
  }
  const EnemyOracle oracle(set, xi, params);
  std::vector<NeighborResult> out(set.size());
  parallel_for(set.size(), [&](std::size_t i) { out[i] = oracle.nearest_enemy(i); });
  return out;
}

}  // namespace nnc
