#include "nnc/core.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "nnc/kd_tree.hpp"
#include "nnc/parallel.hpp"

namespace nnc {

namespace {

void check_query(ConstPoint q, const TrainingSet& set) {
  if (static_cast<std::size_t>(q.size()) != set.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "query dimension differs from training set");
  }
}

template <typename Filter>
NeighborResult scan_all(ConstPoint q, const TrainingSet& set, Filter&& keep) {
  NeighborResult best;
  const Metric& m = set.metric();
  for (PointIndex i = 0; i < set.size(); ++i) {
    if (!keep(i)) continue;
    best.offer(i, distance(q, set.row(i), m));
  }
  return best;
}

template <typename Filter>
NeighborResult scan_some(ConstPoint q, const TrainingSet& set,
                         std::span<const PointIndex> candidates, Filter&& keep) {
  NeighborResult best;
  const Metric& m = set.metric();
  for (PointIndex i : candidates) {
    if (i >= set.size()) {
      throw Error(ErrorCode::kInvalidArgument, "candidate index out of range");
    }
    if (!keep(i)) continue;
    best.offer(i, distance(q, set.row(i), m));
  }
  return best;
}

double density_from(const NeighborResult& nn, const NeighborResult& ne) {
  if (!ne.found()) {
    throw Error(ErrorCode::kSingleClass, "chromatic density needs two classes among candidates");
  }
  if (nn.distance == 0.0) {
    throw Error(ErrorCode::kUndefinedDensity, "undefined density at member point");
  }
  return ne.distance / nn.distance - 1.0;
}

}  // namespace

NeighborResult nearest_neighbor_brute(ConstPoint q, const TrainingSet& set) {
  check_query(q, set);
  return scan_all(q, set, [](PointIndex) { return true; });
}

NeighborResult nearest_neighbor_brute(ConstPoint q, const TrainingSet& set,
                                      std::span<const PointIndex> candidates) {
  check_query(q, set);
  if (candidates.empty()) {
    throw Error(ErrorCode::kEmptyCandidates, "nearest neighbor over an empty candidate set");
  }
  return scan_some(q, set, candidates, [](PointIndex) { return true; });
}

NeighborResult nearest_other_label_brute(ConstPoint q, Label label, const TrainingSet& set) {
  check_query(q, set);
  return scan_all(q, set, [&](PointIndex i) { return set.label(i) != label; });
}

NeighborResult nearest_other_label_brute(ConstPoint q, Label label, const TrainingSet& set,
                                         std::span<const PointIndex> candidates) {
  check_query(q, set);
  return scan_some(q, set, candidates, [&](PointIndex i) { return set.label(i) != label; });
}

NeighborResult nearest_enemy_brute(PointIndex p, const TrainingSet& set) {
  if (p >= set.size()) throw Error(ErrorCode::kInvalidArgument, "point index out of range");
  NeighborResult ne = nearest_other_label_brute(set.row(p), set.label(p), set);
  if (!ne.found()) {
    throw Error(ErrorCode::kSingleClass, "point has no enemy: single-class set");
  }
  return ne;
}

std::vector<NeighborResult> nearest_enemies_brute(const TrainingSet& set) {
  std::vector<NeighborResult> out(set.size());
  parallel_for(set.size(), [&](std::size_t i) { out[i] = nearest_enemy_brute(i, set); });
  return out;
}

double chromatic_density(ConstPoint q, const TrainingSet& set) {
  const NeighborResult nn = nearest_neighbor_brute(q, set);
  return density_from(nn, nearest_other_label_brute(q, set.label(nn.index), set));
}

double chromatic_density(ConstPoint q, const TrainingSet& set,
                         std::span<const PointIndex> candidates) {
  const NeighborResult nn = nearest_neighbor_brute(q, set, candidates);
  return density_from(nn, nearest_other_label_brute(q, set.label(nn.index), set, candidates));
}

double diameter_brute(const TrainingSet& set) {
  std::vector<double> row_max(set.size(), 0.0);
  const Metric& m = set.metric();
  parallel_for(set.size(), [&](std::size_t i) {
    double best = 0.0;
    for (PointIndex j = i + 1; j < set.size(); ++j) {
      best = std::max(best, distance(set.row(i), set.row(j), m));
    }
    row_max[i] = best;
  });
  return *std::max_element(row_max.begin(), row_max.end());
}

DatasetStats compute_stats(const TrainingSet& set, bool force_quadratic) {
  DatasetStats stats;
  stats.n = set.size();
  stats.d = set.dim();
  stats.c = set.class_count();

  const std::vector<NeighborResult> enemies = set.size() <= kQuadraticStatsLimit || force_quadratic
                                                  ? nearest_enemies_brute(set)
                                                  : nearest_enemy_all(set, 0.0);
  std::unordered_set<PointIndex> distinct;
  stats.gamma = kInfinity;
  for (const NeighborResult& ne : enemies) {
    distinct.insert(ne.index);
    stats.gamma = std::min(stats.gamma, ne.distance);
  }
  stats.kappa = distinct.size();
  if (!(stats.gamma > 0.0)) {
    throw Error(ErrorCode::kZeroMargin, "margin is zero: conflicting duplicate points");
  }

  if (set.size() <= kQuadraticStatsLimit || force_quadratic) {
    std::vector<double> row_max(set.size(), 0.0);
    std::vector<double> row_min(set.size(), kInfinity);
    const Metric& m = set.metric();
    parallel_for(set.size(), [&](std::size_t i) {
      for (PointIndex j = i + 1; j < set.size(); ++j) {
        const double dij = distance(set.row(i), set.row(j), m);
        row_max[i] = std::max(row_max[i], dij);
        if (dij > 0.0) row_min[i] = std::min(row_min[i], dij);
      }
    });
    const double diam = *std::max_element(row_max.begin(), row_max.end());
    const double closest = *std::min_element(row_min.begin(), row_min.end());
    stats.diameter = diam;
    stats.spread = diam / closest;
  }
  return stats;
}

TrainingSet normalize_diameter(const TrainingSet& set) {
  const double diam = diameter_brute(set);
  if (!(diam > 0.0)) {
    throw Error(ErrorCode::kCoincidentPoints, "cannot normalize: all points coincide");
  }
  if (diam == 1.0) return set;
  PointMatrix scaled = set.coords() / diam;
  return set.with_coords(std::move(scaled));
}

}  // namespace nnc
