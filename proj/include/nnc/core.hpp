#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nnc/training_set.hpp"

namespace nnc {

/// Exhaustive nearest neighbor of `q`, optionally restricted to
/// `candidates`. Ties go to the lowest point index.
NeighborResult nearest_neighbor_brute(ConstPoint q, const TrainingSet& set);
NeighborResult nearest_neighbor_brute(ConstPoint q, const TrainingSet& set,
                                      std::span<const PointIndex> candidates);

/// Closest point whose label differs from `label`.
NeighborResult nearest_other_label_brute(ConstPoint q, Label label, const TrainingSet& set);
NeighborResult nearest_other_label_brute(ConstPoint q, Label label, const TrainingSet& set,
                                         std::span<const PointIndex> candidates);

/// Nearest enemy of the stored point `p` over the whole set.
NeighborResult nearest_enemy_brute(PointIndex p, const TrainingSet& set);

/// Nearest enemies of every point, exhaustive and parallel.
std::vector<NeighborResult> nearest_enemies_brute(const TrainingSet& set);

/// dne(q)/dnn(q) - 1, where the enemy is taken relative to the label of
/// q's nearest neighbor. Throws kUndefinedDensity when q coincides with a
/// candidate and kSingleClass when the candidates carry only one label.
double chromatic_density(ConstPoint q, const TrainingSet& set);
double chromatic_density(ConstPoint q, const TrainingSet& set,
                         std::span<const PointIndex> candidates);

struct DatasetStats {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t c = 0;
  std::size_t kappa = 0;
  double gamma = 0.0;
  // Pairwise quantities are O(n^2); absent when skipped for large sets.
  std::optional<double> diameter;
  std::optional<double> spread;

  double kappa_fraction() const { return n == 0 ? 0.0 : static_cast<double>(kappa) / n; }
};

/// Sets larger than this skip diameter/spread unless explicitly forced, and
/// find nearest enemies through exact kd-trees instead of a full scan.
inline constexpr std::size_t kQuadraticStatsLimit = 20000;

DatasetStats compute_stats(const TrainingSet& set, bool force_quadratic = false);

/// Largest pairwise distance, by exhaustive scan.
double diameter_brute(const TrainingSet& set);

/// Uniformly rescales coordinates so the diameter becomes 1.
TrainingSet normalize_diameter(const TrainingSet& set);

}  // namespace nnc
