#include "nnc/condense.hpp"
#include "nnc/core.hpp"
#include "condense/internal.hpp"

namespace nnc {

CondensedSubset alpha_rss(const TrainingSet& set, double alpha) {
  detail::check_alpha(alpha);
  const std::vector<NeighborResult> enemies = nearest_enemies_brute(set);
  const Metric& m = set.metric();

  std::vector<PointIndex> selected;
  for (PointIndex p : detail::order_by_enemy_distance(enemies)) {
    const double threshold = enemies[p].distance / (1.0 + alpha);
    bool covered = false;
    for (PointIndex r : selected) {
      if (certified_less(distance(set.row(p), set.row(r), m), threshold)) {
        covered = true;
        break;
      }
    }
    if (!covered) selected.push_back(p);
  }
  return make_subset(std::move(selected), Algorithm::kRss, alpha, 0.0, set);
}

CondensedSubset alpha_rss_fast(const TrainingSet& set, double alpha, double xi,
                               KdTreeParams params) {
  detail::check_alpha(alpha);
  detail::check_xi(xi);
  const std::vector<NeighborResult> enemies = nearest_enemy_all(set, xi, params);

  // With approximate distances dnn' >= dnn and dne' <= (1+xi) dne, the
  // rejection (1+xi) dnn' < dne'/(1+alpha) - (1+xi) slack still implies
  // dnn < dne/(1+alpha) - slack. At xi = 0 this is the alpha_rss test.
  const double widen = 1.0 + xi;
  DynamicKdTree active(set, xi, params);
  std::vector<PointIndex> selected;
  for (PointIndex p : detail::order_by_enemy_distance(enemies)) {
    bool covered = false;
    if (active.active_count() > 0) {
      const NeighborResult nn = active.nearest(set.row(p));
      covered = certified_less(widen * nn.distance, enemies[p].distance / (1.0 + alpha),
                               widen * kStrictSlack);
    }
    if (!covered) {
      active.insert(p);
      selected.push_back(p);
    }
  }
  return make_subset(std::move(selected), Algorithm::kRssFast, alpha, xi, set);
}

}  // namespace nnc
