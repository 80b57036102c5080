#include <algorithm>

#include "nnc/condense.hpp"
#include "nnc/core.hpp"
#include "condense/internal.hpp"

namespace nnc {

namespace {

// Backward elimination over a selected subset. Keeps, for every point of
// P, its nearest neighbor and nearest enemy within the current subset, so a
// tentative removal only re-scans the points whose neighbor or enemy was
// the removed point.
class Pruner {
 public:
  Pruner(const TrainingSet& set, std::vector<PointIndex> selected, double alpha)
      : set_(set), alpha_(alpha), member_(set.size(), 0), selected_(std::move(selected)) {
    for (PointIndex r : selected_) member_[r] = 1;
    nn_.resize(set.size());
    ne_.resize(set.size());
    for (PointIndex q = 0; q < set.size(); ++q) rescan(q, kNoPoint, nn_[q], ne_[q]);
  }

  void run(const std::vector<NeighborResult>& enemies) {
    std::vector<PointIndex> order = selected_;
    std::sort(order.begin(), order.end(), [&](PointIndex a, PointIndex b) {
      return enemies[a].distance > enemies[b].distance ||
             (enemies[a].distance == enemies[b].distance && a < b);
    });
    for (PointIndex r : order) try_remove(r);
  }

  std::vector<PointIndex> selection() const {
    std::vector<PointIndex> out;
    for (PointIndex r : selected_) {
      if (member_[r]) out.push_back(r);
    }
    return out;
  }

 private:
  void rescan(PointIndex q, PointIndex skip, NeighborResult& nn, NeighborResult& ne) const {
    nn = {};
    ne = {};
    const Metric& m = set_.metric();
    for (PointIndex r : selected_) {
      if (!member_[r] || r == skip) continue;
      const double d = distance(set_.row(q), set_.row(r), m);
      nn.offer(r, d);
      if (set_.label(r) != set_.label(q)) ne.offer(r, d);
    }
  }

  void try_remove(PointIndex r) {
    std::vector<std::pair<PointIndex, std::pair<NeighborResult, NeighborResult>>> updates;
    for (PointIndex q = 0; q < set_.size(); ++q) {
      if (nn_[q].index != r && ne_[q].index != r) continue;
      NeighborResult nn, ne;
      rescan(q, r, nn, ne);
      if (!nn.found()) return;  // subset would become empty
      const bool in_subset = member_[q] && q != r;
      if (!in_subset && !detail::alpha_satisfied(nn.distance, ne.distance, alpha_)) return;
      updates.push_back({q, {nn, ne}});
    }
    member_[r] = 0;
    for (auto& [q, res] : updates) {
      nn_[q] = res.first;
      ne_[q] = res.second;
    }
  }

  const TrainingSet& set_;
  double alpha_;
  std::vector<char> member_;
  std::vector<PointIndex> selected_;
  std::vector<NeighborResult> nn_;
  std::vector<NeighborResult> ne_;
};

}  // namespace

CondensedSubset alpha_net(const TrainingSet& set, double alpha, bool prune) {
  detail::check_alpha(alpha);
  const std::vector<NeighborResult> enemies = nearest_enemies_brute(set);
  double gamma = kInfinity;
  for (const auto& e : enemies) gamma = std::min(gamma, e.distance);
  const double radius = gamma / (1.0 + alpha);
  const Metric& m = set.metric();

  std::vector<PointIndex> net;
  for (PointIndex p = 0; p < set.size(); ++p) {
    bool covered = false;
    for (PointIndex s : net) {
      if (certified_less(distance(set.row(p), set.row(s), m), radius)) {
        covered = true;
        break;
      }
    }
    if (!covered) net.push_back(p);
  }

  if (prune) {
    Pruner pruner(set, std::move(net), alpha);
    pruner.run(enemies);
    net = pruner.selection();
  }
  return make_subset(std::move(net), Algorithm::kNet, alpha, 0.0, set);
}

}  // namespace nnc
