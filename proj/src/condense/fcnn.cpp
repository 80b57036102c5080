#include <algorithm>

#include "nnc/condense.hpp"
#include "nnc/core.hpp"
#include "nnc/parallel.hpp"
#include "condense/internal.hpp"

namespace nnc {

std::vector<PointIndex> voren_alpha(PointIndex p, std::span<const PointIndex> subset,
                                    const TrainingSet& set, double alpha) {
  detail::check_alpha(alpha);
  if (std::find(subset.begin(), subset.end(), p) == subset.end()) {
    throw Error(ErrorCode::kPrecondition, "voren_alpha: p must belong to the subset");
  }
  std::vector<char> member(set.size(), 0);
  for (PointIndex r : subset) member[r] = 1;

  std::vector<PointIndex> out;
  for (PointIndex q = 0; q < set.size(); ++q) {
    if (member[q]) continue;
    const NeighborResult nn = nearest_neighbor_brute(set.row(q), set, subset);
    if (nn.index != p) continue;
    if (set.label(q) != set.label(p)) {
      out.push_back(q);
      continue;
    }
    const NeighborResult ne = nearest_other_label_brute(set.row(q), set.label(q), set, subset);
    if (!detail::alpha_satisfied(nn.distance, ne.distance, alpha)) out.push_back(q);
  }
  return out;
}

std::vector<PointIndex> class_representatives(const TrainingSet& set) {
  const auto members = set.class_members();
  std::vector<PointIndex> reps;
  reps.reserve(members.size());
  for (const auto& ids : members) {
    Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(static_cast<Eigen::Index>(set.dim()));
    for (PointIndex i : ids) mean += set.row(i);
    mean /= static_cast<double>(ids.size());
    reps.push_back(nearest_neighbor_brute(mean, set, ids).index);
  }
  return reps;
}

namespace {

// Incremental state of the FCNN family: for every point, its nearest
// neighbor in R and the distance to its nearest enemy in R. Adding a point
// costs one pass over P.
class VorenState {
 public:
  VorenState(const TrainingSet& set, double alpha)
      : set_(set), alpha_(alpha), member_(set.size(), 0), nn_(set.size()), ne_(set.size()) {}

  void add(PointIndex r) {
    if (member_[r]) return;
    member_[r] = 1;
    selected_.push_back(r);
    const Metric& m = set_.metric();
    const Label lr = set_.label(r);
    parallel_for(set_.size(), [&](std::size_t q) {
      const double d = distance(set_.row(q), set_.row(r), m);
      nn_[q].offer(r, d);
      if (set_.label(q) != lr) ne_[q].offer(r, d);
    });
  }

  // One candidate per representative p in R: among q in voren_alpha(p),
  // the one closest to p (ties by index). Indexed by p.
  std::vector<NeighborResult> candidates() const {
    std::vector<NeighborResult> best(set_.size());
    for (PointIndex q = 0; q < set_.size(); ++q) {
      if (member_[q]) continue;
      const NeighborResult& nn = nn_[q];
      const PointIndex p = nn.index;
      const bool unsatisfied = set_.label(q) != set_.label(p) ||
                               !detail::alpha_satisfied(nn.distance, ne_[q].distance, alpha_);
      if (unsatisfied) best[p].offer(q, nn.distance);
    }
    return best;
  }

  const std::vector<PointIndex>& selected() const { return selected_; }

 private:
  const TrainingSet& set_;
  double alpha_;
  std::vector<char> member_;
  std::vector<NeighborResult> nn_;
  std::vector<NeighborResult> ne_;
  std::vector<PointIndex> selected_;
};

CondensedSubset run_fcnn_family(const TrainingSet& set, double alpha, bool batch) {
  detail::check_alpha(alpha);
  VorenState state(set, alpha);

  std::vector<PointIndex> pending = class_representatives(set);
  std::sort(pending.begin(), pending.end());
  while (!pending.empty()) {
    if (batch) {
      for (PointIndex s : pending) state.add(s);
    } else {
      state.add(pending.front());
    }
    pending.clear();
    // Candidates are gathered per representative in increasing index
    // order, so pending.front() belongs to the lowest-index representative.
    const std::vector<NeighborResult> per_rep = state.candidates();
    for (PointIndex p = 0; p < per_rep.size(); ++p) {
      if (per_rep[p].found()) pending.push_back(per_rep[p].index);
    }
  }
  return make_subset(state.selected(), batch ? Algorithm::kFcnn : Algorithm::kSfcnn, alpha, 0.0,
                     set);
}

}  // namespace

CondensedSubset alpha_sfcnn(const TrainingSet& set, double alpha) {
  return run_fcnn_family(set, alpha, false);
}

CondensedSubset alpha_fcnn(const TrainingSet& set, double alpha) {
  return run_fcnn_family(set, alpha, true);
}

}  // namespace nnc
