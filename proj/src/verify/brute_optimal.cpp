#include <cmath>
#include <numeric>
#include <string>

#include "nnc/core.hpp"
#include "nnc/error.hpp"
#include "nnc/metric.hpp"
#include "nnc/verify.hpp"

namespace nnc {

namespace {

enum class Kind { kSelective, kConsistent };

class Enumerator {
 public:
  Enumerator(const TrainingSet& set, double alpha, Kind kind)
      : set_(set), n_(set.size()), shrink_(1.0 + alpha), kind_(kind), dist_(n_ * n_) {
    if (n_ > kBruteOptimumLimit) {
      throw Error(ErrorCode::kTooLarge, "exhaustive optimum limited to " +
                                            std::to_string(kBruteOptimumLimit) + " points");
    }
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
      throw Error(ErrorCode::kInvalidArgument, "alpha must be finite and >= 0");
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        dist_[i * n_ + j] = distance(set.row(i), set.row(j), set.metric());
      }
    }
    for (std::size_t i = 0; i < n_; ++i) enemy_.push_back(nearest_enemy_brute(i, set).distance);
  }

  std::vector<PointIndex> run() {
    std::vector<PointIndex> pick;
    for (std::size_t k = 2; k <= n_; ++k) {
      pick.resize(k);
      std::iota(pick.begin(), pick.end(), PointIndex{0});
      do {
        if (passes(pick)) return pick;
      } while (next_combination(pick));
    }
    return pick;  // unreachable: P itself always passes
  }

 private:
  bool next_combination(std::vector<PointIndex>& pick) const {
    const std::size_t k = pick.size();
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n_ - k + (i - 1)) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    return true;
  }

  bool passes(const std::vector<PointIndex>& pick) const {
    bool two_classes = false;
    for (PointIndex r : pick) two_classes |= set_.label(r) != set_.label(pick[0]);
    if (!two_classes) return false;
    for (std::size_t p = 0; p < n_; ++p) {
      double nn = kInfinity;
      double ne = kInfinity;
      for (PointIndex r : pick) {
        const double d = dist_[p * n_ + r];
        nn = std::min(nn, d);
        if (set_.label(r) != set_.label(p)) ne = std::min(ne, d);
      }
      const double bound = (kind_ == Kind::kSelective ? enemy_[p] : ne) / shrink_;
      if (!certified_less(nn, bound)) return false;
    }
    return true;
  }

  const TrainingSet& set_;
  std::size_t n_;
  double shrink_;
  Kind kind_;
  std::vector<double> dist_;
  std::vector<double> enemy_;
};

}  // namespace

CondensedSubset brute_min_selective(const TrainingSet& set, double alpha) {
  return make_subset(Enumerator(set, alpha, Kind::kSelective).run(), Algorithm::kRss, alpha, 0.0,
                     set);
}

CondensedSubset brute_min_consistent(const TrainingSet& set, double alpha) {
  return make_subset(Enumerator(set, alpha, Kind::kConsistent).run(), Algorithm::kRss, alpha, 0.0,
                     set);
}

}  // namespace nnc
