#include <queue>
#include <string>

#include "nnc/condense.hpp"
#include "nnc/core.hpp"
#include "nnc/parallel.hpp"
#include "condense/internal.hpp"

namespace nnc {

CondensedSubset alpha_hss(const TrainingSet& set, double alpha, bool force_quadratic) {
  detail::check_alpha(alpha);
  const std::size_t n = set.size();
  if (n > kHssQuadraticLimit && !force_quadratic) {
    throw Error(ErrorCode::kTooLarge, "alpha_hss materializes O(n^2) sets; n=" +
                                          std::to_string(n) + " needs force_quadratic");
  }
  const std::vector<NeighborResult> enemies = nearest_enemies_brute(set);
  const Metric& m = set.metric();

  // hits[q] lists the sets N_p that q belongs to (q hits N_p).
  std::vector<std::vector<PointIndex>> hits(n);
  parallel_for(n, [&](std::size_t q) {
    for (PointIndex p = 0; p < n; ++p) {
      const double threshold = enemies[p].distance / (1.0 + alpha);
      if (certified_less(distance(set.row(q), set.row(p), m), threshold)) hits[q].push_back(p);
    }
  });

  // Lazy greedy: heap keys are upper bounds on each element's gain since
  // gains only shrink. Order is (gain desc, index asc).
  struct Entry {
    std::size_t gain;
    PointIndex index;
    bool operator<(const Entry& o) const {
      return gain < o.gain || (gain == o.gain && index > o.index);
    }
  };
  std::priority_queue<Entry> heap;
  for (PointIndex q = 0; q < n; ++q) heap.push({hits[q].size(), q});

  std::vector<char> hit(n, 0);
  std::size_t unhit = n;
  std::vector<PointIndex> selected;
  while (unhit > 0) {
    const Entry top = heap.top();
    heap.pop();
    std::size_t gain = 0;
    for (PointIndex p : hits[top.index]) gain += hit[p] ? 0 : 1;
    if (gain != top.gain) {
      heap.push({gain, top.index});
      continue;
    }
    selected.push_back(top.index);
    for (PointIndex p : hits[top.index]) {
      if (!hit[p]) {
        hit[p] = 1;
        --unhit;
      }
    }
  }
  return make_subset(std::move(selected), Algorithm::kHss, alpha, 0.0, set);
}

}  // namespace nnc
