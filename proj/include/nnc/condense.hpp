#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "nnc/kd_tree.hpp"
#include "nnc/training_set.hpp"

namespace nnc {

enum class Algorithm { kRss, kRssFast, kSfcnn, kFcnn, kNet, kHss };

/// CLI / file-format names: rss, rss-fast, sfcnn, fcnn, net, hss.
std::string_view to_string(Algorithm algo);
Algorithm parse_algorithm(std::string_view name);

/// Selected subset R of a training set plus how it was produced.
struct CondensedSubset {
  std::vector<PointIndex> indices;  // strictly increasing
  Algorithm algorithm = Algorithm::kRss;
  double alpha = 0.0;
  double xi = 0.0;
  std::uint64_t source_fingerprint = 0;
};

/// Throws kInvariantViolation unless `subset` is a non-empty, sorted,
/// duplicate-free, in-range index list covering every class of `set`.
/// Also rejects a fingerprint that does not match `set`.
void validate_subset(const CondensedSubset& subset, const TrainingSet& set);

/// Sorts and packages a selection.
CondensedSubset make_subset(std::vector<PointIndex> selected, Algorithm algo, double alpha,
                            double xi, const TrainingSet& set);

/// Points scanned in increasing nearest-enemy distance (ties by index); p
/// joins R unless some r in R is certifiably closer than dne(p)/(1+alpha).
/// Quadratic: exhaustive enemy search and exhaustive scans over R.
CondensedSubset alpha_rss(const TrainingSet& set, double alpha);

/// Same selection driven by (1+xi)-approximate searches: per-class
/// kd-trees for the enemy stage and an insert-only kd-tree over R for the
/// selection stage. Admission is widened by (1+xi) so the output stays
/// alpha-selective; xi = 0 reproduces alpha_rss exactly.
CondensedSubset alpha_rss_fast(const TrainingSet& set, double alpha, double xi,
                               KdTreeParams params = {});

/// Points q outside R whose nearest neighbor in R is p and that are either
/// enemies of p or same-class points whose chromatic density w.r.t. R does
/// not certifiably exceed alpha.
std::vector<PointIndex> voren_alpha(PointIndex p, std::span<const PointIndex> subset,
                                    const TrainingSet& set, double alpha);

/// Per-class representative: the member nearest the class mean.
std::vector<PointIndex> class_representatives(const TrainingSet& set);

/// Adds one voren candidate per iteration (the one of the lowest-index
/// representative), starting from the lowest-index class representative.
CondensedSubset alpha_sfcnn(const TrainingSet& set, double alpha);

/// Batch variant: all class representatives first, then every voren
/// candidate of an iteration at once.
CondensedSubset alpha_fcnn(const TrainingSet& set, double alpha);

/// Greedy gamma/(1+alpha)-net in index order. With `prune`, points are
/// then dropped greedily in decreasing nearest-enemy distance whenever the
/// remainder stays alpha-consistent.
CondensedSubset alpha_net(const TrainingSet& set, double alpha, bool prune = false);

/// Above this size alpha_hss refuses to materialize its set family unless forced.
inline constexpr std::size_t kHssQuadraticLimit = 20000;

/// Greedy hitting set of {N_p : p in P}, N_p = points certifiably closer to
/// p than dne(p)/(1+alpha).
CondensedSubset alpha_hss(const TrainingSet& set, double alpha, bool force_quadratic = false);

struct CondenseOptions {
  double alpha = 0.0;
  double xi = 0.0;
  bool prune = false;
  bool force_quadratic = false;
};

/// Dispatches to one of the algorithms above.
CondensedSubset condense(const TrainingSet& set, Algorithm algo, const CondenseOptions& opts);

}  // namespace nnc
