#include <algorithm>
#include <string>

#include "nnc/condense.hpp"
#include "condense/internal.hpp"

namespace nnc {

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::kRss: return "rss";
    case Algorithm::kRssFast: return "rss-fast";
    case Algorithm::kSfcnn: return "sfcnn";
    case Algorithm::kFcnn: return "fcnn";
    case Algorithm::kNet: return "net";
    case Algorithm::kHss: return "hss";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kRss, Algorithm::kRssFast, Algorithm::kSfcnn, Algorithm::kFcnn,
                      Algorithm::kNet, Algorithm::kHss}) {
    if (to_string(a) == name) return a;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + std::string(name) + "'");
}

void validate_subset(const CondensedSubset& subset, const TrainingSet& set) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvariantViolation, "invalid subset: " + what);
  };
  if (subset.source_fingerprint != set.fingerprint()) {
    throw Error(ErrorCode::kFingerprintMismatch, "subset was computed on a different training set");
  }
  if (subset.indices.empty()) fail("empty index list");
  std::vector<char> seen_class(set.class_count(), 0);
  for (std::size_t k = 0; k < subset.indices.size(); ++k) {
    const PointIndex i = subset.indices[k];
    if (i >= set.size()) fail("index " + std::to_string(i) + " out of range");
    if (k > 0 && subset.indices[k - 1] >= i) fail("indices not strictly increasing");
    seen_class[set.label(i)] = 1;
  }
  if (std::find(seen_class.begin(), seen_class.end(), 0) != seen_class.end()) {
    fail("some class has no representative");
  }
}

CondensedSubset make_subset(std::vector<PointIndex> selected, Algorithm algo, double alpha,
                            double xi, const TrainingSet& set) {
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  return CondensedSubset{std::move(selected), algo, alpha, xi, set.fingerprint()};
}

namespace detail {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0) || std::isinf(alpha)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be a finite value >= 0");
  }
}

void check_xi(double xi) {
  if (!(xi >= 0.0) || std::isinf(xi)) {
    throw Error(ErrorCode::kInvalidArgument, "xi must be a finite value >= 0");
  }
}

std::vector<PointIndex> order_by_enemy_distance(const std::vector<NeighborResult>& enemies) {
  std::vector<PointIndex> order(enemies.size());
  for (PointIndex i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](PointIndex a, PointIndex b) {
    return enemies[a].distance < enemies[b].distance ||
           (enemies[a].distance == enemies[b].distance && a < b);
  });
  return order;
}

}  // namespace detail

CondensedSubset condense(const TrainingSet& set, Algorithm algo, const CondenseOptions& opts) {
  if (algo != Algorithm::kRssFast && opts.xi != 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "xi only applies to rss-fast");
  }
  switch (algo) {
    case Algorithm::kRss: return alpha_rss(set, opts.alpha);
    case Algorithm::kRssFast: return alpha_rss_fast(set, opts.alpha, opts.xi);
    case Algorithm::kSfcnn: return alpha_sfcnn(set, opts.alpha);
    case Algorithm::kFcnn: return alpha_fcnn(set, opts.alpha);
    case Algorithm::kNet: return alpha_net(set, opts.alpha, opts.prune);
    case Algorithm::kHss: return alpha_hss(set, opts.alpha, opts.force_quadratic);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm");
}

}  // namespace nnc
