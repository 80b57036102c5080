#include "nnc/kd_tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "nnc/log.hpp"

namespace nnc {

KdTree::KdTree(const TrainingSet& set, std::vector<PointIndex> ids, double xi,
               KdTreeParams params)
    : set_(&set), xi_(xi), params_(params), perm_(std::move(ids)) {
  if (perm_.empty()) {
    throw Error(ErrorCode::kEmptyCandidates, "cannot build an index over no points");
  }
  if (!(xi_ >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "approximation slack xi must be >= 0");
  }
  if (perm_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kTooLarge, "index supports fewer than 2^32 points");
  }
  for (PointIndex i : perm_) {
    if (i >= set.size()) throw Error(ErrorCode::kInvalidArgument, "index id out of range");
  }
  if (params_.leaf_size == 0) params_.leaf_size = 1;
  if (set.dim() > params_.max_tree_dim) params_.leaf_size = perm_.size();

  const std::size_t max_nodes = 2 * (perm_.size() / params_.leaf_size + 1);
  nodes_.reserve(max_nodes);
  lo_.resize(static_cast<Eigen::Index>(max_nodes), static_cast<Eigen::Index>(set.dim()));
  hi_.resizeLike(lo_);
  leaf_of_.assign(set.size(), -1);
  build(0, static_cast<std::uint32_t>(perm_.size()), -1);
  lo_.conservativeResize(static_cast<Eigen::Index>(nodes_.size()), Eigen::NoChange);
  hi_.conservativeResize(static_cast<Eigen::Index>(nodes_.size()), Eigen::NoChange);
}

KdTree::KdTree(const TrainingSet& set, double xi, KdTreeParams params)
    : KdTree(set,
             [&] {
               std::vector<PointIndex> all(set.size());
               std::iota(all.begin(), all.end(), PointIndex{0});
               return all;
             }(),
             xi, params) {}

std::int32_t KdTree::build(std::uint32_t begin, std::uint32_t end, std::int32_t parent) {
  const auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(Node{begin, end, -1, -1, parent});
  if (static_cast<Eigen::Index>(nodes_.size()) > lo_.rows()) {
    lo_.conservativeResize(lo_.rows() * 2, Eigen::NoChange);
    hi_.conservativeResize(hi_.rows() * 2, Eigen::NoChange);
  }

  const PointMatrix& pts = set_->coords();
  auto lo = lo_.row(id);
  auto hi = hi_.row(id);
  lo = pts.row(static_cast<Eigen::Index>(perm_[begin]));
  hi = lo;
  for (std::uint32_t k = begin + 1; k < end; ++k) {
    const auto r = pts.row(static_cast<Eigen::Index>(perm_[k]));
    lo = lo.cwiseMin(r);
    hi = hi.cwiseMax(r);
  }

  Eigen::Index split_dim = 0;
  const double extent = (hi - lo).maxCoeff(&split_dim);
  if (end - begin <= params_.leaf_size || !(extent > 0.0)) {
    for (std::uint32_t k = begin; k < end; ++k) leaf_of_[perm_[k]] = id;
    return id;
  }

  const std::uint32_t mid = begin + (end - begin) / 2;
  std::nth_element(perm_.begin() + begin, perm_.begin() + mid, perm_.begin() + end,
                   [&](PointIndex a, PointIndex b) {
                     const double va = pts(static_cast<Eigen::Index>(a), split_dim);
                     const double vb = pts(static_cast<Eigen::Index>(b), split_dim);
                     return va < vb || (va == vb && a < b);
                   });
  const std::int32_t left = build(begin, mid, id);
  const std::int32_t right = build(mid, end, id);
  nodes_[static_cast<std::size_t>(id)].left = left;
  nodes_[static_cast<std::size_t>(id)].right = right;
  return id;
}

NeighborResult KdTree::search(ConstPoint q, const std::vector<std::uint32_t>* node_live,
                              const std::vector<char>* point_live) const {
  if (static_cast<std::size_t>(q.size()) != set_->dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "query dimension differs from index");
  }
  const Metric& m = set_->metric();
  const PointMatrix& pts = set_->coords();
  const double shrink = 1.0 + xi_;
  NeighborResult best;

  struct Pending {
    std::int32_t node;
    double bound;
  };
  std::vector<Pending> stack;
  stack.reserve(64);
  stack.push_back({0, box_distance(q, lo_.row(0), hi_.row(0), m)});

  // A subtree is pruned when its box bound exceeds best/(1+xi). For xi = 0
  // equal bounds are still visited so exact ties resolve to the lowest index.
  auto prunable = [&](double bound) {
    return best.found() && bound * shrink > best.distance;
  };

  while (!stack.empty()) {
    const Pending top = stack.back();
    stack.pop_back();
    if (prunable(top.bound)) continue;
    const Node& node = nodes_[static_cast<std::size_t>(top.node)];
    if (node_live && (*node_live)[static_cast<std::size_t>(top.node)] == 0) continue;

    if (node.leaf()) {
      for (std::uint32_t k = node.begin; k < node.end; ++k) {
        const PointIndex i = perm_[k];
        if (point_live && !(*point_live)[i]) continue;
        best.offer(i, distance(q, pts.row(static_cast<Eigen::Index>(i)), m));
      }
      continue;
    }
    const double bl = box_distance(q, lo_.row(node.left), hi_.row(node.left), m);
    const double br = box_distance(q, lo_.row(node.right), hi_.row(node.right), m);
    // Push the farther child first so the nearer one is explored next.
    if (bl <= br) {
      stack.push_back({node.right, br});
      stack.push_back({node.left, bl});
    } else {
      stack.push_back({node.left, bl});
      stack.push_back({node.right, br});
    }
  }
  return best;
}

NeighborResult KdTree::nearest(ConstPoint q) const { return search(q, nullptr, nullptr); }

DynamicKdTree::DynamicKdTree(const TrainingSet& set, double xi, KdTreeParams params)
    : KdTree(set, xi, params), node_live_(nodes_.size(), 0), point_live_(set.size(), 0) {}

bool DynamicKdTree::insert(PointIndex i) {
  if (i >= point_live_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "insert: point index out of range");
  }
  if (point_live_[i]) {
    log_debug("dynamic index: point " + std::to_string(i) + " already active, insert ignored");
    return false;
  }
  point_live_[i] = 1;
  ++active_count_;
  for (std::int32_t n = leaf_of_[i]; n >= 0; n = nodes_[static_cast<std::size_t>(n)].parent) {
    ++node_live_[static_cast<std::size_t>(n)];
  }
  return true;
}

NeighborResult DynamicKdTree::nearest(ConstPoint q) const {
  if (active_count_ == 0) {
    throw Error(ErrorCode::kEmptyActiveSet, "query on a dynamic index with no active points");
  }
  return search(q, &node_live_, &point_live_);
}

KdTree build_index(const TrainingSet& set, double xi, KdTreeParams params) {
  return KdTree(set, xi, params);
}

NeighborResult query_ann(const KdTree& index, ConstPoint q) { return index.nearest(q); }

}  // namespace nnc
