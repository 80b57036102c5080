#pragma once

#include <cstdint>
#include <vector>

#include "nnc/training_set.hpp"

namespace nnc {

struct KdTreeParams {
  std::size_t leaf_size = 8;
  // Above this dimension the tree degenerates into one leaf (linear scan).
  std::size_t max_tree_dim = 16;
};

/// Static kd-tree over a subset of a training set's points answering
/// (1+xi)-approximate nearest-neighbor queries. With xi = 0 answers are
/// exact and ties go to the lowest point index, matching the brute scans.
/// The tree keeps a reference to `set`, which must outlive it.
class KdTree {
 public:
  KdTree(const TrainingSet& set, std::vector<PointIndex> ids, double xi = 0.0,
         KdTreeParams params = {});

  /// Tree over every point of `set`.
  explicit KdTree(const TrainingSet& set, double xi = 0.0, KdTreeParams params = {});

  NeighborResult nearest(ConstPoint q) const;

  double xi() const { return xi_; }
  std::size_t size() const { return perm_.size(); }
  std::size_t node_count() const { return nodes_.size(); }

 protected:
  struct Node {
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::int32_t parent = -1;
    bool leaf() const { return left < 0; }
  };

  // Search skipping nodes with zero `node_live` counts and points whose
  // `point_live` flag is clear; both null for a static search.
  NeighborResult search(ConstPoint q, const std::vector<std::uint32_t>* node_live,
                        const std::vector<char>* point_live) const;

  const TrainingSet* set_;
  double xi_;
  KdTreeParams params_;
  std::vector<PointIndex> perm_;
  std::vector<Node> nodes_;
  PointMatrix lo_;  // per-node bounding box, one row per node
  PointMatrix hi_;
  std::vector<std::int32_t> leaf_of_;  // point id -> leaf node (ids in the tree only)

 private:
  std::int32_t build(std::uint32_t begin, std::uint32_t end, std::int32_t parent);
};

/// Insert-only dynamic index: a KdTree over all of P whose points start
/// inactive. insert() activates a point by bumping live counts along its
/// leaf-to-root path; queries ignore inactive points and empty subtrees.
class DynamicKdTree : private KdTree {
 public:
  explicit DynamicKdTree(const TrainingSet& set, double xi = 0.0, KdTreeParams params = {});

  /// Activates point `i`. Returns false (and does nothing) when `i` is
  /// already active.
  bool insert(PointIndex i);

  /// Throws kEmptyActiveSet before the first insert.
  NeighborResult nearest(ConstPoint q) const;

  bool active(PointIndex i) const { return point_live_[i] != 0; }
  std::size_t active_count() const { return active_count_; }
  using KdTree::xi;

 private:
  std::vector<std::uint32_t> node_live_;
  std::vector<char> point_live_;
  std::size_t active_count_ = 0;
};

/// Builds a static index over every point of `set`.
KdTree build_index(const TrainingSet& set, double xi, KdTreeParams params = {});

/// (1+xi)-approximate nearest neighbor of `q` in `index`.
NeighborResult query_ann(const KdTree& index, ConstPoint q);

/// One kd-tree per class. An enemy query for label l consults exactly the
/// trees of the other classes and keeps the best answer.
class EnemyOracle {
 public:
  explicit EnemyOracle(const TrainingSet& set, double xi = 0.0, KdTreeParams params = {});

  NeighborResult nearest_enemy(PointIndex p) const;
  NeighborResult nearest_other_label(ConstPoint q, Label label) const;

 private:
  const TrainingSet* set_;
  std::vector<KdTree> per_class_;
};

/// (1+xi)-approximate nearest enemy of every point, computed in parallel.
std::vector<NeighborResult> nearest_enemy_all(const TrainingSet& set, double xi,
                                              KdTreeParams params = {});

}  // namespace nnc
