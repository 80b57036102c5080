#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "nnc/error.hpp"
#include "nnc/training_set.hpp"

namespace fixtures {

using nnc::PointIndex;
using nnc::TrainingSet;

// A=(0) red, B=(1) red, C=(3) blue, D=(4) blue.
inline constexpr PointIndex A = 0, B = 1, C = 2, D = 3;

inline TrainingSet d4() {
  nnc::PointMatrix m(4, 1);
  m << 0.0, 1.0, 3.0, 4.0;
  return TrainingSet(m, {0, 0, 1, 1});
}

inline TrainingSet two_points() {
  nnc::PointMatrix m(2, 1);
  m << 0.0, 1.0;
  return TrainingSet(m, {0, 1});
}

// Uniform points in [0,1)^d with uniformly random labels; the first c points
// carry labels 0..c-1 so every class is present.
inline TrainingSet random_set(std::uint64_t seed, std::size_t n, std::size_t d, std::size_t c) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<nnc::Label> lab(0, static_cast<nnc::Label>(c - 1));
  nnc::PointMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  std::vector<nnc::Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) m(i, k) = u(rng);
    labels[i] = i < c ? static_cast<nnc::Label>(i) : lab(rng);
  }
  return TrainingSet(m, labels);
}

// Points in [0,1)^2 labeled by the side of a wavy curve: contiguous classes.
inline TrainingSet wavy_set(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  nnc::PointMatrix m(static_cast<Eigen::Index>(n), 2);
  std::vector<nnc::Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, 0) = u(rng);
    m(i, 1) = u(rng);
    labels[i] = m(i, 1) > 0.5 + 0.2 * std::sin(9.0 * m(i, 0)) ? 1 : 0;
  }
  labels[0] = 0;
  labels[1] = 1;
  return TrainingSet(m, labels);
}

inline std::vector<PointIndex> all_of(const TrainingSet& set) {
  std::vector<PointIndex> ids(set.size());
  for (PointIndex i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

// Independent Euclidean distance, written without the library kernels.
inline double naive_l2(const TrainingSet& set, PointIndex i, const double* q) {
  double s = 0.0;
  for (std::size_t k = 0; k < set.dim(); ++k) {
    const double t = set.coords()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) - q[k];
    s += t * t;
  }
  return std::sqrt(s);
}

// Nearest among `ids` for which keep(i) holds, ties to the lowest index.
inline std::pair<PointIndex, double> naive_nearest(const TrainingSet& set, const double* q,
                                                   const std::vector<PointIndex>& ids,
                                                   const std::function<bool(PointIndex)>& keep) {
  PointIndex best = nnc::kNoPoint;
  double bd = nnc::kInfinity;
  for (PointIndex i : ids) {
    if (!keep(i)) continue;
    const double d = naive_l2(set, i, q);
    if (d < bd || (d == bd && i < best)) {
      best = i;
      bd = d;
    }
  }
  return {best, bd};
}

inline std::vector<double> row_of(const TrainingSet& set, PointIndex i) {
  std::vector<double> r(set.dim());
  for (std::size_t k = 0; k < set.dim(); ++k) {
    r[k] = set.coords()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
  }
  return r;
}

// Error code thrown by fn, if any.
template <typename F>
std::optional<nnc::ErrorCode> error_of(F&& fn) {
  try {
    fn();
  } catch (const nnc::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace fixtures
