#include "nnc/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>
#include <string>
#include <unordered_set>

#include "nnc/error.hpp"
#include "nnc/kd_tree.hpp"

namespace nnc {

namespace {

std::string row_key(const double* row, std::size_t d) {
  std::string key(d * sizeof(double), '\0');
  for (std::size_t k = 0; k < d; ++k) {
    const double v = row[k] == 0.0 ? 0.0 : row[k];
    std::memcpy(key.data() + k * sizeof(double), &v, sizeof(double));
  }
  return key;
}

void separate_from_members(const TrainingSet& set, PointMatrix& queries) {
  std::unordered_set<std::string> members;
  members.reserve(set.size());
  for (PointIndex i = 0; i < set.size(); ++i) {
    members.insert(row_key(set.coords().row(static_cast<Eigen::Index>(i)).data(), set.dim()));
  }
  for (Eigen::Index r = 0; r < queries.rows(); ++r) {
    while (members.count(row_key(queries.row(r).data(), set.dim())) != 0) {
      const double x = queries(r, 0);
      queries(r, 0) = std::max(x + 1e-9, std::nextafter(x, kInfinity));
    }
  }
}

struct Box {
  Eigen::RowVectorXd lo;
  Eigen::RowVectorXd hi;
};

Box bounding_box(const TrainingSet& set, double pad) {
  Box b{set.coords().colwise().minCoeff(), set.coords().colwise().maxCoeff()};
  const Eigen::RowVectorXd extent = b.hi - b.lo;
  b.lo -= pad * extent;
  b.hi += pad * extent;
  return b;
}

}  // namespace

std::string_view to_string(SamplerStrategy s) {
  switch (s) {
    case SamplerStrategy::kUniformBox: return "uniform";
    case SamplerStrategy::kGaussianMembers: return "gaussian";
    case SamplerStrategy::kGrid2d: return "grid";
  }
  return "?";
}

SamplerStrategy parse_sampler(std::string_view name) {
  if (name == "uniform") return SamplerStrategy::kUniformBox;
  if (name == "gaussian") return SamplerStrategy::kGaussianMembers;
  if (name == "grid") return SamplerStrategy::kGrid2d;
  throw Error(ErrorCode::kInvalidArgument, "unknown sampler '" + std::string(name) + "'");
}

PointMatrix grid_queries(const TrainingSet& set, std::size_t resolution) {
  if (set.dim() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "grid queries need a 2-D set");
  }
  if (resolution < 2) throw Error(ErrorCode::kInvalidArgument, "grid resolution must be >= 2");
  const Box b = bounding_box(set, 0.0);
  PointMatrix out(static_cast<Eigen::Index>(resolution * resolution), 2);
  const double step = 1.0 / static_cast<double>(resolution - 1);
  for (std::size_t iy = 0; iy < resolution; ++iy) {
    for (std::size_t ix = 0; ix < resolution; ++ix) {
      const auto r = static_cast<Eigen::Index>(iy * resolution + ix);
      out(r, 0) = b.lo[0] + (b.hi[0] - b.lo[0]) * (static_cast<double>(ix) * step);
      out(r, 1) = b.lo[1] + (b.hi[1] - b.lo[1]) * (static_cast<double>(iy) * step);
    }
  }
  separate_from_members(set, out);
  return out;
}

PointMatrix QuerySampler::sample(const TrainingSet& set) const {
  if (count == 0) throw Error(ErrorCode::kInvalidArgument, "sample count must be positive");
  if (strategy == SamplerStrategy::kGrid2d) {
    const auto g = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(count))));
    return grid_queries(set, std::max<std::size_t>(g, 2));
  }

  std::mt19937_64 rng(seed);
  const auto d = static_cast<Eigen::Index>(set.dim());
  PointMatrix out(static_cast<Eigen::Index>(count), d);

  if (strategy == SamplerStrategy::kUniformBox) {
    const Box b = bounding_box(set, 0.05);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index k = 0; k < d; ++k) out(r, k) = b.lo[k] + (b.hi[k] - b.lo[k]) * u(rng);
    }
  } else {
    const std::vector<NeighborResult> enemies = nearest_enemy_all(set, 0.0);
    std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
    std::normal_distribution<double> z(0.0, 1.0);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      const PointIndex p = pick(rng);
      const double sigma = 0.5 * enemies[p].distance;
      for (Eigen::Index k = 0; k < d; ++k) out(r, k) = set.row(p)[k] + sigma * z(rng);
    }
  }
  separate_from_members(set, out);
  return out;
}

}  // namespace nnc
