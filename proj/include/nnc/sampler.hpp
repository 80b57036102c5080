#pragma once

#include <cstdint>
#include <string_view>

#include "nnc/training_set.hpp"

namespace nnc {

enum class SamplerStrategy {
  kUniformBox,       // uniform in the bounding box of P, padded by 5% per side
  kGaussianMembers,  // member + N(0, (dne/2)^2) per coordinate: hugs class boundaries
  kGrid2d,           // regular grid over the bounding box (2-D sets only)
};

std::string_view to_string(SamplerStrategy s);
SamplerStrategy parse_sampler(std::string_view name);

/// Deterministic query generator. Never emits the exact coordinates of a
/// training point: colliding samples are nudged by 1e-9 on the first axis.
struct QuerySampler {
  SamplerStrategy strategy = SamplerStrategy::kUniformBox;
  std::size_t count = 10000;
  std::uint64_t seed = 42;

  /// One query per row. The grid strategy emits round(sqrt(count))^2 rows.
  PointMatrix sample(const TrainingSet& set) const;
};

/// Regular res x res grid over the bounding box of a 2-D set, row-major in y
/// then x, with member collisions nudged as above.
PointMatrix grid_queries(const TrainingSet& set, std::size_t resolution);

}  // namespace nnc
