#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nnc/verify.hpp"

namespace nnc::detail {

std::vector<double> to_vector(ConstPoint q);

/// Requires R to be a valid subset of `set` holding at least two classes.
void require_multiclass_subset(const TrainingSet& set, std::span<const PointIndex> subset);

/// Runs `check` on every sample in parallel and gathers witnesses in sample order.
VerificationReport run_sampled(
    Criterion criterion, const PointMatrix& queries, std::uint64_t seed,
    const std::function<std::optional<Witness>(ConstPoint)>& check);

}  // namespace nnc::detail
