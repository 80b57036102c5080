#include <algorithm>
#include <cmath>
#include <sstream>

#include "nnc/core.hpp"
#include "nnc/error.hpp"
#include "nnc/parallel.hpp"
#include "verify/class_index.hpp"
#include "verify/internal.hpp"

namespace nnc {

namespace detail {

std::vector<double> to_vector(ConstPoint q) { return {q.data(), q.data() + q.size()}; }

void require_multiclass_subset(const TrainingSet& set, std::span<const PointIndex> subset) {
  std::vector<char> seen(set.class_count(), 0);
  std::size_t labels = 0;
  for (PointIndex i : subset) {
    if (i >= set.size()) {
      throw Error(ErrorCode::kInvariantViolation, "subset index out of range");
    }
    if (!seen[set.label(i)]) {
      seen[set.label(i)] = 1;
      ++labels;
    }
  }
  if (labels < 2) {
    throw Error(ErrorCode::kSingleClass,
                "subset represents fewer than two classes: enemy distance undefined");
  }
}

VerificationReport run_sampled(
    Criterion criterion, const PointMatrix& queries, std::uint64_t seed,
    const std::function<std::optional<Witness>(ConstPoint)>& check) {
  std::vector<std::optional<Witness>> found(static_cast<std::size_t>(queries.rows()));
  parallel_for(found.size(), [&](std::size_t r) {
    found[r] = check(queries.row(static_cast<Eigen::Index>(r)));
  });
  VerificationReport report;
  report.criterion = criterion;
  report.rng_seed = seed;
  report.samples_tested = found.size();
  for (auto& w : found) {
    if (w) report.violations.push_back(std::move(*w));
  }
  report.passed = report.violations.empty();
  return report;
}

}  // namespace detail

namespace {

std::string describe(const char* what, PointIndex p, double observed, double required) {
  std::ostringstream os;
  os.precision(17);
  os << what << " at point " << p << ": " << observed << " is not below " << required;
  return os.str();
}

// Exhaustive per-point check: dnn(p,R) < enemy(p)/(1+alpha), where the
// enemy distance comes from `enemy_side`.
VerificationReport check_points(const TrainingSet& set, std::span<const PointIndex> subset,
                                double alpha, Criterion criterion,
                                std::span<const PointIndex> enemy_side) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be finite and >= 0");
  }
  detail::require_multiclass_subset(set, subset);
  const detail::ClassIndex in_r(set, subset);
  const detail::ClassIndex in_e(set, enemy_side);
  const char* what = criterion == Criterion::kAlphaSelective ? "alpha-selective"
                                                              : "alpha-consistent";

  std::vector<std::optional<Witness>> found(set.size());
  parallel_for(set.size(), [&](std::size_t p) {
    const auto q = set.row(p);
    const double dnn = in_r.nearest(q).distance;
    const double dne = in_e.nearest_other_label(q, set.label(p)).distance;
    const double required = dne / (1.0 + alpha);
    if (!certified_less(dnn, required)) {
      found[p] = Witness{detail::to_vector(q), p, dnn, required,
                         describe(what, p, dnn, required)};
    }
  });
  VerificationReport report;
  report.criterion = criterion;
  report.samples_tested = set.size();
  for (auto& w : found) {
    if (w) report.violations.push_back(std::move(*w));
  }
  report.passed = report.violations.empty();
  return report;
}

std::vector<PointIndex> all_points(const TrainingSet& set) {
  std::vector<PointIndex> ids(set.size());
  for (PointIndex i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

}  // namespace

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::kAlphaConsistent: return "consistent";
    case Criterion::kAlphaSelective: return "selective";
    case Criterion::kDensityBound: return "density-bound";
    case Criterion::kCoreset: return "coreset";
    case Criterion::kApproxCoreset: return "approx-coreset";
    case Criterion::kWeakCoreset: return "weak-coreset";
  }
  return "?";
}

Criterion parse_criterion(std::string_view name) {
  for (Criterion c : {Criterion::kAlphaConsistent, Criterion::kAlphaSelective, Criterion::kDensityBound,
                      Criterion::kCoreset, Criterion::kApproxCoreset, Criterion::kWeakCoreset}) {
    if (name == to_string(c)) return c;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown criterion '" + std::string(name) + "'");
}

VerificationReport check_alpha_consistent(const TrainingSet& set,
                                          std::span<const PointIndex> subset, double alpha) {
  return check_points(set, subset, alpha, Criterion::kAlphaConsistent, subset);
}

VerificationReport check_alpha_selective(const TrainingSet& set,
                                         std::span<const PointIndex> subset, double alpha) {
  const std::vector<PointIndex> everything = all_points(set);
  return check_points(set, subset, alpha, Criterion::kAlphaSelective, everything);
}

VerificationReport check_lemma1(const TrainingSet& set, std::span<const PointIndex> subset,
                                double alpha, const QuerySampler& sampler) {
  if (!check_alpha_consistent(set, subset, alpha).passed) {
    throw Error(ErrorCode::kPrecondition, "density bound needs an alpha-consistent subset");
  }
  const std::vector<PointIndex> everything = all_points(set);
  const detail::ClassIndex in_p(set, everything);
  const detail::ClassIndex in_r(set, subset);
  const auto density = [&](const detail::ClassIndex& idx, ConstPoint q) {
    const NeighborResult nn = idx.nearest(q);
    const NeighborResult ne = idx.nearest_other_label(q, set.label(nn.index));
    return ne.distance / nn.distance - 1.0;
  };

  const PointMatrix queries = sampler.sample(set);
  return detail::run_sampled(
      Criterion::kDensityBound, queries, sampler.seed, [&](ConstPoint q) -> std::optional<Witness> {
        const double dp = density(in_p, q);
        const double dr = density(in_r, q);
        const double bound = (alpha * dp - 2.0) / (dp + alpha + 3.0);
        if (certified_greater(dr, bound)) return std::nullopt;
        std::ostringstream os;
        os.precision(17);
        os << "density w.r.t. subset " << dr << " does not exceed bound " << bound
           << " (density w.r.t. set " << dp << ")";
        return Witness{detail::to_vector(q), std::nullopt, dr, bound, os.str()};
      });
}

}  // namespace nnc
