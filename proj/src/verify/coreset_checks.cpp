#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>

#include "nnc/error.hpp"
#include "nnc/metric.hpp"
#include "verify/class_index.hpp"
#include "verify/internal.hpp"

namespace nnc {

namespace {

std::vector<PointIndex> all_points(const TrainingSet& set) {
  std::vector<PointIndex> ids(set.size());
  for (PointIndex i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be finite and > 0");
  }
}

// The label `label` is among the labels of epsilon-approximate nearest
// neighbors of q in P. Returns the violation record otherwise.
std::optional<Witness> approx_class_check(const detail::ClassIndex& in_p, ConstPoint q,
                                          Label label, double epsilon, double dnn_p) {
  const double required = (1.0 + epsilon) * dnn_p;
  const double observed = in_p.nearest_with_label(q, label).distance;
  if (observed <= required) return std::nullopt;
  std::ostringstream os;
  os.precision(17);
  os << "class " << label << " is at distance " << observed << " > (1+eps) dnn(q,P) = "
     << required;
  return Witness{detail::to_vector(q), std::nullopt, observed, required, os.str()};
}

}  // namespace

VerificationReport check_coreset(const TrainingSet& set, std::span<const PointIndex> subset,
                                 double epsilon, const QuerySampler& sampler) {
  check_epsilon(epsilon);
  detail::require_multiclass_subset(set, subset);
  const std::vector<PointIndex> everything = all_points(set);
  const detail::ClassIndex in_p(set, everything);
  const detail::ClassIndex in_r(set, subset);
  const PointMatrix queries = sampler.sample(set);
  return detail::run_sampled(Criterion::kCoreset, queries, sampler.seed, [&](ConstPoint q) {
    const Label label = set.label(in_r.nearest(q).index);
    return approx_class_check(in_p, q, label, epsilon, in_p.nearest(q).distance);
  });
}

VerificationReport check_approx_coreset(const TrainingSet& set,
                                        std::span<const PointIndex> subset, double xi,
                                        double epsilon, const QuerySampler& sampler) {
  check_epsilon(epsilon);
  if (!(xi >= 0.0) || !(xi < epsilon)) {
    throw Error(ErrorCode::kInvalidArgument, "approximate coreset check needs 0 <= xi < epsilon");
  }
  detail::require_multiclass_subset(set, subset);
  const std::vector<PointIndex> everything = all_points(set);
  const detail::ClassIndex in_p(set, everything);
  const detail::ClassIndex in_r(set, subset);
  const Metric& m = set.metric();
  const PointMatrix queries = sampler.sample(set);
  return detail::run_sampled(
      Criterion::kApproxCoreset, queries, sampler.seed, [&](ConstPoint q) -> std::optional<Witness> {
        const double reach = (1.0 + xi) * in_r.nearest(q).distance;
        const double dnn_p = in_p.nearest(q).distance;
        std::vector<char> tested(set.class_count(), 0);
        for (PointIndex r : subset) {
          const Label label = set.label(r);
          if (tested[label] || distance(q, set.row(r), m) > reach) continue;
          tested[label] = 1;
          if (auto w = approx_class_check(in_p, q, label, epsilon, dnn_p)) {
            w->detail = "xi-candidate " + std::to_string(r) + ": " + w->detail;
            return w;
          }
        }
        return std::nullopt;
      });
}

double alpha_for_approx_coreset(double xi, double epsilon) {
  if (!(xi >= 0.0) || !(xi < epsilon)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha for (xi, epsilon) needs 0 <= xi < epsilon");
  }
  return (epsilon * xi + 3.0 * xi + 2.0) / (epsilon - xi);
}

VerificationReport check_weak_coreset(const TrainingSet& set, std::span<const PointIndex> subset,
                                      double alpha, const QuerySampler& sampler) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kInvalidArgument, "weak coreset check needs alpha > 0 (beta = 2/alpha)");
  }
  if (!check_alpha_consistent(set, subset, alpha).passed) {
    throw Error(ErrorCode::kPrecondition, "weak coreset check needs an alpha-consistent subset");
  }
  const double beta = 2.0 / alpha;
  const std::vector<PointIndex> everything = all_points(set);
  const detail::ClassIndex in_p(set, everything);
  const detail::ClassIndex in_r(set, subset);
  const PointMatrix queries = sampler.sample(set);
  std::atomic<std::size_t> in_region{0};

  VerificationReport report = detail::run_sampled(
      Criterion::kWeakCoreset, queries, sampler.seed, [&](ConstPoint q) -> std::optional<Witness> {
        const NeighborResult nn = in_p.nearest(q);
        const Label expected = set.label(nn.index);
        const double density =
            in_p.nearest_other_label(q, expected).distance / nn.distance - 1.0;
        if (!(density >= beta)) return std::nullopt;
        in_region.fetch_add(1, std::memory_order_relaxed);
        const Label got = set.label(in_r.nearest(q).index);
        if (got == expected) return std::nullopt;
        std::ostringstream os;
        os.precision(17);
        os << "query with density " << density << " >= beta " << beta << " gets class " << got
           << " from the subset, " << expected << " from the set";
        return Witness{detail::to_vector(q), std::nullopt, static_cast<double>(got),
                       static_cast<double>(expected), os.str()};
      });

  report.samples_in_region = in_region.load();
  return report;
}

double rss_size_bound(std::size_t kappa, double gamma, double alpha, std::size_t d) {
  if (!(gamma > 0.0)) throw Error(ErrorCode::kZeroMargin, "size bound needs gamma > 0");
  const double levels = std::max(1.0, std::ceil(std::log2(1.0 / gamma)));
  const double base = std::ceil(4.0 * (1.0 + alpha));
  return static_cast<double>(kappa) * levels * std::pow(base, static_cast<double>(d + 1));
}

}  // namespace nnc
