#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nnc/condense.hpp"
#include "nnc/sampler.hpp"
#include "nnc/training_set.hpp"

namespace nnc {

enum class Criterion {
  kAlphaConsistent,
  kAlphaSelective,
  kDensityBound,
  kCoreset,
  kApproxCoreset,
  kWeakCoreset,
};

/// CLI names: consistent, selective, density-bound, coreset, approx-coreset, weak-coreset.
std::string_view to_string(Criterion c);
Criterion parse_criterion(std::string_view name);

/// One failing instance. `query` holds the coordinates that were checked
/// (a training point's coordinates for the exhaustive checks); `point` is
/// the training point ordinal when there is one.
struct Witness {
  std::vector<double> query;
  std::optional<PointIndex> point;
  double observed = 0.0;
  double required = 0.0;
  std::string detail;
};

struct VerificationReport {
  Criterion criterion = Criterion::kAlphaConsistent;
  bool passed = true;
  std::vector<Witness> violations;
  std::size_t samples_tested = 0;
  std::uint64_t rng_seed = 0;
  // Weak-coreset only: how many samples fell inside Q_beta.
  std::optional<std::size_t> samples_in_region;
};

/// dnn(p,R) < dne(p,R)/(1+alpha) for every p in P (strict, 1e-9 slack).
/// Throws kSingleClass when R holds one class only.
VerificationReport check_alpha_consistent(const TrainingSet& set, std::span<const PointIndex> subset,
                                          double alpha);

/// dnn(p,R) < dne(p,P)/(1+alpha) for every p in P.
VerificationReport check_alpha_selective(const TrainingSet& set, std::span<const PointIndex> subset,
                                         double alpha);

/// Chromatic density bound for sampled queries:
/// delta(q,R) > (alpha delta(q,P) - 2) / (delta(q,P) + alpha + 3).
/// Throws kPrecondition unless R is alpha-consistent.
VerificationReport check_lemma1(const TrainingSet& set, std::span<const PointIndex> subset,
                                double alpha, const QuerySampler& sampler);

/// For sampled q, the class of nn(q,R) is the class of some point within
/// (1+epsilon) dnn(q,P).
VerificationReport check_coreset(const TrainingSet& set, std::span<const PointIndex> subset,
                                 double epsilon, const QuerySampler& sampler);

/// Like check_coreset, but every r in R within (1+xi) dnn(q,R) must pass.
/// Throws kInvalidArgument unless 0 <= xi < epsilon.
VerificationReport check_approx_coreset(const TrainingSet& set,
                                        std::span<const PointIndex> subset, double xi,
                                        double epsilon, const QuerySampler& sampler);

/// alpha = (epsilon xi + 3 xi + 2) / (epsilon - xi): selectivity level that
/// makes a subset a (xi, epsilon)-coreset.
double alpha_for_approx_coreset(double xi, double epsilon);

/// Sampled queries with delta(q,P) >= 2/alpha must get the same class from
/// R as from P. Throws for alpha = 0 or a subset that is not alpha-consistent.
VerificationReport check_weak_coreset(const TrainingSet& set, std::span<const PointIndex> subset,
                                      double alpha, const QuerySampler& sampler);

/// Size bound kappa * max(1, ceil(log2(1/gamma))) * ceil(4(1+alpha))^(d+1)
/// for alpha-RSS on a diameter-normalized set.
double rss_size_bound(std::size_t kappa, double gamma, double alpha, std::size_t d);

/// Sets larger than this are refused by the exhaustive optimum search.
inline constexpr std::size_t kBruteOptimumLimit = 20;

/// Minimum-cardinality alpha-selective / alpha-consistent subsets by
/// enumeration in increasing size (lexicographic within a size). The
/// `algorithm` field of the result is not meaningful.
CondensedSubset brute_min_selective(const TrainingSet& set, double alpha);
CondensedSubset brute_min_consistent(const TrainingSet& set, double alpha);

}  // namespace nnc
