#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "nnc/condense.hpp"
#include "nnc/core.hpp"
#include "nnc/report.hpp"
#include "nnc/verify.hpp"

using namespace nnc;
using namespace fixtures;

namespace {

using Ids = std::vector<PointIndex>;

TrainingSet d4_planar() {
  PointMatrix m(4, 2);
  m << 0, 0, 1, 0, 3, 0, 4, 0;
  return TrainingSet(m, {0, 0, 1, 1});
}

QuerySampler uniform(std::size_t count = 10000, std::uint64_t seed = 42) {
  return {SamplerStrategy::kUniformBox, count, seed};
}

Eigen::Map<const Eigen::RowVectorXd> as_point(const std::vector<double>& v) {
  return {v.data(), static_cast<Eigen::Index>(v.size())};
}

}  // namespace

TEST_CASE("R = P passes every criterion") {
  const TrainingSet set = random_set(1, 80, 2, 3);
  const Ids all = all_of(set);
  for (double a : {0.0, 0.5, 3.0}) {
    CHECK(check_alpha_consistent(set, all, a).passed);
    CHECK(check_alpha_selective(set, all, a).passed);
    CHECK(check_lemma1(set, all, a, uniform(2000)).passed);
  }
  for (double e : {0.1, 1.0}) CHECK(check_coreset(set, all, e, uniform(2000)).passed);
  const VerificationReport weak = check_weak_coreset(set, all, 1.0, uniform(2000));
  CHECK(weak.passed);
  REQUIRE(weak.samples_in_region.has_value());
  CHECK(*weak.samples_in_region <= weak.samples_tested);
}

TEST_CASE("exhaustive criteria on D4") {
  const TrainingSet set = d4();
  const VerificationReport c = check_alpha_consistent(set, Ids{A, C}, 0.0);
  CHECK(c.passed);
  CHECK(c.samples_tested == 4);
  CHECK(error_of([&] { (void)check_alpha_consistent(set, Ids{B}, 0.0); }) ==
        ErrorCode::kSingleClass);
  CHECK(error_of([&] { (void)check_alpha_selective(set, Ids{A, B}, 0.0); }) ==
        ErrorCode::kSingleClass);

  CHECK(check_alpha_selective(set, Ids{B, C}, 1.0).passed);
  const VerificationReport s = check_alpha_selective(set, Ids{B, C}, 3.0);
  CHECK_FALSE(s.passed);
  REQUIRE(s.violations.size() == 2);
  CHECK(*s.violations[0].point == A);
  CHECK(*s.violations[1].point == D);
  CHECK(s.violations[0].observed == 1.0);
  CHECK(s.violations[0].required == 0.75);
}

TEST_CASE("boundary equality counts as a violation") {
  // A: dnn = 1, dne/(1+alpha) = 3/3 = 1 exactly.
  const VerificationReport s = check_alpha_selective(d4(), Ids{B, C}, 2.0);
  CHECK_FALSE(s.passed);
  CHECK(s.violations.size() == 2);
}

TEST_CASE("density bound") {
  const TrainingSet set = d4();
  CHECK(check_lemma1(set, Ids{B, C}, 1.0, uniform()).passed);
  const TrainingSet planar = d4_planar();
  const VerificationReport g =
      check_lemma1(planar, Ids{B, C}, 1.0, {SamplerStrategy::kGrid2d, 10000, 1});
  CHECK(g.passed);
  CHECK(g.samples_tested == 10000);
  CHECK(error_of([&] { (void)check_lemma1(set, Ids{A, D}, 3.0, uniform(10)); }) ==
        ErrorCode::kPrecondition);

  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const TrainingSet r = seed % 2 ? random_set(seed, 150, 2, 3) : wavy_set(seed, 200);
    for (double a : {0.0, 0.5, 1.0}) {
      CHECK(check_lemma1(r, alpha_sfcnn(r, a).indices, a, uniform(10000, seed)).passed);
      CHECK(check_lemma1(r, alpha_rss(r, a).indices, a,
                         {SamplerStrategy::kGaussianMembers, 10000, seed})
                .passed);
    }
  }
}

TEST_CASE("coreset checks") {
  const TrainingSet set = d4();
  CHECK(check_coreset(set, alpha_rss(set, 2.0).indices, 1.0, uniform()).passed);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const TrainingSet r = seed % 2 ? random_set(seed + 10, 150, 2, 3) : wavy_set(seed, 200);
    for (double eps : {0.5, 1.0, 2.0}) {
      const Ids sub = alpha_rss(r, 2.0 / eps).indices;
      CHECK(check_coreset(r, sub, eps, uniform(10000, seed)).passed);
      CHECK(check_coreset(r, sub, eps, {SamplerStrategy::kGaussianMembers, 10000, seed}).passed);
      CHECK(check_alpha_consistent(r, sub, 0.0).passed);
    }
    for (auto [xi, eps] : {std::pair{0.1, 0.5}, std::pair{0.25, 1.0}}) {
      const Ids sub = alpha_rss(r, alpha_for_approx_coreset(xi, eps)).indices;
      CHECK(check_approx_coreset(r, sub, xi, eps, uniform(10000, seed)).passed);
    }
  }
}

TEST_CASE("approximate coreset constants and reductions") {
  CHECK(alpha_for_approx_coreset(0.0, 1.0) == 2.0);
  CHECK(alpha_for_approx_coreset(0.1, 0.5) == doctest::Approx(5.875).epsilon(1e-12));
  CHECK(alpha_for_approx_coreset(0.25, 1.0) == doctest::Approx(4.0).epsilon(1e-12));
  const TrainingSet set = wavy_set(3, 200);
  CHECK(error_of([&] { (void)check_approx_coreset(set, all_of(set), 0.5, 0.5, uniform(10)); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(error_of([] { (void)alpha_for_approx_coreset(1.0, 0.5); }) == ErrorCode::kInvalidArgument);

  // A deliberately poor subset: xi = 0 must agree exactly with the plain check.
  const Ids rss = alpha_rss(set, 0.0).indices;
  const Ids poor(rss.begin(), rss.begin() + static_cast<std::ptrdiff_t>(rss.size() / 3 + 2));
  const VerificationReport plain = check_coreset(set, poor, 0.2, uniform(5000));
  const VerificationReport approx = check_approx_coreset(set, poor, 0.0, 0.2, uniform(5000));
  CHECK_FALSE(plain.passed);
  REQUIRE(plain.violations.size() == approx.violations.size());
  for (std::size_t i = 0; i < plain.violations.size(); ++i) {
    CHECK(plain.violations[i].query == approx.violations[i].query);
  }
}

TEST_CASE("weak coreset") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const TrainingSet r = seed % 2 ? random_set(seed + 20, 150, 2, 3) : wavy_set(seed, 200);
    for (double a : {0.1, 0.5, 1.0}) {
      const VerificationReport s = check_weak_coreset(r, alpha_sfcnn(r, a).indices, a, uniform());
      CHECK(s.passed);
      CHECK(s.samples_in_region.has_value());
      CHECK(check_weak_coreset(r, alpha_rss(r, a).indices, a, uniform()).passed);
    }
  }
  const TrainingSet set = d4();
  CHECK(error_of([&] { (void)check_weak_coreset(set, all_of(set), 0.0, uniform(10)); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(error_of([&] { (void)check_weak_coreset(set, Ids{A, D}, 3.0, uniform(10)); }) ==
        ErrorCode::kPrecondition);
}

TEST_CASE("witnesses are re-checkable from their records") {
  const TrainingSet set = wavy_set(8, 300);
  const Ids rss = alpha_rss(set, 0.5).indices;
  Ids poor(rss.begin(), rss.begin() + static_cast<std::ptrdiff_t>(rss.size() / 2));
  poor.push_back(0);
  poor.push_back(1);
  std::sort(poor.begin(), poor.end());
  poor.erase(std::unique(poor.begin(), poor.end()), poor.end());

  const VerificationReport sel = check_alpha_selective(set, poor, 0.5);
  REQUIRE_FALSE(sel.passed);
  for (const Witness& w : sel.violations) {
    const auto q = as_point(w.query);
    CHECK(nearest_neighbor_brute(q, set, poor).distance == w.observed);
    CHECK(nearest_other_label_brute(q, set.label(*w.point), set).distance / 1.5 == w.required);
    CHECK_FALSE(certified_less(w.observed, w.required));
  }

  const VerificationReport cor = check_coreset(set, poor, 0.1, uniform(4000));
  REQUIRE_FALSE(cor.passed);
  for (const Witness& w : cor.violations) {
    const auto q = as_point(w.query);
    const Label got = set.label(nearest_neighbor_brute(q, set, poor).index);
    const double dnn = nearest_neighbor_brute(q, set).distance;
    double closest_of_class = kInfinity;
    for (PointIndex p = 0; p < set.size(); ++p) {
      if (set.label(p) == got) {
        closest_of_class = std::min(closest_of_class, distance(q, set.row(p), set.metric()));
      }
    }
    CHECK(closest_of_class == w.observed);
    CHECK(1.1 * dnn == w.required);
    CHECK(w.observed > w.required);
  }
}

TEST_CASE("selective implies consistent on arbitrary subsets") {
  std::mt19937_64 rng(12);
  for (std::uint64_t t = 0; t < 200; ++t) {
    const TrainingSet set = random_set(t, 30, 2, 2);
    Ids sub;
    for (PointIndex i = 0; i < set.size(); ++i) {
      if (i < 2 || rng() % 3 == 0) sub.push_back(i);
    }
    for (double a : {0.0, 0.5}) {
      if (check_alpha_selective(set, sub, a).passed) {
        CHECK(check_alpha_consistent(set, sub, a).passed);
      }
    }
  }
}

TEST_CASE("exhaustive optimum") {
  const TrainingSet set = d4();
  CHECK(brute_min_selective(set, 0.0).indices == Ids{A, C});
  CHECK(brute_min_selective(set, 3.0).indices.size() == 4);
  CHECK(brute_min_consistent(set, 0.0).indices.size() == 2);
  for (double a : {0.0, 1.0, 10.0}) {
    CHECK(brute_min_selective(two_points(), a).indices.size() == 2);
    CHECK(brute_min_consistent(two_points(), a).indices.size() == 2);
  }
  CHECK(error_of([] { (void)brute_min_selective(random_set(1, 21, 2, 2), 0.0); }) ==
        ErrorCode::kTooLarge);
}

TEST_CASE("oracle sandwich on tiny instances") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 6 + seed % 9;
    const TrainingSet set = random_set(seed + 900, n, 2, 2 + seed % 2);
    for (double a : {0.0, 1.0}) {
      const std::size_t opt = brute_min_selective(set, a).indices.size();
      const std::size_t opt_c = brute_min_consistent(set, a).indices.size();
      const std::size_t hss = alpha_hss(set, a).indices.size();
      CHECK(opt_c <= opt);
      CHECK(opt <= alpha_rss(set, a).indices.size());
      CHECK(opt <= hss);
      CHECK(static_cast<double>(hss) <= (std::log(static_cast<double>(n)) + 1.0) * opt);
      CHECK(check_alpha_selective(set, brute_min_selective(set, a).indices, a).passed);
    }
  }
}

TEST_CASE("query sampler") {
  const TrainingSet set = random_set(3, 100, 2, 2);
  for (SamplerStrategy s :
       {SamplerStrategy::kUniformBox, SamplerStrategy::kGaussianMembers, SamplerStrategy::kGrid2d}) {
    const QuerySampler qs{s, 400, 9};
    const PointMatrix a = qs.sample(set);
    CHECK(a == qs.sample(set));
    CHECK(a.rows() == 400);
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      CHECK(nearest_neighbor_brute(a.row(r), set).distance > 0.0);
    }
  }
  CHECK(QuerySampler{SamplerStrategy::kUniformBox, 400, 1}.sample(set) !=
        QuerySampler{SamplerStrategy::kUniformBox, 400, 2}.sample(set));
  CHECK(error_of([] {
          (void)QuerySampler{SamplerStrategy::kGrid2d, 100, 1}.sample(random_set(1, 10, 3, 2));
        }) == ErrorCode::kDimensionMismatch);

  // Grid nodes landing on members are nudged off them.
  const PointMatrix g = grid_queries(d4_planar(), 5);
  CHECK(g.rows() == 25);
  CHECK(g(0, 0) == 1e-9);
  CHECK(g(1, 0) == 1.0 + 1e-9);
  CHECK(g(0, 1) == 0.0);
  CHECK(parse_sampler("gaussian") == SamplerStrategy::kGaussianMembers);
}

TEST_CASE("report json") {
  const VerificationReport s = check_alpha_selective(d4(), Ids{B, C}, 3.0);
  const nlohmann::json j = to_json(s);
  CHECK(j.at("criterion") == "selective");
  CHECK(j.at("passed") == false);
  CHECK(j.at("samples_tested") == 4);
  CHECK(j.at("violations").size() == 2);
  CHECK(j.at("violations")[0].at("required") == 0.75);
  for (const char* key : {"query", "observed", "required", "detail"}) {
    CHECK(j.at("violations")[0].contains(key));
  }
  const VerificationReport back = report_from_json(j);
  CHECK(back.passed == s.passed);
  CHECK(back.violations.size() == 2);
  CHECK(back.violations[1].query == s.violations[1].query);
  CHECK(*back.violations[1].point == D);
  CHECK(parse_criterion("approx-coreset") == Criterion::kApproxCoreset);
  CHECK(error_of([] { (void)parse_criterion("optimal"); }) == ErrorCode::kInvalidArgument);
}
