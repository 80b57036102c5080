#include <cstdlib>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "nnc/core.hpp"

using namespace nnc;
using namespace fixtures;

TEST_CASE("distance examples") {
  Eigen::RowVectorXd a(2), b(2);
  a << 0, 0;
  b << 3, 4;
  CHECK(distance(a, b, Metric{}) == 5.0);
  CHECK(distance(a, b, Metric::l1()) == 7.0);
  CHECK(distance(a, b, Metric::linf()) == 4.0);
  CHECK(distance(b, b, Metric{3.0}) == 0.0);
  Eigen::RowVectorXd x(1), y(1);
  x << 0;
  y << 1;
  CHECK(distance(x, y, Metric::l1()) == 1.0);
  CHECK(error_of([&] { (void)distance(a, x, Metric{}); }) == ErrorCode::kDimensionMismatch);
}

TEST_CASE("metric axioms on sampled triples") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5, 5);
  for (const Metric m : {Metric::l1(), Metric::l2(), Metric{3.0}, Metric::linf()}) {
    for (int t = 0; t < 300; ++t) {
      Eigen::RowVectorXd a(4), b(4), c(4);
      for (int k = 0; k < 4; ++k) {
        a[k] = u(rng);
        b[k] = u(rng);
        c[k] = u(rng);
      }
      CHECK(distance(a, a, m) == 0.0);
      CHECK(distance(a, b, m) == distance(b, a, m));
      CHECK(distance(a, c, m) <= distance(a, b, m) + distance(b, c, m) + 1e-9);
    }
  }
}

TEST_CASE("nearest neighbor on the line set") {
  const TrainingSet set = d4();
  Eigen::RowVectorXd q(1);
  q << 0.9;
  NeighborResult r = nearest_neighbor_brute(q, set);
  CHECK(r.index == B);
  CHECK(r.distance == doctest::Approx(0.1).epsilon(1e-12));

  q << 3.0;
  r = nearest_neighbor_brute(q, set);
  CHECK(r.index == C);
  CHECK(r.distance == 0.0);

  // Equidistant from A and C: the lower index wins.
  q << 1.5;
  const std::vector<PointIndex> ac{A, C};
  r = nearest_neighbor_brute(q, set, ac);
  CHECK(r.index == A);
  CHECK(r.distance == 1.5);
  q << 2.0;
  CHECK(nearest_neighbor_brute(q, set, ac).index == C);

  const std::vector<PointIndex> none;
  CHECK(error_of([&] { (void)nearest_neighbor_brute(q, set, none); }) ==
        ErrorCode::kEmptyCandidates);
}

TEST_CASE("nearest enemies of D4") {
  const TrainingSet set = d4();
  CHECK(nearest_enemy_brute(A, set).index == C);
  CHECK(nearest_enemy_brute(A, set).distance == 3.0);
  CHECK(nearest_enemy_brute(B, set).index == C);
  CHECK(nearest_enemy_brute(B, set).distance == 2.0);
  CHECK(nearest_enemy_brute(C, set).index == B);
  CHECK(nearest_enemy_brute(C, set).distance == 2.0);
  CHECK(nearest_enemy_brute(D, set).index == B);

  const TrainingSet two = two_points();
  CHECK(nearest_enemy_brute(0, two).index == 1);
  CHECK(nearest_enemy_brute(1, two).index == 0);
  CHECK(nearest_enemy_brute(0, two).distance == 1.0);
}

TEST_CASE("single-class and conflicting sets are rejected") {
  PointMatrix m(2, 1);
  m << 0, 1;
  CHECK(error_of([&] { TrainingSet(m, {0, 0}); }) == ErrorCode::kSingleClass);
  m << 1, 1;
  CHECK(error_of([&] { TrainingSet(m, {0, 1}); }) == ErrorCode::kZeroMargin);
  m << 0, std::nan("");
  CHECK(error_of([&] { TrainingSet(m, {0, 1}); }).has_value());
  m << 1, 1;
  PointMatrix same(3, 1);
  same << 1, 1, 2;
  CHECK_NOTHROW(TrainingSet(same, {0, 0, 1}));
}

TEST_CASE("chromatic density examples") {
  const TrainingSet set = d4();
  Eigen::RowVectorXd q(1);
  q << 0.5;
  CHECK(chromatic_density(q, set) == doctest::Approx(4.0).epsilon(1e-12));

  PointMatrix m(2, 1);
  m << 0, 3;
  const TrainingSet pair(m, {0, 1});
  q << 1.0;
  CHECK(chromatic_density(q, pair) == doctest::Approx(1.0).epsilon(1e-12));

  q << 2.0;
  const std::vector<PointIndex> bc{B, C};
  CHECK(chromatic_density(q, set, bc) == 0.0);

  q << 1.0;
  CHECK(error_of([&] { (void)chromatic_density(q, set); }) == ErrorCode::kUndefinedDensity);
  const std::vector<PointIndex> reds{A, B};
  q << 2.0;
  CHECK(error_of([&] { (void)chromatic_density(q, set, reds); }) == ErrorCode::kSingleClass);
}

TEST_CASE("chromatic density sign follows the enemy/neighbor order") {
  const TrainingSet set = random_set(11, 60, 2, 3);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 500; ++t) {
    Eigen::RowVectorXd q(2);
    q << u(rng), u(rng);
    const NeighborResult nn = nearest_neighbor_brute(q, set);
    const NeighborResult ne = nearest_other_label_brute(q, set.label(nn.index), set);
    const double delta = chromatic_density(q, set);
    CHECK((delta >= 0.0) == (ne.distance >= nn.distance));
    CHECK(delta >= 0.0);
  }
}

TEST_CASE("D4 statistics") {
  const DatasetStats s = compute_stats(d4());
  CHECK(s.n == 4);
  CHECK(s.d == 1);
  CHECK(s.c == 2);
  CHECK(s.kappa == 2);
  CHECK(s.gamma == 2.0);
  REQUIRE(s.diameter.has_value());
  CHECK(*s.diameter == 4.0);
  CHECK(*s.spread == 4.0);
}

TEST_CASE("stats invariants on random sets") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TrainingSet set = random_set(seed, 40 + seed * 7, 1 + seed % 4, 2 + seed % 3);
    const DatasetStats s = compute_stats(set);
    CHECK(s.kappa >= 1);
    CHECK(s.kappa <= s.n);
    CHECK(s.gamma > 0.0);
    CHECK(s.gamma <= *s.diameter);
    CHECK(*s.spread >= 1.0);
    for (PointIndex p = 0; p < set.size(); ++p) {
      CHECK(nearest_enemy_brute(p, set).distance <= *s.diameter);
    }
    const DatasetStats ns = compute_stats(normalize_diameter(set));
    CHECK(ns.kappa == s.kappa);
    CHECK(1.0 / ns.gamma <= *ns.spread * (1 + 1e-12));
    CHECK(*ns.diameter == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("normalize diameter") {
  const TrainingSet n = normalize_diameter(d4());
  CHECK(n.coords()(0, 0) == 0.0);
  CHECK(n.coords()(1, 0) == 0.25);
  CHECK(n.coords()(2, 0) == 0.75);
  CHECK(n.coords()(3, 0) == 1.0);
  CHECK(n.labels() == d4().labels());
  const TrainingSet again = normalize_diameter(n);
  CHECK(again.coords() == n.coords());
  CHECK(again.fingerprint() == n.fingerprint());
}

TEST_CASE("brute scans agree with an independent re-implementation") {
  for (std::uint64_t seed = 100; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 63;
    const TrainingSet set = random_set(seed, n, 1 + seed % 5, 2 + seed % 3);
    const std::vector<PointIndex> ids = all_of(set);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.2, 1.2);
    for (int t = 0; t < 10; ++t) {
      Eigen::RowVectorXd q(static_cast<Eigen::Index>(set.dim()));
      for (Eigen::Index k = 0; k < q.size(); ++k) q[k] = u(rng);
      const auto [i, d] = naive_nearest(set, q.data(), ids, [](PointIndex) { return true; });
      const NeighborResult r = nearest_neighbor_brute(q, set);
      CHECK(r.index == i);
      CHECK(r.distance == doctest::Approx(d).epsilon(1e-12));
    }
    for (PointIndex p = 0; p < n; ++p) {
      const std::vector<double> row = row_of(set, p);
      const auto [i, d] = naive_nearest(set, row.data(), ids,
                                        [&](PointIndex j) { return set.label(j) != set.label(p); });
      const NeighborResult r = nearest_enemy_brute(p, set);
      CHECK(r.index == i);
      CHECK(r.distance == doctest::Approx(d).epsilon(1e-12));
    }
  }
}

TEST_CASE("parallel scans match a single worker") {
  const TrainingSet set = random_set(9, 700, 3, 4);
  const std::vector<NeighborResult> many = nearest_enemies_brute(set);
  setenv("NNC_THREADS", "1", 1);
  const std::vector<NeighborResult> one = nearest_enemies_brute(set);
  unsetenv("NNC_THREADS");
  REQUIRE(many.size() == one.size());
  for (std::size_t i = 0; i < many.size(); ++i) {
    CHECK(many[i].index == one[i].index);
    CHECK(many[i].distance == one[i].distance);
  }
}

TEST_CASE("fingerprint tracks labels and coordinates") {
  const TrainingSet set = d4();
  PointMatrix m = set.coords();
  CHECK(TrainingSet(m, {0, 0, 1, 1}).fingerprint() == set.fingerprint());
  CHECK(TrainingSet(m, {0, 1, 1, 1}).fingerprint() != set.fingerprint());
  m(3, 0) = 5.0;
  CHECK(TrainingSet(m, {0, 0, 1, 1}).fingerprint() != set.fingerprint());
}
