#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>
#include <string>
#include <unordered_set>

#include "nnc/data.hpp"
#include "nnc/error.hpp"
#include "nnc/metric.hpp"

namespace nnc {

namespace {

std::string coord_key(const PointMatrix& m, Eigen::Index r) {
  std::string key(static_cast<std::size_t>(m.cols()) * sizeof(double), '\0');
  std::memcpy(key.data(), m.row(r).data(), key.size());
  return key;
}

// Uniform point in [0,1)^d, redrawn until it differs from every earlier one.
void draw_points(PointMatrix& pts, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::unordered_set<std::string> seen;
  seen.reserve(static_cast<std::size_t>(pts.rows()));
  for (Eigen::Index r = 0; r < pts.rows(); ++r) {
    do {
      for (Eigen::Index k = 0; k < pts.cols(); ++k) pts(r, k) = u(rng);
    } while (!seen.insert(coord_key(pts, r)).second);
  }
}

std::vector<Label> voronoi_labels(const PointMatrix& pts, std::size_t c) {
  std::vector<Label> labels(static_cast<std::size_t>(pts.rows()));
  const Metric l2;
  for (Eigen::Index r = 0; r < pts.rows(); ++r) {
    NeighborResult best;
    for (std::size_t s = 0; s < c; ++s) {
      best.offer(s, distance(pts.row(r), pts.row(static_cast<Eigen::Index>(s)), l2));
    }
    labels[static_cast<std::size_t>(r)] = static_cast<Label>(best.index);
  }
  return labels;
}

std::vector<Label> grid_labels(PointMatrix& pts, std::size_t c, std::mt19937_64& rng) {
  const auto d = static_cast<std::size_t>(pts.cols());
  // Smallest cells-per-axis m >= 2 with m^d >= 2c, capped to keep the table small.
  std::size_t m = 2;
  auto cells_for = [d](std::size_t side) {
    double cells = 1.0;
    for (std::size_t k = 0; k < d; ++k) cells *= static_cast<double>(side);
    return cells;
  };
  while (cells_for(m) < 2.0 * static_cast<double>(c)) ++m;
  if (cells_for(m) > 1e6) throw Error(ErrorCode::kInvalidArgument, "grid generator: too many cells");
  const auto cells = static_cast<std::size_t>(cells_for(m));

  std::vector<Label> cell_label(cells);
  std::vector<std::size_t> order(cells);
  for (std::size_t i = 0; i < cells; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<Label> any(0, static_cast<Label>(c - 1));
  for (std::size_t i = 0; i < cells; ++i) {
    cell_label[order[i]] = i < c ? static_cast<Label>(i) : any(rng);
  }

  auto cell_of = [&](Eigen::Index r) {
    std::size_t id = 0;
    for (std::size_t k = 0; k < d; ++k) {
      const double v = pts(r, static_cast<Eigen::Index>(k));
      const auto slot = std::min(m - 1, static_cast<std::size_t>(v * static_cast<double>(m)));
      id = id * m + slot;
    }
    return id;
  };
  // The first c points move to the centers of the cells seeded with each
  // class, so every class is present.
  for (std::size_t i = 0; i < c; ++i) {
    std::size_t id = order[i];
    for (std::size_t k = d; k-- > 0;) {
      pts(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          (static_cast<double>(id % m) + 0.5) / static_cast<double>(m);
      id /= m;
    }
  }
  std::vector<Label> labels(static_cast<std::size_t>(pts.rows()));
  for (Eigen::Index r = 0; r < pts.rows(); ++r) {
    labels[static_cast<std::size_t>(r)] = cell_label[cell_of(r)];
  }
  return labels;
}

}  // namespace

std::string_view to_string(SyntheticGenerator g) {
  switch (g) {
    case SyntheticGenerator::kVoronoi: return "voronoi";
    case SyntheticGenerator::kGrid: return "grid";
  }
  return "?";
}

SyntheticGenerator parse_generator(std::string_view name) {
  if (name == "voronoi") return SyntheticGenerator::kVoronoi;
  if (name == "grid") return SyntheticGenerator::kGrid;
  throw Error(ErrorCode::kInvalidArgument, "unknown generator '" + std::string(name) + "'");
}

TrainingSet generate_synthetic(const SyntheticSpec& spec) {
  if (spec.classes < 2 || spec.n < spec.classes || spec.d < 1) {
    throw Error(ErrorCode::kInvalidArgument, "synthetic spec needs n >= c >= 2 and d >= 1");
  }
  std::mt19937_64 rng(spec.seed);
  PointMatrix pts(static_cast<Eigen::Index>(spec.n), static_cast<Eigen::Index>(spec.d));
  draw_points(pts, rng);
  std::vector<Label> labels = spec.generator == SyntheticGenerator::kVoronoi
                                  ? voronoi_labels(pts, spec.classes)
                                  : grid_labels(pts, spec.classes, rng);
  return TrainingSet(std::move(pts), std::move(labels));
}

}  // namespace nnc
