#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "data/format.hpp"
#include "nnc/cli.hpp"
#include "nnc/core.hpp"
#include "nnc/error.hpp"
#include "nnc/report.hpp"

namespace nnc::cli {

namespace {

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Body>
void emit(const std::string& path, std::ostream& fallback, Body&& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  body(file);
  if (!file) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

std::string num(double v) { return detail::format_double(v); }

bool needs_epsilon(Criterion c) {
  return c == Criterion::kCoreset || c == Criterion::kApproxCoreset;
}

VerificationReport run_check(Criterion c, const TrainingSet& set,
                             std::span<const PointIndex> subset, const VerifyArgs& args,
                             double alpha, const QuerySampler& sampler) {
  switch (c) {
    case Criterion::kAlphaConsistent: {
      VerificationReport r = check_alpha_consistent(set, subset, alpha);
      r.rng_seed = args.seed;
      return r;
    }
    case Criterion::kAlphaSelective: {
      VerificationReport r = check_alpha_selective(set, subset, alpha);
      r.rng_seed = args.seed;
      return r;
    }
    case Criterion::kDensityBound: return check_lemma1(set, subset, alpha, sampler);
    case Criterion::kCoreset: return check_coreset(set, subset, *args.epsilon, sampler);
    case Criterion::kApproxCoreset:
      return check_approx_coreset(set, subset, args.xi, *args.epsilon, sampler);
    case Criterion::kWeakCoreset: return check_weak_coreset(set, subset, alpha, sampler);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown criterion");
}

}  // namespace

std::string format_stats_row(const DatasetStats& s) {
  char pct[32];
  std::snprintf(pct, sizeof pct, "%.2f", 100.0 * s.kappa_fraction());
  std::ostringstream os;
  os << s.n << ' ' << s.d << ' ' << s.c << ' ' << s.kappa << " (" << pct << "%)";
  return os.str();
}

int cmd_condense(const CondenseArgs& args, std::ostream& out) {
  if (args.xi_given && args.algorithm != Algorithm::kRssFast) {
    throw UsageError("--xi applies to rss-fast only");
  }
  if (args.options.prune && args.algorithm != Algorithm::kNet) {
    throw UsageError("--prune applies to net only");
  }
  const TrainingSet set = resolve_dataset(args.dataset);
  const auto start = std::chrono::steady_clock::now();
  const CondensedSubset subset = condense(set, args.algorithm, args.options);
  const auto stop = std::chrono::steady_clock::now();
  save_subset(subset, args.out_path);

  const DatasetStats stats = compute_stats(set);
  const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
  char line[160];
  std::snprintf(line, sizeof line, "%zu points selected, %.4f x kappa (%zu), %.3f ms",
                subset.indices.size(),
                static_cast<double>(subset.indices.size()) / static_cast<double>(stats.kappa),
                stats.kappa, ms);
  out << line << '\n';
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  if (args.criteria.empty()) throw UsageError("no criteria given");
  for (Criterion c : args.criteria) {
    if (needs_epsilon(c) && !args.epsilon) {
      throw UsageError("criterion " + std::string(to_string(c)) + " needs --epsilon");
    }
  }
  const TrainingSet set = resolve_dataset(args.dataset);
  const CondensedSubset subset = load_subset(args.subset_path, set);
  const double alpha = args.alpha.value_or(subset.alpha);
  const QuerySampler sampler{args.sampler, args.samples, args.seed};

  bool all_passed = true;
  nlohmann::json reports = nlohmann::json::array();
  for (Criterion c : args.criteria) {
    const VerificationReport r = run_check(c, set, subset.indices, args, alpha, sampler);
    all_passed = all_passed && r.passed;
    reports.push_back(to_json(r));
  }
  const nlohmann::json doc{{"dataset", args.dataset.name},
                           {"subset_size", subset.indices.size()},
                           {"alpha", alpha},
                           {"passed", all_passed},
                           {"reports", reports}};
  emit(args.out_path, out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  return all_passed ? kExitOk : kExitFailed;
}

int cmd_stats(const DatasetDescriptor& dataset, std::ostream& out) {
  out << format_stats_row(compute_stats(resolve_dataset(dataset))) << '\n';
  return kExitOk;
}

int cmd_generate(const SyntheticSpec& spec, const std::string& out_path, std::ostream& out) {
  const TrainingSet set = generate_synthetic(spec);
  save_csv(set, out_path);
  out << "wrote " << set.size() << " points to " << out_path << '\n';
  return kExitOk;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& log) {
  if (args.datasets.empty()) throw UsageError("no datasets given");
  if (args.algorithms.empty()) throw UsageError("no algorithms given");
  if (args.alphas.empty()) throw UsageError("no alpha values given");
  if (args.repeats == 0) throw UsageError("--repeats must be positive");

  std::vector<BenchRecord> rows;
  for (const DatasetDescriptor& desc : args.datasets) {
    const TrainingSet set = resolve_dataset(desc);
    const std::size_t kappa = compute_stats(set).kappa;
    for (Algorithm algo : args.algorithms) {
      const std::vector<double> xis =
          algo == Algorithm::kRssFast ? args.xis : std::vector<double>{0.0};
      for (double alpha : args.alphas) {
        for (double xi : xis) {
          std::vector<BenchRecord> cell;
          for (std::size_t rep = 0; rep < args.repeats; ++rep) {
            CondenseOptions opts{alpha, xi, args.prune && algo == Algorithm::kNet, false};
            const auto start = std::chrono::steady_clock::now();
            const CondensedSubset subset = condense(set, algo, opts);
            const auto stop = std::chrono::steady_clock::now();
            cell.push_back(BenchRecord{
                desc.name, algo, alpha, xi, std::to_string(rep),
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count(),
                set.size(), subset.indices.size(), kappa});
          }
          std::vector<std::int64_t> times;
          for (const BenchRecord& r : cell) times.push_back(r.wall_time_ns);
          std::sort(times.begin(), times.end());
          BenchRecord median = cell.front();
          median.repeat = "median";
          median.wall_time_ns = times[(times.size() - 1) / 2];
          log << desc.name << ' ' << to_string(algo) << " alpha=" << num(alpha)
              << " xi=" << num(xi) << ": " << median.subset_size << " points, "
              << median.wall_time_ns << " ns\n";
          rows.insert(rows.end(), cell.begin(), cell.end());
          rows.push_back(median);
        }
      }
    }
  }

  emit(args.out_path, out, [&](std::ostream& os) {
    os << kBenchHeader << '\n';
    for (const BenchRecord& r : rows) {
      os << r.dataset << ',' << to_string(r.algorithm) << ',' << num(r.alpha) << ','
         << num(r.xi) << ',' << r.repeat << ',' << r.wall_time_ns << ',' << r.n << ','
         << r.subset_size << ',' << r.kappa << ',' << num(r.normalized_time()) << ','
         << num(r.normalized_size()) << '\n';
    }
  });
  return kExitOk;
}

int cmd_heatmap(const HeatmapArgs& args, std::ostream& out) {
  const TrainingSet set = resolve_dataset(args.dataset);
  if (set.dim() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "heatmap needs a 2-D dataset");
  }
  std::vector<PointIndex> candidates;
  if (args.subset_path.empty()) {
    candidates.resize(set.size());
    for (PointIndex i = 0; i < set.size(); ++i) candidates[i] = i;
  } else {
    candidates = load_subset(args.subset_path, set).indices;
  }

  double beta = 0.0;
  if (args.quantity == HeatmapQuantity::kQBetaMask) {
    if (args.beta) {
      beta = *args.beta;
    } else if (args.alpha && *args.alpha > 0.0) {
      beta = 2.0 / *args.alpha;
    } else {
      throw UsageError("the q-beta mask needs --beta or a positive --alpha");
    }
  }

  const PointMatrix grid = grid_queries(set, args.grid);
  std::vector<double> values(static_cast<std::size_t>(grid.rows()));
  for (Eigen::Index r = 0; r < grid.rows(); ++r) {
    const double density = chromatic_density(grid.row(r), set, candidates);
    values[static_cast<std::size_t>(r)] =
        args.quantity == HeatmapQuantity::kChromaticDensity ? std::min(density, 10.0)
                                                            : (density >= beta ? 1.0 : 0.0);
  }
  emit(args.out_path, out, [&](std::ostream& os) {
    os << "x,y,value\n";
    for (Eigen::Index r = 0; r < grid.rows(); ++r) {
      os << num(grid(r, 0)) << ',' << num(grid(r, 1)) << ','
         << num(values[static_cast<std::size_t>(r)]) << '\n';
    }
  });
  return kExitOk;
}

}  // namespace nnc::cli
