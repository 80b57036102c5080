#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nnc/condense.hpp"
#include "nnc/core.hpp"
#include "nnc/data.hpp"
#include "nnc/verify.hpp"

namespace nnc::cli {

/// Exit codes of the `nnc` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a verification criterion failed
inline constexpr int kExitUsage = 2;
inline constexpr int kExitError = 3;  // IO, parse or library error

/// Bad flag combination detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses `args` (without the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CondenseArgs {
  DatasetDescriptor dataset;
  Algorithm algorithm = Algorithm::kRss;
  CondenseOptions options;
  bool xi_given = false;
  std::string out_path;
};

struct VerifyArgs {
  DatasetDescriptor dataset;
  std::string subset_path;
  std::vector<Criterion> criteria;
  std::optional<double> alpha;  // defaults to the subset's alpha
  std::optional<double> epsilon;
  double xi = 0.0;
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  SamplerStrategy sampler = SamplerStrategy::kUniformBox;
  std::string out_path;  // stdout when empty
};

struct BenchArgs {
  std::vector<DatasetDescriptor> datasets;
  std::vector<Algorithm> algorithms;
  std::vector<double> alphas{0.0};
  std::vector<double> xis{0.0};  // rss-fast only
  std::size_t repeats = 3;
  bool prune = false;
  std::string out_path;  // stdout when empty
};

enum class HeatmapQuantity { kChromaticDensity, kQBetaMask };

struct HeatmapArgs {
  DatasetDescriptor dataset;
  std::string subset_path;  // density w.r.t. the whole set when empty
  std::size_t grid = 100;
  HeatmapQuantity quantity = HeatmapQuantity::kChromaticDensity;
  std::optional<double> beta;
  std::optional<double> alpha;  // beta = 2/alpha when beta is not given
  std::string out_path;  // stdout when empty
};

/// One timed condense run.
struct BenchRecord {
  std::string dataset;
  Algorithm algorithm = Algorithm::kRss;
  double alpha = 0.0;
  double xi = 0.0;
  std::string repeat;  // ordinal, or "median"
  std::int64_t wall_time_ns = 0;
  std::size_t n = 0;
  std::size_t subset_size = 0;
  std::size_t kappa = 0;

  double normalized_time() const { return static_cast<double>(wall_time_ns) / n; }
  double normalized_size() const { return static_cast<double>(subset_size) / kappa; }
};

/// Header line of the bench CSV.
inline constexpr const char* kBenchHeader =
    "dataset,algorithm,alpha,xi,repeat,wall_time_ns,n,subset_size,kappa,normalized_time,"
    "normalized_size";

int cmd_condense(const CondenseArgs& args, std::ostream& out);
int cmd_verify(const VerifyArgs& args, std::ostream& out);
int cmd_stats(const DatasetDescriptor& dataset, std::ostream& out);
int cmd_generate(const SyntheticSpec& spec, const std::string& out_path, std::ostream& out);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& log);
int cmd_heatmap(const HeatmapArgs& args, std::ostream& out);

/// "n d c kappa (pct%)" with two decimals.
std::string format_stats_row(const DatasetStats& stats);

}  // namespace nnc::cli
