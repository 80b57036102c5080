#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "nnc/cli.hpp"
#include "nnc/error.hpp"

namespace nnc::cli {

namespace {

struct DatasetFlags {
  std::string source;
  std::optional<std::size_t> label_column;
  bool normalize = false;

  void attach(CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--dataset", source, "CSV path or synthetic:n=..,d=..,c=..,seed=..");
    if (required) opt->required();
    cmd->add_option("--label-column", label_column, "zero-based label column (default: last)");
    cmd->add_flag("--normalize", normalize, "rescale to unit diameter");
  }

  DatasetDescriptor descriptor(const std::string& src) const {
    DatasetDescriptor d = describe_dataset(src);
    d.label_column = label_column;
    d.normalize = normalize;
    return d;
  }
  DatasetDescriptor descriptor() const { return descriptor(source); }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T, typename Parse>
std::vector<T> parse_all(const std::vector<std::string>& names, Parse&& parse) {
  std::vector<T> out;
  for (const std::string& joined : names) {
    for (const std::string& name : split_list(joined)) {
      try {
        out.push_back(parse(name));
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nearest-neighbor condensation: condense, verify, stats, generate, bench, heatmap",
               "nnc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // condense
  DatasetFlags c_data;
  std::string c_algo;
  CondenseArgs c_args;
  std::optional<double> c_xi;
  auto* condense_cmd = app.add_subcommand("condense", "select a condensed subset");
  c_data.attach(condense_cmd);
  condense_cmd->add_option("--algo", c_algo, "rss | rss-fast | sfcnn | fcnn | net | hss")->required();
  condense_cmd->add_option("--alpha", c_args.options.alpha, "selectivity parameter")
      ->check(CLI::NonNegativeNumber);
  condense_cmd->add_option("--xi", c_xi, "search approximation (rss-fast)")
      ->check(CLI::NonNegativeNumber);
  condense_cmd->add_flag("--prune", c_args.options.prune, "prune the net (net)");
  condense_cmd->add_flag("--force-quadratic", c_args.options.force_quadratic,
                         "allow quadratic memory on large sets (hss)");
  condense_cmd->add_option("--out", c_args.out_path, "subset file")->required();

  // verify
  DatasetFlags v_data;
  VerifyArgs v_args;
  std::vector<std::string> v_criteria;
  std::string v_sampler = "uniform";
  auto* verify_cmd = app.add_subcommand("verify", "check criteria on a subset file");
  v_data.attach(verify_cmd);
  verify_cmd->add_option("--subset", v_args.subset_path, "subset file")->required();
  verify_cmd
      ->add_option("--criteria", v_criteria,
                   "consistent,selective,density-bound,coreset,approx-coreset,weak-coreset")
      ->required();
  verify_cmd->add_option("--alpha", v_args.alpha, "default: the subset's alpha")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--epsilon", v_args.epsilon)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--xi", v_args.xi)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--samples", v_args.samples)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", v_args.seed);
  verify_cmd->add_option("--sampler", v_sampler, "uniform | gaussian | grid");
  verify_cmd->add_option("--out", v_args.out_path, "JSON report (default: stdout)");

  // stats
  DatasetFlags s_data;
  auto* stats_cmd = app.add_subcommand("stats", "print n d c kappa (kappa%)");
  s_data.attach(stats_cmd);

  // generate
  SyntheticSpec g_spec;
  std::string g_gen = "voronoi";
  std::string g_out;
  auto* generate_cmd = app.add_subcommand("generate", "write a synthetic CSV");
  generate_cmd->add_option("--n", g_spec.n)->check(CLI::PositiveNumber);
  generate_cmd->add_option("--d", g_spec.d)->check(CLI::PositiveNumber);
  generate_cmd->add_option("--c", g_spec.classes)->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", g_spec.seed);
  generate_cmd->add_option("--gen", g_gen, "voronoi | grid");
  generate_cmd->add_option("--out", g_out)->required();

  // bench
  std::vector<std::string> b_sets, b_algos;
  DatasetFlags b_data;
  BenchArgs b_args;
  auto* bench_cmd = app.add_subcommand("bench", "time algorithms, CSV out");
  bench_cmd->add_option("--dataset", b_sets, "one or more datasets (space separated)")->required();
  bench_cmd->add_option("--label-column", b_data.label_column);
  bench_cmd->add_flag("--normalize", b_data.normalize);
  bench_cmd->add_option("--algo", b_algos, "one or more algorithms")->required();
  bench_cmd->add_option("--alpha", b_args.alphas)->delimiter(',')->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--xi", b_args.xis)->delimiter(',')->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--repeats", b_args.repeats)->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--prune", b_args.prune);
  bench_cmd->add_option("--out", b_args.out_path, "CSV (default: stdout)");

  // heatmap
  DatasetFlags h_data;
  HeatmapArgs h_args;
  std::string h_quantity = "chromatic_density";
  auto* heatmap_cmd = app.add_subcommand("heatmap", "grid CSV of density or Q_beta mask (2-D)");
  h_data.attach(heatmap_cmd);
  heatmap_cmd->add_option("--subset", h_args.subset_path, "density w.r.t. this subset");
  heatmap_cmd->add_option("--grid", h_args.grid, "grid resolution")->check(CLI::Range(2, 10000));
  heatmap_cmd->add_option("--quantity", h_quantity, "chromatic_density | q_beta_mask");
  heatmap_cmd->add_option("--beta", h_args.beta)->check(CLI::NonNegativeNumber);
  heatmap_cmd->add_option("--alpha", h_args.alpha)->check(CLI::PositiveNumber);
  heatmap_cmd->add_option("--out", h_args.out_path, "CSV (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (condense_cmd->parsed()) {
      c_args.dataset = c_data.descriptor();
      try {
        c_args.algorithm = parse_algorithm(c_algo);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      c_args.xi_given = c_xi.has_value();
      c_args.options.xi = c_xi.value_or(0.0);
      return cmd_condense(c_args, out);
    }
    if (verify_cmd->parsed()) {
      v_args.dataset = v_data.descriptor();
      v_args.criteria = parse_all<Criterion>(v_criteria, parse_criterion);
      try {
        v_args.sampler = parse_sampler(v_sampler);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      return cmd_verify(v_args, out);
    }
    if (stats_cmd->parsed()) return cmd_stats(s_data.descriptor(), out);
    if (generate_cmd->parsed()) {
      try {
        g_spec.generator = parse_generator(g_gen);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      return cmd_generate(g_spec, g_out, out);
    }
    if (bench_cmd->parsed()) {
      for (const std::string& s : b_sets) b_args.datasets.push_back(b_data.descriptor(s));
      b_args.algorithms = parse_all<Algorithm>(b_algos, parse_algorithm);
      return cmd_bench(b_args, out, err);
    }
    if (heatmap_cmd->parsed()) {
      h_args.dataset = h_data.descriptor();
      if (h_quantity == "chromatic_density") {
        h_args.quantity = HeatmapQuantity::kChromaticDensity;
      } else if (h_quantity == "q_beta_mask") {
        h_args.quantity = HeatmapQuantity::kQBetaMask;
      } else {
        throw UsageError("unknown quantity '" + h_quantity + "'");
      }
      return cmd_heatmap(h_args, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace nnc::cli
