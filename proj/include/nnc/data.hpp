#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "nnc/condense.hpp"
#include "nnc/training_set.hpp"

namespace nnc {

struct CsvOptions {
  // Zero-based label column; the last column when unset.
  std::optional<std::size_t> label_column;
  Metric metric;
  // Rescale to unit diameter after loading.
  bool normalize = false;
};

/// Comma-separated rows of numeric features plus one label column. A first
/// row with a non-numeric feature field is taken as a header. Labels become
/// dense ids in order of first appearance; their text is kept as class names.
TrainingSet load_csv(const std::string& path, const CsvOptions& options = {});

/// Header f0..f{d-1},label; coordinates in shortest round-trip form so that
/// a reload is bit-identical. Labels are written as class names when present.
void save_csv(const TrainingSet& set, const std::string& path);

enum class SyntheticGenerator {
  kVoronoi,  // label = nearest of c uniform sites; the sites are the first c points
  kGrid,     // label = random class of the grid cell holding the point
};

std::string_view to_string(SyntheticGenerator g);
SyntheticGenerator parse_generator(std::string_view name);

struct SyntheticSpec {
  std::size_t n = 1000;
  std::size_t d = 2;
  std::size_t classes = 3;
  std::uint64_t seed = 42;
  SyntheticGenerator generator = SyntheticGenerator::kVoronoi;
};

/// Points uniform in the unit cube, deterministic per spec.
TrainingSet generate_synthetic(const SyntheticSpec& spec);

/// "#nnc-subset v1 algo=<name> alpha=<a> xi=<x> fp=<16 hex digits>" followed
/// by one zero-based index per line, ascending.
void save_subset(const CondensedSubset& subset, const std::string& path);

/// Parses a subset file and validates it against `set` (fingerprint first).
CondensedSubset load_subset(const std::string& path, const TrainingSet& set);

/// A dataset named on the command line: a CSV path or a generator spec
/// "synthetic:n=<n>,d=<d>,c=<c>,seed=<s>,gen=<voronoi|grid>" (all keys optional).
struct DatasetDescriptor {
  std::string name;
  std::string source;
  std::optional<std::size_t> label_column;
  bool normalize = false;
};

DatasetDescriptor describe_dataset(std::string_view source);
SyntheticSpec parse_synthetic_spec(std::string_view source);
TrainingSet resolve_dataset(const DatasetDescriptor& descriptor);

}  // namespace nnc
