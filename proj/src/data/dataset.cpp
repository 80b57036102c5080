#include <charconv>
#include <filesystem>

#include "nnc/core.hpp"
#include "nnc/data.hpp"
#include "nnc/error.hpp"

namespace nnc {

namespace {

constexpr std::string_view kSyntheticPrefix = "synthetic:";

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T v{};
  const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || res.ec != std::errc() || res.ptr != value.data() + value.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "synthetic spec: " + std::string(key) + " is not an integer");
  }
  return v;
}

}  // namespace

SyntheticSpec parse_synthetic_spec(std::string_view source) {
  if (source.substr(0, kSyntheticPrefix.size()) != kSyntheticPrefix) {
    throw Error(ErrorCode::kInvalidArgument, "not a synthetic spec: " + std::string(source));
  }
  source.remove_prefix(kSyntheticPrefix.size());
  SyntheticSpec spec;
  while (!source.empty()) {
    const auto comma = source.find(',');
    const std::string_view item = source.substr(0, comma);
    source = comma == std::string_view::npos ? std::string_view{} : source.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument, "synthetic spec: expected key=value");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "n") {
      spec.n = parse_number<std::size_t>(key, value);
    } else if (key == "d") {
      spec.d = parse_number<std::size_t>(key, value);
    } else if (key == "c") {
      spec.classes = parse_number<std::size_t>(key, value);
    } else if (key == "seed") {
      spec.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "gen") {
      spec.generator = parse_generator(value);
    } else {
      throw Error(ErrorCode::kInvalidArgument, "synthetic spec: unknown key " + std::string(key));
    }
  }
  return spec;
}

DatasetDescriptor describe_dataset(std::string_view source) {
  DatasetDescriptor desc;
  desc.source = std::string(source);
  if (source.substr(0, kSyntheticPrefix.size()) == kSyntheticPrefix) {
    const SyntheticSpec s = parse_synthetic_spec(source);
    desc.name = std::string(to_string(s.generator)) + "-" + std::to_string(s.n) + "-" +
                std::to_string(s.d) + "-" + std::to_string(s.classes) + "-" +
                std::to_string(s.seed);
  } else {
    desc.name = std::filesystem::path(desc.source).stem().string();
  }
  return desc;
}

TrainingSet resolve_dataset(const DatasetDescriptor& descriptor) {
  if (descriptor.source.rfind(kSyntheticPrefix, 0) == 0) {
    TrainingSet set = generate_synthetic(parse_synthetic_spec(descriptor.source));
    return descriptor.normalize ? normalize_diameter(set) : set;
  }
  CsvOptions options;
  options.label_column = descriptor.label_column;
  options.normalize = descriptor.normalize;
  return load_csv(descriptor.source, options);
}

}  // namespace nnc
