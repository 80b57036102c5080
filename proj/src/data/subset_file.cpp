#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "data/format.hpp"
#include "nnc/data.hpp"
#include "nnc/error.hpp"

namespace nnc {

namespace {

constexpr std::string_view kMagic = "#nnc-subset";

[[noreturn]] void bad_header(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParse, path + ": bad subset header: " + what);
}

}  // namespace

void save_subset(const CondensedSubset& subset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  char fp[17];
  std::snprintf(fp, sizeof fp, "%016llx",
                static_cast<unsigned long long>(subset.source_fingerprint));
  out << kMagic << " v1 algo=" << to_string(subset.algorithm)
      << " alpha=" << detail::format_double(subset.alpha)
      << " xi=" << detail::format_double(subset.xi) << " fp=" << fp << '\n';
  for (PointIndex i : subset.indices) out << i << '\n';
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

CondensedSubset load_subset(const std::string& path, const TrainingSet& set) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::string header;
  if (!std::getline(in, header)) bad_header(path, "empty file");

  std::istringstream fields(header);
  std::string magic, version;
  fields >> magic >> version;
  if (magic != kMagic || version != "v1") bad_header(path, "expected '#nnc-subset v1'");

  CondensedSubset subset;
  bool have_algo = false, have_alpha = false, have_xi = false, have_fp = false;
  std::string kv;
  while (fields >> kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) bad_header(path, "field '" + kv + "' is not key=value");
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    if (key == "algo") {
      subset.algorithm = parse_algorithm(value);
      have_algo = true;
    } else if (key == "alpha" || key == "xi") {
      const auto v = detail::parse_double(value);
      if (!v) bad_header(path, key + " is not a number");
      (key == "alpha" ? subset.alpha : subset.xi) = *v;
      (key == "alpha" ? have_alpha : have_xi) = true;
    } else if (key == "fp") {
      const auto res =
          std::from_chars(value.data(), value.data() + value.size(), subset.source_fingerprint, 16);
      if (value.size() != 16 || res.ec != std::errc() || res.ptr != value.data() + value.size()) {
        bad_header(path, "fp must be 16 hex digits");
      }
      have_fp = true;
    } else {
      bad_header(path, "unknown field '" + key + "'");
    }
  }
  if (!(have_algo && have_alpha && have_xi && have_fp)) {
    bad_header(path, "algo, alpha, xi and fp are required");
  }

  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = detail::trim(line);
    if (text.empty()) continue;
    PointIndex i = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), i);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
      throw Error(ErrorCode::kParse,
                  path + ":" + std::to_string(line_no) + ": expected a point index");
    }
    subset.indices.push_back(i);
  }
  validate_subset(subset, set);
  return subset;
}

}  // namespace nnc
