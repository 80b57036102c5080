#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "data/format.hpp"
#include "nnc/core.hpp"
#include "nnc/data.hpp"
#include "nnc/error.hpp"

namespace nnc {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(detail::trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void parse_error(const std::string& path, std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, path + ":" + std::to_string(line) + ": " + what);
}

std::string coord_key(const std::vector<double>& row) {
  std::string key(row.size() * sizeof(double), '\0');
  for (std::size_t k = 0; k < row.size(); ++k) {
    const double v = row[k] == 0.0 ? 0.0 : row[k];
    std::memcpy(key.data() + k * sizeof(double), &v, sizeof(double));
  }
  return key;
}

}  // namespace

TrainingSet load_csv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");

  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> line_of;
  std::vector<Label> labels;
  std::vector<std::string> names;
  std::unordered_map<std::string, Label> ids;
  std::size_t columns = 0;
  std::size_t label_col = 0;

  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const std::vector<std::string_view> fields = split(line);
    if (first) {
      columns = fields.size();
      if (columns < 2) parse_error(path, line_no, "need at least one feature and a label column");
      label_col = options.label_column.value_or(columns - 1);
      if (label_col >= columns) {
        parse_error(path, line_no, "label column " + std::to_string(label_col) + " out of range");
      }
    } else if (fields.size() != columns) {
      parse_error(path, line_no, "expected " + std::to_string(columns) + " fields, found " +
                                     std::to_string(fields.size()));
    }

    std::vector<double> row;
    row.reserve(columns - 1);
    std::optional<std::size_t> bad;
    for (std::size_t k = 0; k < columns; ++k) {
      if (k == label_col) continue;
      const auto v = detail::parse_double(fields[k]);
      if (!v) {
        bad = k;
        break;
      }
      row.push_back(*v);
    }
    if (first) {
      first = false;
      if (bad) continue;  // header
    }
    if (bad) {
      parse_error(path, line_no, "non-numeric feature '" + std::string(fields[*bad]) +
                                     "' in column " + std::to_string(*bad));
    }
    for (double v : row) {
      if (!std::isfinite(v)) parse_error(path, line_no, "non-finite feature value");
    }
    const std::string label(fields[label_col]);
    if (label.empty()) parse_error(path, line_no, "empty label");
    auto [it, inserted] = ids.emplace(label, static_cast<Label>(names.size()));
    if (inserted) names.push_back(label);
    labels.push_back(it->second);
    rows.push_back(std::move(row));
    line_of.push_back(line_no);
  }
  if (rows.empty()) throw Error(ErrorCode::kParse, path + ": no data rows");
  if (names.size() < 2) {
    throw Error(ErrorCode::kSingleClass, path + ": only one class ('" + names[0] + "')");
  }

  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto [it, inserted] = seen.emplace(coord_key(rows[r]), r);
    if (!inserted && labels[it->second] != labels[r]) {
      throw Error(ErrorCode::kZeroMargin,
                  path + ": lines " + std::to_string(line_of[it->second]) + " and " +
                      std::to_string(line_of[r]) +
                      " have identical coordinates but different labels (margin 0)");
    }
  }

  const std::size_t d = columns - 1;
  PointMatrix coords(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      coords(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = rows[r][k];
    }
  }
  TrainingSet set(std::move(coords), std::move(labels), options.metric, std::move(names));
  return options.normalize ? normalize_diameter(set) : set;
}

void save_csv(const TrainingSet& set, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  for (std::size_t k = 0; k < set.dim(); ++k) out << 'f' << k << ',';
  out << "label\n";
  const auto& names = set.class_names();
  for (PointIndex i = 0; i < set.size(); ++i) {
    for (std::size_t k = 0; k < set.dim(); ++k) {
      out << detail::format_double(set.row(i)[static_cast<Eigen::Index>(k)]) << ',';
    }
    if (names.empty()) {
      out << set.label(i) << '\n';
    } else {
      out << names[set.label(i)] << '\n';
    }
  }
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

}  // namespace nnc
