#include "nnc/training_set.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <string>
#include <unordered_map>

namespace nnc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kEmptyCandidates: return "empty-candidates";
    case ErrorCode::kSingleClass: return "single-class";
    case ErrorCode::kUndefinedDensity: return "undefined-density";
    case ErrorCode::kZeroMargin: return "zero-margin";
    case ErrorCode::kCoincidentPoints: return "coincident-points";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kEmptyActiveSet: return "empty-active-set";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kTooLarge: return "too-large";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kFingerprintMismatch: return "fingerprint-mismatch";
    case ErrorCode::kInvariantViolation: return "invariant-violation";
  }
  return "unknown";
}

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv_bytes(std::uint64_t& h, const void* data, std::size_t len) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= kFnvPrime;
  }
}

std::string row_key(const PointMatrix& coords, Eigen::Index i) {
  std::string key(static_cast<std::size_t>(coords.cols()) * sizeof(double), '\0');
  for (Eigen::Index j = 0; j < coords.cols(); ++j) {
    // +0.0 and -0.0 compare equal, so normalize before hashing bytes.
    const double v = coords(i, j) == 0.0 ? 0.0 : coords(i, j);
    std::memcpy(key.data() + j * sizeof(double), &v, sizeof(double));
  }
  return key;
}

}  // namespace

TrainingSet::TrainingSet(PointMatrix coords, std::vector<Label> labels, Metric metric,
                         std::vector<std::string> class_names)
    : coords_(std::move(coords)),
      labels_(std::move(labels)),
      metric_(metric),
      class_names_(std::move(class_names)) {
  metric_.validate();
  if (coords_.rows() == 0) {
    throw Error(ErrorCode::kEmptyCandidates, "training set is empty");
  }
  if (coords_.cols() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "training set has zero dimensions");
  }
  if (static_cast<std::size_t>(coords_.rows()) != labels_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "label count differs from point count");
  }
  if (!coords_.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "training set contains non-finite coordinates");
  }
  const Label max_label = *std::max_element(labels_.begin(), labels_.end());
  class_count_ = class_names_.empty() ? static_cast<std::size_t>(max_label) + 1
                                      : class_names_.size();
  if (max_label >= class_count_) {
    throw Error(ErrorCode::kInvalidArgument, "label out of range of class names");
  }
  std::vector<std::size_t> per_class(class_count_, 0);
  for (Label l : labels_) ++per_class[l];
  for (std::size_t c = 0; c < class_count_; ++c) {
    if (per_class[c] == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "class " + std::to_string(c) + " has no points");
    }
  }
  if (class_count_ < 2) {
    throw Error(ErrorCode::kSingleClass, "training set needs at least two classes");
  }

  std::unordered_map<std::string, PointIndex> seen;
  seen.reserve(labels_.size());
  for (Eigen::Index i = 0; i < coords_.rows(); ++i) {
    auto [it, inserted] = seen.emplace(row_key(coords_, i), static_cast<PointIndex>(i));
    if (!inserted && labels_[it->second] != labels_[static_cast<std::size_t>(i)]) {
      std::ostringstream msg;
      msg << "points " << it->second << " and " << i
          << " share coordinates but have different labels (margin is zero)";
      throw Error(ErrorCode::kZeroMargin, msg.str());
    }
  }

  std::uint64_t h = kFnvOffset;
  const std::uint64_t d = static_cast<std::uint64_t>(coords_.cols());
  fnv_bytes(h, &d, sizeof d);
  fnv_bytes(h, labels_.data(), labels_.size() * sizeof(Label));
  fnv_bytes(h, coords_.data(), static_cast<std::size_t>(coords_.size()) * sizeof(double));
  fingerprint_ = h;
}

std::vector<std::vector<PointIndex>> TrainingSet::class_members() const {
  std::vector<std::vector<PointIndex>> members(class_count_);
  for (PointIndex i = 0; i < labels_.size(); ++i) members[labels_[i]].push_back(i);
  return members;
}

TrainingSet TrainingSet::with_coords(PointMatrix coords) const {
  return TrainingSet(std::move(coords), labels_, metric_, class_names_);
}

}  // namespace nnc
