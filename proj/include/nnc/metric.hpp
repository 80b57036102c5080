#pragma once

#include <cmath>
#include <limits>

#include <Eigen/Core>

#include "nnc/error.hpp"

namespace nnc {

/// L_p metric selector. `p` must be >= 1; infinity selects the max-norm.
struct Metric {
  double p = 2.0;

  static Metric l1() { return {1.0}; }
  static Metric l2() { return {2.0}; }
  static Metric linf() { return {std::numeric_limits<double>::infinity()}; }

  bool is_l2() const { return p == 2.0; }
  bool is_l1() const { return p == 1.0; }
  bool is_linf() const { return std::isinf(p); }

  void validate() const {
    if (!(p >= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "metric exponent must be >= 1");
    }
  }
};

namespace detail {

// Accumulates per-coordinate absolute differences. The same routine backs
// both point distances and kd-tree box bounds so that, coordinate by
// coordinate, a box bound never exceeds the distance to any point inside
// the box after rounding.
template <typename Scalar>
struct Accumulator {
  const Metric& m;
  Scalar acc = Scalar(0);

  void add(Scalar diff) {
    if (m.is_l2()) {
      acc += diff * diff;
    } else if (m.is_l1()) {
      acc += diff;
    } else if (m.is_linf()) {
      acc = diff > acc ? diff : acc;
    } else {
      acc += std::pow(diff, Scalar(m.p));
    }
  }

  Scalar finish() const {
    if (m.is_l2()) return std::sqrt(acc);
    if (m.is_l1() || m.is_linf()) return acc;
    return std::pow(acc, Scalar(1) / Scalar(m.p));
  }
};

}  // namespace detail

/// L_p distance between two equally sized vectors (row or column).
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar distance(const Eigen::MatrixBase<DerivedA>& a,
                                   const Eigen::MatrixBase<DerivedB>& b,
                                   const Metric& m) {
  using Scalar = typename DerivedA::Scalar;
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "distance: dimension mismatch");
  }
  detail::Accumulator<Scalar> acc{m};
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    acc.add(std::abs(a.coeff(j) - b.coeff(j)));
  }
  return acc.finish();
}

/// Lower bound on the distance from `q` to any point of the axis-aligned
/// box [lo, hi].
template <typename DerivedQ, typename DerivedLo, typename DerivedHi>
typename DerivedQ::Scalar box_distance(const Eigen::MatrixBase<DerivedQ>& q,
                                       const Eigen::MatrixBase<DerivedLo>& lo,
                                       const Eigen::MatrixBase<DerivedHi>& hi,
                                       const Metric& m) {
  using Scalar = typename DerivedQ::Scalar;
  detail::Accumulator<Scalar> acc{m};
  for (Eigen::Index j = 0; j < q.size(); ++j) {
    const Scalar v = q.coeff(j);
    if (v < lo.coeff(j)) {
      acc.add(lo.coeff(j) - v);
    } else if (v > hi.coeff(j)) {
      acc.add(v - hi.coeff(j));
    } else {
      acc.add(Scalar(0));
    }
  }
  return acc.finish();
}

}  // namespace nnc
