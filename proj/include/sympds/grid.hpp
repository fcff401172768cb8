#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sympds/types.hpp"

namespace sympds {

enum class Space { position, frequency, mixed };

// Uniform d-dimensional sampling of a complex field with M points per axis,
// offset by half a spacing so no sample touches a coordinate hyperplane.
// Axis a covers [-L_a, L_a); extents may differ per axis after a partial
// Fourier pass.  Row-major storage, last axis fastest.
class GridField {
 public:
  GridField(int dims, int points_per_axis, double extent,
            Space tag = Space::position);
  GridField(int dims, int points_per_axis, std::vector<double> extents,
            Space tag);

  static GridField sample(int dims, int points_per_axis, double extent,
                          const std::function<cplx(std::span<const double>)>& f,
                          Space tag = Space::position);

  int dims() const { return dims_; }
  int points_per_axis() const { return m_; }
  double extent(int axis = 0) const { return extents_.at(axis); }
  const std::vector<double>& extents() const { return extents_; }
  bool uniform_extent() const;
  double spacing(int axis = 0) const { return 2.0 * extents_.at(axis) / m_; }
  Space tag() const { return tag_; }
  void set_tag(Space t) { tag_ = t; }
  void set_extent(int axis, double L) { extents_.at(axis) = L; }
  std::int64_t size() const { return std::int64_t(values_.size()); }

  Eigen::ArrayXcd& values() { return values_; }
  const Eigen::ArrayXcd& values() const { return values_; }

  // coordinate of sample index t along an axis: (t + 1/2 - M/2) * spacing
  double coord(int axis, int index) const {
    return (index + 0.5 - 0.5 * m_) * spacing(axis);
  }
  void point(std::int64_t flat, std::span<double> out) const;
  std::int64_t flat_index(std::span<const int> idx) const;

  cplx interpolate(std::span<const double> x) const;  // multilinear

  // result(X) = this(A X) for a signed coordinate permutation A given by
  // (A X)_k = sign[k] * X[perm[k]]; exact on the offset grid.  Extents must
  // be compatible (extent of axis perm[k] becomes extent of axis k).
  GridField compose_signed_perm(const std::vector<int>& perm,
                                const std::vector<int>& sign) const;

  double l2_norm() const;  // continuous normalisation: sqrt(prod h_a sum|v|^2)

  void save(const std::string& path) const;  // uniform-extent fields only
  static GridField load(const std::string& path);

 private:
  int dims_;
  int m_;
  std::vector<double> extents_;
  Space tag_;
  Eigen::ArrayXcd values_;
};

double rel_l2_diff(const GridField& a, const GridField& b);

struct Box {
  std::vector<double> lo, hi;
  bool contains(std::span<const double> x, double slack = 0.0) const;
};

// Evaluation contract: a deterministic point -> complex map on a declared
// box.  Grid fields provide it via interpolation; closed forms directly.
struct EvaluableField {
  int dims = 0;
  Box domain;
  std::function<cplx(std::span<const double>)> eval;

  cplx operator()(std::span<const double> x) const { return eval(x); }
};

EvaluableField make_evaluable(const GridField& g);
EvaluableField make_evaluable(int dims, double extent,
                              std::function<cplx(std::span<const double>)> f);

}  // namespace sympds
