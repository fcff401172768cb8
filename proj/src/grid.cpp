#include "sympds/grid.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

namespace sympds {

static_assert(std::endian::native == std::endian::little,
              "binary field layout assumes a little-endian host");

namespace {
constexpr std::int64_t kGridBudget = std::int64_t(1) << 26;

std::int64_t checked_size(int dims, int m) {
  if (dims < 1) throw std::invalid_argument("GridField: dims must be >= 1");
  if (m < 2 || (m & (m - 1)) != 0)
    throw std::invalid_argument(
        "GridField: points per axis must be a power of two");
  std::int64_t n = 1;
  for (int i = 0; i < dims; ++i) {
    n *= m;
    if (n > kGridBudget) throw ResourceError("GridField: grid above budget");
  }
  return n;
}
}  // namespace

GridField::GridField(int dims, int points_per_axis, double extent, Space tag)
    : GridField(dims, points_per_axis, std::vector<double>(dims, extent), tag) {}

GridField::GridField(int dims, int points_per_axis,
                     std::vector<double> extents, Space tag)
    : dims_(dims), m_(points_per_axis), extents_(std::move(extents)),
      tag_(tag) {
  values_ = Eigen::ArrayXcd::Zero(checked_size(dims, points_per_axis));
  if (int(extents_.size()) != dims_)
    throw std::invalid_argument("GridField: extents size mismatch");
  for (double L : extents_)
    if (!(L > 0.0)) throw std::invalid_argument("GridField: extent <= 0");
}

bool GridField::uniform_extent() const {
  for (double L : extents_)
    if (L != extents_[0]) return false;
  return true;
}

GridField GridField::sample(
    int dims, int points_per_axis, double extent,
    const std::function<cplx(std::span<const double>)>& f, Space tag) {
  GridField g(dims, points_per_axis, extent, tag);
  std::vector<double> x(dims);
  std::vector<int> idx(dims, 0);
  for (std::int64_t flat = 0; flat < g.size(); ++flat) {
    for (int a = 0; a < dims; ++a) x[a] = g.coord(a, idx[a]);
    g.values_(flat) = f(x);
    for (int a = dims - 1; a >= 0; --a) {
      if (++idx[a] < points_per_axis) break;
      idx[a] = 0;
    }
  }
  return g;
}

void GridField::point(std::int64_t flat, std::span<double> out) const {
  for (int a = dims_ - 1; a >= 0; --a) {
    out[a] = coord(a, int(flat % m_));
    flat /= m_;
  }
}

std::int64_t GridField::flat_index(std::span<const int> idx) const {
  std::int64_t flat = 0;
  for (int a = 0; a < dims_; ++a) flat = flat * m_ + idx[a];
  return flat;
}

cplx GridField::interpolate(std::span<const double> x) const {
  if (int(x.size()) != dims_)
    throw std::invalid_argument("GridField::interpolate: dims mismatch");
  std::vector<int> base(dims_);
  std::vector<double> frac(dims_);
  for (int a = 0; a < dims_; ++a) {
    const double L = extents_[a];
    if (x[a] < -L - 1e-12 || x[a] > L + 1e-12)
      throw std::domain_error("GridField::interpolate: point outside box");
    double u = (x[a] + L) / spacing(a) - 0.5;  // fractional sample index
    u = std::min(std::max(u, 0.0), double(m_ - 1));  // boundary half-cells
    int i0 = int(std::floor(u));
    i0 = std::min(i0, m_ - 2);
    base[a] = i0;
    frac[a] = u - i0;
  }
  cplx acc(0.0, 0.0);
  std::vector<int> idx(dims_);
  for (int corner = 0; corner < (1 << dims_); ++corner) {
    double w = 1.0;
    for (int a = 0; a < dims_; ++a) {
      const int bit = (corner >> a) & 1;
      idx[a] = base[a] + bit;
      w *= bit ? frac[a] : 1.0 - frac[a];
    }
    if (w != 0.0) acc += w * values_(flat_index(idx));
  }
  return acc;
}

GridField GridField::compose_signed_perm(const std::vector<int>& perm,
                                         const std::vector<int>& sign) const {
  if (int(perm.size()) != dims_ || int(sign.size()) != dims_)
    throw std::invalid_argument("compose_signed_perm: size mismatch");
  // result(X) = this(AX): the argument of this along its axis k is
  // sign[k] X[perm[k]], so this's axis-k extent constrains X[perm[k]].
  std::vector<double> out_extents(dims_);
  for (int k = 0; k < dims_; ++k) out_extents[perm[k]] = extents_[k];
  GridField out(dims_, m_, out_extents, tag_);
  std::vector<int> idx(dims_, 0), src(dims_);
  for (std::int64_t flat = 0; flat < size(); ++flat) {
    for (int k = 0; k < dims_; ++k) {
      const int t = idx[perm[k]];
      src[k] = sign[k] > 0 ? t : m_ - 1 - t;
    }
    out.values()(flat) = values_(flat_index(src));
    for (int a = dims_ - 1; a >= 0; --a) {
      if (++idx[a] < m_) break;
      idx[a] = 0;
    }
  }
  return out;
}

double GridField::l2_norm() const {
  double hd = 1.0;
  for (int a = 0; a < dims_; ++a) hd *= spacing(a);
  return std::sqrt(hd * values_.abs2().sum());
}

double rel_l2_diff(const GridField& a, const GridField& b) {
  if (a.dims() != b.dims() || a.size() != b.size())
    throw std::invalid_argument("rel_l2_diff: shape mismatch");
  const double den = std::max({a.values().matrix().norm(),
                               b.values().matrix().norm(), 1e-300});
  return (a.values() - b.values()).matrix().norm() / den;
}

void GridField::save(const std::string& path) const {
  if (!uniform_extent())
    throw std::invalid_argument("GridField::save: extents not uniform");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("GridField::save: cannot open " + path);
  const std::uint64_t dims = dims_, m = m_;
  const double L = extents_[0];
  out.write(reinterpret_cast<const char*>(&dims), 8);
  out.write(reinterpret_cast<const char*>(&m), 8);
  out.write(reinterpret_cast<const char*>(&L), 8);
  for (std::int64_t i = 0; i < size(); ++i) {
    const double re = values_(i).real(), im = values_(i).imag();
    out.write(reinterpret_cast<const char*>(&re), 8);
    out.write(reinterpret_cast<const char*>(&im), 8);
  }
  if (!out) throw std::runtime_error("GridField::save: write failed");
}

GridField GridField::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("GridField::load: cannot open " + path);
  std::uint64_t dims = 0, m = 0;
  double extent = 0.0;
  in.read(reinterpret_cast<char*>(&dims), 8);
  in.read(reinterpret_cast<char*>(&m), 8);
  in.read(reinterpret_cast<char*>(&extent), 8);
  if (!in) throw std::runtime_error("GridField::load: bad header");
  GridField g(int(dims), int(m), extent);
  for (std::int64_t i = 0; i < g.size(); ++i) {
    double re = 0.0, im = 0.0;
    in.read(reinterpret_cast<char*>(&re), 8);
    in.read(reinterpret_cast<char*>(&im), 8);
    g.values()(i) = cplx(re, im);
  }
  if (!in) throw std::runtime_error("GridField::load: truncated file");
  return g;
}

bool Box::contains(std::span<const double> x, double slack) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (x[i] < lo[i] - slack || x[i] > hi[i] + slack) return false;
  return true;
}

EvaluableField make_evaluable(const GridField& g) {
  EvaluableField f;
  f.dims = g.dims();
  f.domain.lo.resize(g.dims());
  f.domain.hi.resize(g.dims());
  for (int a = 0; a < g.dims(); ++a) {
    f.domain.lo[a] = -g.extent(a);
    f.domain.hi[a] = g.extent(a);
  }
  // the grid is copied into the closure so the contract stays valid
  f.eval = [grid = g](std::span<const double> x) {
    return grid.interpolate(x);
  };
  return f;
}

EvaluableField make_evaluable(
    int dims, double extent, std::function<cplx(std::span<const double>)> fn) {
  EvaluableField f;
  f.dims = dims;
  f.domain.lo.assign(dims, -extent);
  f.domain.hi.assign(dims, extent);
  f.eval = std::move(fn);
  return f;
}

}  // namespace sympds
