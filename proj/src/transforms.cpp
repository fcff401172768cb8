#include "sympds/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sympds/quad.hpp"
#include "sympds/specfun.hpp"

namespace sympds::transforms {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void fft_radix2(std::vector<cplx>& a, int sign) {
  const int n = int(a.size());
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    for (int i = 0; i < n; i += len) {
      for (int t = 0; t < len / 2; ++t) {
        const double ang = sign * 2.0 * kPi * t / len;
        const cplx w(std::cos(ang), std::sin(ang));
        const cplx u = a[i + t];
        const cplx v = a[i + t + len / 2] * w;
        a[i + t] = u + v;
        a[i + t + len / 2] = u - v;
      }
    }
  }
}

// One axis of the half-offset continuous-transform correction:
//   out_s = h_in K r_s sum_t e^(sgn 2 i pi t s / M) r_t in_t,
//   r_u = e^(sgn 2 i pi c u / M), K = e^(sgn 2 i pi c^2 / M), c = (1-M)/2,
// with sgn = -1 forward, +1 inverse; h_in is the input spacing.  The axis
// extent becomes M / (4 L_in) either way, which makes the pair exactly
// inverse on the discrete data.
void transform_axis(GridField& f, int axis, bool inverse) {
  const int M = f.points_per_axis();
  const int d = f.dims();
  const double c = 0.5 * (1.0 - M);
  const int sgn = inverse ? 1 : -1;
  std::vector<cplx> ramp(M);
  for (int u = 0; u < M; ++u) {
    const double ang = sgn * 2.0 * kPi * c * u / M;
    ramp[u] = cplx(std::cos(ang), std::sin(ang));
  }
  const double angK = sgn * 2.0 * kPi * c * c / M;
  const cplx scale = f.spacing(axis) * cplx(std::cos(angK), std::sin(angK));

  std::int64_t stride = 1;
  for (int a = d - 1; a > axis; --a) stride *= M;
  const std::int64_t lines = f.size() / M;
  std::vector<cplx> line(M);
  auto& v = f.values();
  for (std::int64_t ln = 0; ln < lines; ++ln) {
    const std::int64_t start =
        (ln / stride) * stride * M + (ln % stride);
    for (int t = 0; t < M; ++t) line[t] = v(start + t * stride) * ramp[t];
    fft_radix2(line, sgn);
    for (int s = 0; s < M; ++s)
      v(start + s * stride) = line[s] * ramp[s] * scale;
  }
  f.set_extent(axis, M / (4.0 * f.extent(axis)));
}

std::vector<int> all_axes(int d) {
  std::vector<int> a(d);
  for (int i = 0; i < d; ++i) a[i] = i;
  return a;
}

// deterministic uniform doubles and normals from the standard mt19937_64
// stream (library distributions are not reproducible across platforms)
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform() {  // (0, 1]
    return (double(gen() >> 11) + 1.0) * 0x1.0p-53;
  }
  void normal_pair(double& a, double& b) {
    const double u1 = uniform(), u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    a = r * std::cos(2.0 * kPi * u2);
    b = r * std::sin(2.0 * kPi * u2);
  }
};

double sphere_area(int d) {
  return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
}

void apply_eps_point(std::span<const double> in, std::span<double> out) {
  const int d = int(in.size());
  for (int i = 0; i < d; ++i) out[i] = i < d / 2 ? in[i] : -in[i];
}

void apply_j_point(std::span<const double> in, std::span<double> out) {
  const int d = int(in.size());
  const int N = d / 2, n = N / 2;
  for (int block = 0; block < 2; ++block) {
    const int off = block * N;
    for (int i = 0; i < n; ++i) {
      out[off + i] = -in[off + n + i];
      out[off + n + i] = in[off + i];
    }
  }
}

// J_nu(x) / x^nu, stable down to x = 0 (series below 0.5)
double bessel_j_over_pow(int nu, double x) {
  if (x >= 0.5) return std::cyl_bessel_j(double(nu), x) / std::pow(x, nu);
  double fact = 1.0;
  for (int i = 1; i <= nu; ++i) fact *= i;
  const double q = -0.25 * x * x;
  double term = 1.0 / (std::pow(2.0, nu) * fact);
  double sum = term;
  for (int m = 1; m <= 12; ++m) {
    term *= q / (double(m) * double(nu + m));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

GridField fourier_partial(const GridField& f, const std::vector<int>& axes,
                          bool inverse) {
  for (int a : axes)
    if (a < 0 || a >= f.dims())
      throw std::invalid_argument("fourier_partial: invalid axis");
  GridField out = f;
  for (int a : axes) transform_axis(out, a, inverse);
  if (!axes.empty()) out.set_tag(Space::mixed);
  return out;
}

GridField fourier_continuous(const GridField& f) {
  if (f.tag() != Space::position)
    throw std::invalid_argument("fourier_continuous: field not in position space");
  GridField out = fourier_partial(f, all_axes(f.dims()), false);
  out.set_tag(Space::frequency);
  return out;
}

GridField inverse_fourier_continuous(const GridField& f) {
  if (f.tag() != Space::frequency)
    throw std::invalid_argument(
        "inverse_fourier_continuous: field not in frequency space");
  GridField out = fourier_partial(f, all_axes(f.dims()), true);
  out.set_tag(Space::position);
  return out;
}

GridField negate_axes(const GridField& f, const std::vector<int>& axes) {
  std::vector<int> perm(f.dims()), sign(f.dims(), 1);
  for (int i = 0; i < f.dims(); ++i) perm[i] = i;
  for (int a : axes) sign.at(a) = -1;
  return f.compose_signed_perm(perm, sign);
}

std::vector<int> im_axes(int d) {
  if (d % 2 != 0) throw std::invalid_argument("im_axes: odd dimension");
  std::vector<int> a(d / 2);
  for (int i = 0; i < d / 2; ++i) a[i] = d / 2 + i;
  return a;
}

std::vector<int> block2_realified_axes(int N) {
  const int n = N / 2;
  std::vector<int> a;
  for (int i = n; i < N; ++i) a.push_back(i);
  for (int i = N + n; i < 2 * N; ++i) a.push_back(i);
  return a;
}

std::vector<int> block2_im_axes(int N) {
  const int n = N / 2;
  std::vector<int> a;
  for (int i = N + n; i < 2 * N; ++i) a.push_back(i);
  return a;
}

std::vector<int> swap_blocks_perm(int N) {
  const int n = N / 2;
  std::vector<int> perm(2 * N);
  for (int block = 0; block < 2; ++block) {
    const int off = block * N;
    for (int i = 0; i < n; ++i) {
      perm[off + i] = off + n + i;
      perm[off + n + i] = off + i;
    }
  }
  return perm;
}

GridField fourier_eps(const GridField& f) {
  if (f.dims() % 2 != 0)
    throw std::invalid_argument("fourier_eps: dimension must be even");
  return negate_axes(fourier_continuous(f), im_axes(f.dims()));
}

GridField fourier_symplectic(const GridField& f) {
  const int d = f.dims();
  if (d % 4 != 0)
    throw std::invalid_argument("fourier_symplectic: dimension must be 4n");
  const int N = d / 2;
  GridField g = fourier_eps(f);
  std::vector<int> sign;
  const std::vector<int> perm = realified_j_signed_perm(N, sign);
  return g.compose_signed_perm(perm, sign);
}

GridField fourier_c2(const GridField& f, bool inverse) {
  const int d = f.dims();
  if (d % 4 != 0)
    throw std::invalid_argument("fourier_c2: dimension must be 4n");
  const int N = d / 2;
  if (!inverse)
    return negate_axes(fourier_partial(f, block2_realified_axes(N), false),
                       block2_im_axes(N));
  return fourier_partial(negate_axes(f, block2_im_axes(N)),
                         block2_realified_axes(N), true);
}

double check_flip(const GridField& f) {
  const int d = f.dims();
  if (d % 4 != 0) throw std::invalid_argument("check_flip: dimension must be 4n");
  const int N = d / 2;
  GridField mid = fourier_c2(f, true);
  mid.set_tag(Space::position);  // the composite feeds it back whole
  const GridField composite = fourier_c2(fourier_symplectic(mid));
  const std::vector<int> sign(d, 1);
  const GridField swapped = f.compose_signed_perm(swap_blocks_perm(N), sign);
  return rel_l2_diff(composite, swapped);
}

void complex_scale_point(cplx a, std::span<const double> in,
                         std::span<double> out) {
  const int d = int(in.size());
  const int K = d / 2;
  for (int j = 0; j < K; ++j) {
    out[j] = a.real() * in[j] - a.imag() * in[K + j];
    out[K + j] = a.imag() * in[j] + a.real() * in[K + j];
  }
}

namespace {

// semi-discrete partial transform: Riemann sum over the grid in the
// transformed axes, exact evaluation of f elsewhere
cplx sd_partial(const EvaluableField& f, const GridField& ref,
                const std::vector<int>& axes, const std::vector<int>& neg_axes,
                std::span<const double> base, std::span<const double> eta) {
  const int M = ref.points_per_axis();
  std::vector<double> x(base.begin(), base.end());
  std::vector<int> idx(axes.size(), 0);
  std::vector<char> negate(ref.dims(), 0);
  for (int a : neg_axes) negate[a] = 1;
  double h = 1.0;
  for (int a : axes) h *= ref.spacing(a);
  cplx acc(0.0, 0.0);
  for (;;) {
    double phase = 0.0;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      const double xa = ref.coord(axes[i], idx[i]);
      x[axes[i]] = xa;
      phase += xa * (negate[axes[i]] ? -eta[i] : eta[i]);
    }
    const double ang = -2.0 * kPi * phase;
    acc += f(x) * cplx(std::cos(ang), std::sin(ang));
    std::size_t a = axes.size();
    for (;;) {
      if (a == 0) return acc * h;
      --a;
      if (++idx[a] < M) break;
      idx[a] = 0;
    }
  }
}

}  // namespace

namespace {

// per-axis probe indices inside |coord| <= cap, at most four per axis
std::vector<int> probe_indices(const GridField& g, int axis, double cap) {
  std::vector<int> all;
  const int M = g.points_per_axis();
  for (int i = 0; i < M; ++i)
    if (std::abs(g.coord(axis, i)) <= cap) all.push_back(i);
  if (all.empty()) all.push_back(M / 2);
  std::vector<int> out;
  const int take = std::min<int>(4, int(all.size()));
  for (int t = 0; t < take; ++t)
    out.push_back(all[(all.size() - 1) * t / std::max(take - 1, 1)]);
  return out;
}

}  // namespace

double check_partial_scaling(const EvaluableField& f, cplx a, int n, int M,
                             double L) {
  if (a == cplx(0.0, 0.0))
    throw std::invalid_argument("check_partial_scaling: a must be nonzero");
  const int N = 2 * n, d = 2 * N;
  if (f.dims != d)
    throw std::invalid_argument("check_partial_scaling: field dims mismatch");
  const cplx ainv = 1.0 / a;
  // LHS through the grid transform
  std::vector<double> scaled(d);
  const GridField g_scaled = GridField::sample(
      d, M, L,
      [&](std::span<const double> x) {
        complex_scale_point(a, x, scaled);
        return f(scaled);
      });
  const GridField lhs = fourier_c2(g_scaled);

  const std::vector<int> axes = block2_realified_axes(N);
  const std::vector<int> negs = block2_im_axes(N);
  const GridField plain = GridField::sample(d, M, L, f.eval);

  // probe the mutually resolved core: the grid only represents the spectrum
  // of f(a .) inside the band it shares with f, which shrinks by |a|
  const double mod = std::abs(a);
  const double shrink = std::min(mod, 1.0 / mod);
  std::vector<std::vector<int>> per_axis(d);
  std::vector<char> is_freq(d, 0);
  for (int a2 : axes) is_freq[a2] = 1;
  for (int ax = 0; ax < d; ++ax) {
    const double cap =
        is_freq[ax] ? 0.5 * lhs.extent(ax) * shrink : 0.25 * L;
    per_axis[ax] = probe_indices(lhs, ax, cap);
  }

  std::vector<int> sel(d, 0), idx(d);
  std::vector<double> pt(d), eta(axes.size()), x1s(d), etas(axes.size());
  double num = 0.0, den = 0.0;
  bool done = false;
  while (!done) {
    for (int k = 0; k < d; ++k) {
      idx[k] = per_axis[k][sel[k]];
      pt[k] = lhs.coord(k, idx[k]);
    }
    const cplx lhs_v = lhs.values()(lhs.flat_index(idx));
    // RHS at (a X1, a^-1 xi2): exact semi-discrete sum
    complex_scale_point(a, pt, x1s);               // scales every coordinate;
    for (std::size_t i = 0; i < axes.size(); ++i)  // the X2 slots get relaid
      eta[i] = pt[axes[i]];
    const int nn = int(axes.size()) / 2;
    for (int i = 0; i < nn; ++i) {
      const double re = eta[i], im = eta[nn + i];
      etas[i] = ainv.real() * re - ainv.imag() * im;
      etas[nn + i] = ainv.imag() * re + ainv.real() * im;
    }
    const cplx rhs_v = std::pow(mod, -2.0 * n) *
                       sd_partial(f, plain, axes, negs, x1s, etas);
    num += std::norm(lhs_v - rhs_v);
    den += std::norm(lhs_v) + std::norm(rhs_v);
    int ax = d;
    for (;;) {
      if (ax == 0) { done = true; break; }
      --ax;
      if (++sel[ax] < int(per_axis[ax].size())) break;
      sel[ax] = 0;
    }
  }
  return std::sqrt(num / std::max(den, 1e-300));
}

double check_symp_scaling(const EvaluableField& f, cplx a, int N, int M,
                          double L) {
  if (a == cplx(0.0, 0.0))
    throw std::invalid_argument("check_symp_scaling: a must be nonzero");
  if (N % 2 != 0)
    throw std::invalid_argument("check_symp_scaling: N must be even");
  const int d = 2 * N;
  if (f.dims != d)
    throw std::invalid_argument("check_symp_scaling: field dims mismatch");
  const cplx ainv = 1.0 / a;
  // RHS = |a|^(-2N) F_symp(f(a^-1 .)) through the grid transform
  std::vector<double> tmp(d);
  const GridField g_inv = GridField::sample(
      d, M, L,
      [&](std::span<const double> x) {
        complex_scale_point(ainv, x, tmp);
        return f(tmp);
      });
  const GridField rhs_grid = fourier_symplectic(g_inv);
  const GridField plain = GridField::sample(d, M, L, f.eval);
  const std::vector<int> axes = all_axes(d);
  const std::vector<int> no_neg;

  const double mod = std::abs(a);
  const double shrink = std::min(mod, 1.0 / mod);
  const double amod = std::pow(mod, -double(d));
  std::vector<std::vector<int>> per_axis(d);
  for (int ax = 0; ax < d; ++ax) {
    std::vector<int> p =
        probe_indices(rhs_grid, ax, 0.5 * rhs_grid.extent(ax) * shrink);
    if (p.size() > 2) p = {p.front(), p.back()};  // 2^d probes of the full sum
    per_axis[ax] = p;
  }
  std::vector<int> sel(d, 0), idx(d);
  std::vector<double> xi(d), axi(d), w(d), jw(d);
  std::vector<double> zero(d, 0.0);
  double num = 0.0, den = 0.0;
  bool done = false;
  while (!done) {
    for (int k = 0; k < d; ++k) {
      idx[k] = per_axis[k][sel[k]];
      xi[k] = rhs_grid.coord(k, idx[k]);
    }
    const cplx rhs_v = amod * rhs_grid.values()(rhs_grid.flat_index(idx));
    // LHS = (F_symp f)(a xi), semi-discrete: kernel e^{-2 i pi <x, eps J a xi>}
    complex_scale_point(a, xi, axi);
    apply_j_point(axi, jw);
    apply_eps_point(jw, w);
    const cplx lhs_v = sd_partial(f, plain, axes, no_neg, zero, w);
    num += std::norm(lhs_v - rhs_v);
    den += std::norm(lhs_v) + std::norm(rhs_v);
    int ax = d;
    for (;;) {
      if (ax == 0) { done = true; break; }
      --ax;
      if (++sel[ax] < int(per_axis[ax].size())) break;
      sel[ax] = 0;
    }
  }
  return std::sqrt(num / std::max(den, 1e-300));
}

QuadratureResult ks_integral(const SparsePoly& h, const Parameter& param,
                             const Eigen::VectorXd& y,
                             const QuadratureConfig& quad) {
  const int N = param.N();
  const int d = 2 * N;
  if (h.arity() != d)
    throw std::invalid_argument("ks_integral: polynomial arity must be 2N");
  if (std::abs(param.mu.imag()) > 1e-14)
    throw DivergenceError("ks_integral: mu must be real in the strip");
  const double mu = param.mu.real();
  if (!(mu > -N && mu < 1 - N))
    throw DivergenceError("ks_integral: mu outside (-N, 1-N)");
  if (int(y.size()) != d || std::abs(y.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("ks_integral: Y must be a unit vector in R^2N");
  if (quad.points < quad.batches)
    throw std::invalid_argument("ks_integral: budget below batch count");

  // Re w(X, Y) = <X, eps J Y> with |eps J Y| = 1
  std::vector<double> jy(d), w(d);
  apply_j_point(std::span<const double>(y.data(), size_t(d)), jy);
  apply_eps_point(jy, w);

  const double alpha = -(mu + N);  // kernel |t|^alpha, alpha in (-1, 0)
  const bool odd = param.delta % 2 != 0;
  // flatten the polynomial once
  std::vector<std::pair<std::vector<int>, cplx>> terms(h.terms().begin(),
                                                       h.terms().end());
  Rng rng(quad.seed);
  const int B = quad.batches;
  const std::int64_t per_batch = quad.points / B;
  std::vector<cplx> batch_means(B);
  std::vector<double> x(d);
  cplx total(0.0, 0.0);
  for (int b = 0; b < B; ++b) {
    cplx acc(0.0, 0.0);
    for (std::int64_t i = 0; i < per_batch; ++i) {
      double norm2 = 0.0;
      for (int c = 0; c < d; c += 2) {
        rng.normal_pair(x[c], x[c + 1]);
        norm2 += x[c] * x[c] + x[c + 1] * x[c + 1];
      }
      const double inv = 1.0 / std::sqrt(norm2);
      double t = 0.0;
      for (int c = 0; c < d; ++c) {
        x[c] *= inv;
        t += x[c] * w[c];
      }
      double kern = std::pow(std::abs(t), alpha);
      if (odd && t < 0.0) kern = -kern;
      cplx hv(0.0, 0.0);
      for (const auto& [e, cfc] : terms) {
        double mono = 1.0;
        for (int c = 0; c < d; ++c)
          for (int p = 0; p < e[c]; ++p) mono *= x[c];
        hv += cfc * mono;
      }
      acc += hv * kern;
    }
    batch_means[b] = acc / double(per_batch);
    total += acc;
  }
  const double area = sphere_area(d);
  QuadratureResult res;
  res.points = per_batch * B;
  res.value = total / double(res.points) * area;
  const cplx mean = total / double(res.points);
  double var = 0.0;
  for (const cplx& bm : batch_means) var += std::norm(bm - mean);
  var /= double(B) * double(B - 1);
  res.std_error = std::sqrt(var) * area;
  if (quad.target_rel_se > 0.0 &&
      res.std_error > quad.target_rel_se * std::abs(res.value))
    throw BudgetError("ks_integral: requested precision not reached in budget");
  return res;
}

KsNormalizationReport verify_knapp_stein_normalization(
    const SparsePoly& p, const Parameter& param, const Eigen::VectorXd& y,
    const QuadratureConfig& quad) {
  const int N = param.N();
  const int d = 2 * N;
  const int k = std::max(p.degree(), 0);
  if (!p.is_homogeneous())
    throw std::invalid_argument("verify_knapp_stein_normalization: p not homogeneous");
  if ((k - param.delta) % 2 != 0)
    throw std::invalid_argument(
        "verify_knapp_stein_normalization: parity of p must match delta");
  KsNormalizationReport rep;
  const QuadratureResult q = ks_integral(p, param, y, quad);
  rep.integral = q.value;
  rep.std_error = q.std_error;
  const cplx cn = specfun::ks_normalization(param.mu, param.delta % 2 != 0, N);
  const cplx b = specfun::b_function(param.mu - double(N), k, 2 * N);
  std::vector<double> t1(d), t2(d);
  // eps(J Y)
  apply_j_point(std::span<const double>(y.data(), size_t(d)), t1);
  apply_eps_point(t1, t2);
  rep.closed_eps_j = cn * b * p.eval(std::span<const double>(t2));
  // (eps J)^-1 Y = -eps J Y
  for (double& v : t2) v = -v;
  rep.closed_eps_j_inv = cn * b * p.eval(std::span<const double>(t2));
  const double se = std::max(rep.std_error, 1e-300);
  rep.deviations_eps_j = std::abs(rep.integral - rep.closed_eps_j) / se;
  rep.deviations_eps_j_inv = std::abs(rep.integral - rep.closed_eps_j_inv) / se;
  rep.matched = rep.deviations_eps_j <= rep.deviations_eps_j_inv
                    ? "eps_j"
                    : "eps_j_inverse";
  return rep;
}

RadialHarmonicTransform::RadialHarmonicTransform(SparsePoly p,
                                                 double radial_power,
                                                 double damping)
    : p_(std::move(p)), power_(radial_power), damping_(damping) {
  if (p_.arity() % 2 != 0)
    throw std::invalid_argument("RadialHarmonicTransform: arity must be even");
  N_ = p_.arity() / 2;
  k_ = std::max(p_.degree(), 0);
  if (!p_.is_homogeneous() || !laplacian(p_).empty())
    throw std::invalid_argument(
        "RadialHarmonicTransform: p must be harmonic homogeneous");
  if (!(damping_ > 0.0))
    throw std::invalid_argument("RadialHarmonicTransform: damping must be > 0");
  if (!(power_ + k_ > -2 * N_))
    throw DivergenceError("RadialHarmonicTransform: not locally integrable");
}

double RadialHarmonicTransform::radial_integral(double r) const {
  auto it = cache_.find(r);
  if (it != cache_.end()) return it->second;
  const int nu = k_ + N_ - 1;
  const double beta = N_ + power_ + nu;  // singular exponent on [0, 1]
  const double two_pi_eps = 2.0 * kPi * damping_;
  double total = 0.0;
  // [0, 1]: Gauss-Jacobi in the weight s^beta
  {
    const int nodes = std::min(140, 24 + int(3.0 * r));
    const quad::Rule rule = quad::gauss_jacobi_unit(nodes, beta);
    const double bfac = std::pow(2.0 * kPi * r, nu);
    double acc = 0.0;
    for (int i = 0; i < int(rule.nodes.size()); ++i) {
      const double s = rule.nodes[i];
      acc += rule.weights[i] * bfac * bessel_j_over_pow(nu, 2.0 * kPi * r * s) *
             std::exp(-two_pi_eps * s);
    }
    total += acc;
  }
  // [1, inf): damped oscillation, fixed panels until negligible
  {
    static const quad::Rule leg = quad::gauss_legendre(12);
    const double panel = 1.5 / std::max(r, 1.0);
    double s0 = 1.0;
    int quiet = 0;
    const double smax = 1.0 + 60.0 / two_pi_eps;
    while (s0 < smax && quiet < 3) {
      double acc = 0.0;
      for (int i = 0; i < 12; ++i) {
        const double s = s0 + 0.5 * panel * (leg.nodes[i] + 1.0);
        acc += 0.5 * panel * leg.weights[i] * std::pow(s, N_ + power_) *
               std::exp(-two_pi_eps * s) *
               std::cyl_bessel_j(double(nu), 2.0 * kPi * r * s);
      }
      total += acc;
      if (std::abs(acc) < 1e-17 * (std::abs(total) + 1e-300)) ++quiet;
      else quiet = 0;
      s0 += panel;
    }
  }
  cache_.emplace(r, total);
  return total;
}

cplx RadialHarmonicTransform::eval_conjugate(std::span<const double> xi) const {
  const int d = 2 * N_;
  if (int(xi.size()) != d)
    throw std::invalid_argument("RadialHarmonicTransform: dims mismatch");
  double r2 = 0.0;
  for (double v : xi) r2 += v * v;
  const double r = std::sqrt(r2);
  if (r == 0.0)
    throw std::domain_error("RadialHarmonicTransform: evaluation at origin");
  std::vector<double> unit(d);
  for (int i = 0; i < d; ++i) unit[i] = (i < N_ ? xi[i] : -xi[i]) / r;
  const cplx ang = p_.eval(std::span<const double>(unit));
  return 2.0 * kPi * specfun::i_pow_minus(k_) * std::pow(r, 1.0 - N_) * ang *
         radial_integral(r);
}

cplx RadialHarmonicTransform::eval_symplectic(
    std::span<const double> xi) const {
  std::vector<double> jxi(xi.size());
  apply_j_point(xi, jxi);
  return eval_conjugate(jxi);
}

}  // namespace sympds::transforms
