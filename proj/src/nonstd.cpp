#include "sympds/nonstd.hpp"

#include <cmath>

namespace sympds::nonstd {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

HeisenbergCoords HeisenbergCoords::from_realified(int m,
                                                  std::span<const double> y) {
  const int K = 2 * m + 1;
  if (int(y.size()) != 2 * K)
    throw std::invalid_argument("HeisenbergCoords: realified size mismatch");
  HeisenbergCoords c;
  c.m = m;
  c.t = cplx(y[0], y[K]);
  c.x1.resize(m);
  c.x2.resize(m);
  for (int i = 0; i < m; ++i) {
    c.x1[i] = cplx(y[1 + i], y[K + 1 + i]);
    c.x2[i] = cplx(y[1 + m + i], y[K + 1 + m + i]);
  }
  return c;
}

void HeisenbergCoords::to_realified(std::span<double> y) const {
  const int K = 2 * m + 1;
  y[0] = t.real();
  y[K] = t.imag();
  for (int i = 0; i < m; ++i) {
    y[1 + i] = x1[i].real();
    y[K + 1 + i] = x1[i].imag();
    y[1 + m + i] = x2[i].real();
    y[K + 1 + m + i] = x2[i].imag();
  }
}

EvaluableField restrict_to_heisenberg(const EvaluableField& f, int m) {
  const int N = 2 * (m + 1);
  if (f.dims != 2 * N)
    throw std::invalid_argument("restrict_to_heisenberg: f must live on C^(2m+2)");
  EvaluableField out;
  const int K = 2 * m + 1;
  out.dims = 2 * K;
  // the pullback box: whatever t-range keeps (1, X1, 2t, X2) inside f's box
  out.domain.lo.assign(2 * K, 0.0);
  out.domain.hi.assign(2 * K, 0.0);
  for (int i = 0; i < 2 * K; ++i) {
    // target slots scale by 2 on the t coordinates
    const bool is_t = (i == 0) || (i == K);
    const double cap = f.domain.hi[1];  // uniform boxes in practice
    out.domain.lo[i] = is_t ? -cap / 2.0 : -cap;
    out.domain.hi[i] = is_t ? cap / 2.0 : cap;
  }
  out.eval = [f, m, N, K](std::span<const double> y) {
    const HeisenbergCoords c = HeisenbergCoords::from_realified(m, y);
    std::vector<double> x(2 * N, 0.0);
    const int n = m + 1;
    x[0] = 1.0;  // Re z_0 = 1, Im z_0 = 0
    for (int i = 0; i < m; ++i) {
      x[1 + i] = c.x1[i].real();
      x[N + 1 + i] = c.x1[i].imag();
    }
    x[n] = 2.0 * c.t.real();
    x[N + n] = 2.0 * c.t.imag();
    for (int i = 0; i < m; ++i) {
      x[n + 1 + i] = c.x2[i].real();
      x[N + n + 1 + i] = c.x2[i].imag();
    }
    if (!f.domain.contains(x, 1e-12))
      throw std::domain_error("restrict_to_heisenberg: slice leaves the box");
    return f(x);
  };
  return out;
}

GridField alpha_map(const EvaluableField& f, int m, int points_per_axis,
                    double extent) {
  const EvaluableField restricted = restrict_to_heisenberg(f, m);
  const int K = 2 * m + 1;
  const GridField g =
      GridField::sample(2 * K, points_per_axis, extent, restricted.eval);
  // conjugate partial transform over the (t, X2) complex coordinates
  std::vector<int> axes, neg;
  axes.push_back(0);
  neg.push_back(K);
  for (int i = 0; i < m; ++i) {
    axes.push_back(1 + m + i);
    neg.push_back(K + 1 + m + i);
  }
  std::vector<int> all = axes;
  all.insert(all.end(), neg.begin(), neg.end());
  return transforms::negate_axes(transforms::fourier_partial(g, all, false),
                                 neg);
}

EvaluableField algebraic_intertwiner(const EvaluableField& h,
                                     const Parameter& param) {
  const int K = 2 * param.m() + 1;
  if (h.dims != 2 * K)
    throw std::invalid_argument("algebraic_intertwiner: dims mismatch");
  EvaluableField out;
  out.dims = h.dims;
  out.domain = h.domain;
  const cplx mu = param.mu;
  const int delta = param.delta;
  const int m = param.m();
  out.eval = [h, mu, delta, m](std::span<const double> y) {
    HeisenbergCoords c = HeisenbergCoords::from_realified(m, y);
    if (c.t == cplx(0.0, 0.0))
      throw std::domain_error("algebraic_intertwiner: s = 0");
    const cplx s_half = c.t / 2.0;
    const cplx unit = c.t / std::abs(c.t);
    cplx scalar = std::pow(cplx(std::abs(s_half), 0.0), -mu);
    // [s]^(-delta) by integer powers of the unit part
    for (int i = 0; i < std::abs(delta); ++i)
      scalar *= (delta > 0) ? (1.0 / unit) : unit;
    HeisenbergCoords mapped;
    mapped.m = c.m;
    mapped.t = c.t;
    mapped.x1.resize(m);
    mapped.x2.resize(m);
    for (int i = 0; i < m; ++i) {
      mapped.x1[i] = (2.0 / c.t) * c.x2[i];
      mapped.x2[i] = (c.t / 2.0) * c.x1[i];
    }
    std::vector<double> ym(2 * (2 * m + 1));
    mapped.to_realified(ym);
    return scalar * h(ym);
  };
  return out;
}

std::pair<EvaluableField, EvaluableField> project_pm(const EvaluableField& h) {
  const int m = (h.dims / 2 - 1) / 2;
  const Parameter zero(cplx(0.0, 0.0), 0, m + 1);
  const EvaluableField th = algebraic_intertwiner(h, zero);
  EvaluableField plus, minus;
  plus.dims = minus.dims = h.dims;
  plus.domain = minus.domain = h.domain;
  plus.eval = [h, th](std::span<const double> y) {
    return 0.5 * (h(y) + th(y));
  };
  minus.eval = [h, th](std::span<const double> y) {
    return 0.5 * (h(y) - th(y));
  };
  return {plus, minus};
}

GridField apply_intertwiner_grid_m0(const GridField& h,
                                    const Parameter& param) {
  if (h.dims() != 2)
    throw std::invalid_argument("apply_intertwiner_grid_m0: expects C^1 grid");
  GridField out = h;
  const int M = h.points_per_axis();
  for (int i = 0; i < M; ++i) {
    for (int j = 0; j < M; ++j) {
      const cplx s(h.coord(0, i), h.coord(1, j));
      const cplx unit = s / std::abs(s);
      cplx scalar = std::pow(cplx(std::abs(s / 2.0), 0.0), -param.mu);
      for (int q = 0; q < std::abs(param.delta); ++q)
        scalar *= (param.delta > 0) ? (1.0 / unit) : unit;
      const std::int64_t flat = std::int64_t(i) * M + j;
      out.values()(flat) = scalar * h.values()(flat);
    }
  }
  return out;
}

DiagramReport verify_diagram(const SparsePoly& p, const Parameter& param,
                             const DiagramConfig& config) {
  if (param.n != 1)
    throw ResourceError("verify_diagram: only n = 1 within the desk budget");
  if (std::abs(param.mu.imag()) > 1e-14)
    throw std::invalid_argument("verify_diagram: mu must be real in the strip");
  const int N = param.N();
  const double mu = param.mu.real();
  if (!(mu > -N && mu < 1 - N))
    throw DivergenceError("verify_diagram: mu outside the strip");
  const int k = std::max(p.degree(), 0);
  if ((k - param.delta) % 2 != 0)
    throw std::invalid_argument("verify_diagram: parity of p must match delta");

  DiagramReport report;
  report.n = param.n;
  report.mu = mu;
  report.delta = param.delta;
  report.epsilons = config.epsilons;

  const double big = 1e9;  // closed forms are entire in the realified point
  for (const double eps : config.epsilons) {
    // f = p_(mu-N) e^(-2 pi eps r) on C^N, evaluated exactly
    const EvaluableField f = make_evaluable(
        2 * N, big, [p, mu, N, k, eps](std::span<const double> x) {
          double r2 = 0.0;
          for (double v : x) r2 += v * v;
          const double r = std::sqrt(r2);
          return std::pow(r, mu - N - k) * p.eval(x) *
                 std::exp(-2.0 * kPi * eps * r);
        });
    // path B: intertwiner after the model map
    const GridField hb = alpha_map(f, param.m(), config.points_per_axis,
                                   config.extent);
    const GridField hb_t = apply_intertwiner_grid_m0(hb, param);

    // path A: model map of the symplectic transform of f, the latter
    // through the radial reduction (the grid cannot see the r^(mu-N) mass
    // concentrated at the origin)
    const transforms::RadialHarmonicTransform rt(p, mu - N, eps);
    const EvaluableField fsymp = make_evaluable(
        2 * N, big, [&rt](std::span<const double> xi) {
          return rt.eval_symplectic(xi);
        });
    const GridField ha = alpha_map(fsymp, param.m(), config.points_per_axis,
                                   config.extent);

    report.residuals.push_back(rel_l2_diff(ha, hb_t));
  }

  // Aitken extrapolation of the tail of the residual sequence
  const auto& r = report.residuals;
  double extrap = r.back();
  if (r.size() >= 3) {
    const double r1 = r[r.size() - 3], r2 = r[r.size() - 2],
                 r3 = r[r.size() - 1];
    const double denom = r1 - 2.0 * r2 + r3;
    if (std::abs(denom) > 1e-14) extrap = r3 - (r3 - r2) * (r3 - r2) / denom;
  }
  report.extrapolated = std::max(extrap, 0.0);
  report.monotone = true;
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] > r[i - 1] * 1.05 + 1e-9) report.monotone = false;
  return report;
}

}  // namespace sympds::nonstd
