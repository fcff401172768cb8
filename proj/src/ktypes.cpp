#include "sympds/ktypes.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "sympds/polyharm.hpp"
#include "sympds/specfun.hpp"
#include "sympds/su2.hpp"

namespace sympds::ktypes {

std::vector<KTypeLabel> branching(int delta, int l_max) {
  if (l_max < 0) throw std::invalid_argument("branching: l_max must be >= 0");
  std::vector<KTypeLabel> out;
  for (int l = 0; l <= l_max; ++l)
    for (int l2 = 0; l2 <= l; ++l2)
      if (specfun::is_admissible(delta, l, l2)) out.push_back({l, l2});
  return out;
}

std::int64_t weyl_dim(int n, const KTypeLabel& label) {
  if (label.l2 < 0 || label.l < label.l2)
    throw std::invalid_argument("weyl_dim: invalid label");
  if (n < 1) throw std::invalid_argument("weyl_dim: n must be >= 1");
  if (n == 1 && label.l2 > 0)
    throw std::invalid_argument("weyl_dim: two-row weight needs rank >= 2");

  // lambda + rho and rho in coordinates; rho_i = n - i + 1
  std::vector<std::int64_t> lam(n, 0), rho(n, 0);
  lam[0] = label.l;
  if (n >= 2) lam[1] = label.l2;
  for (int i = 0; i < n; ++i) {
    rho[i] = n - i;
    lam[i] += rho[i];
  }
  // positive roots of C_n: e_i - e_j, e_i + e_j (i < j), and 2 e_i
  // (the factor 2 cancels between numerator and denominator)
  std::int64_t num = 1, den = 1;
  auto push = [&](std::int64_t a, std::int64_t b) {
    num *= a;
    den *= b;
    const std::int64_t g = std::gcd(std::abs(num), std::abs(den));
    if (g > 1) { num /= g; den /= g; }
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      push(lam[i] - lam[j], rho[i] - rho[j]);
      push(lam[i] + lam[j], rho[i] + rho[j]);
    }
    push(lam[i], rho[i]);
  }
  if (den != 1 || num <= 0)
    throw std::logic_error("weyl_dim: non-integer dimension");
  return num;
}

bool check_quaternionic_dimension(int n, int k) {
  if (n < 2) throw std::invalid_argument("check_quaternionic_dimension: n >= 2");
  std::int64_t sum = 0;
  for (int l2 = 0; 2 * l2 <= k; ++l2) {
    const int l = k - l2;
    if (l < l2) continue;
    sum += weyl_dim(n, {l, l2}) * (l - l2 + 1);
  }
  return sum == polyharm::harmonic_dimension(4 * n, k);
}

ClassificationRow classify_pi00(int n, const KTypeLabel& label) {
  if ((label.l - label.l2) % 2 != 0)
    throw std::invalid_argument("classify_pi00: label not admissible for delta=0");
  const int N = 2 * n;
  ClassificationRow row;
  row.label = label;
  const cplx b = specfun::b_function(cplx(-N, 0.0), label.l + label.l2, 2 * N);
  const int jw = su2::j_scalar_on_zero_weight(label.l - label.l2);
  row.computed_eigenvalue = b * double(jw);
  if (std::abs(std::abs(row.computed_eigenvalue.real()) - 1.0) > 1e-10 ||
      std::abs(row.computed_eigenvalue.imag()) > 1e-10)
    throw std::logic_error("classify_pi00: eigenvalue not +-1");
  row.computed_sign = row.computed_eigenvalue.real() > 0 ? 1 : -1;
  row.paper_mod4_class = ((label.l - label.l2) % 4 == 0) ? 1 : -1;
  row.agree = (row.computed_sign == row.paper_mod4_class);
  return row;
}

std::vector<EigenvalueRow> eigenvalue_table(const Parameter& param, int l_max) {
  std::vector<EigenvalueRow> out;
  for (const KTypeLabel& label : branching(param.delta, l_max)) {
    EigenvalueRow row;
    row.label = label;
    try {
      row.value = specfun::ks_eigenvalue(param, label.l, label.l2);
    } catch (const PoleError& e) {
      row.pole = true;
      row.note = e.what();
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<RepartitionPoint> emit_repartition(int n, int l_max) {
  std::vector<RepartitionPoint> out;
  for (const KTypeLabel& label : branching(0, l_max)) {
    const ClassificationRow row = classify_pi00(n, label);
    out.push_back({label.l2, label.l, row.computed_sign});
  }
  return out;
}

std::string repartition_csv(const std::vector<RepartitionPoint>& pts) {
  std::string out = "l2,l,sign\n";
  char buf[64];
  for (const auto& p : pts) {
    std::snprintf(buf, sizeof buf, "%d,%d,%+d\n", p.l2, p.l, p.computed_sign);
    out += buf;
  }
  return out;
}

namespace {

std::string marker(double cx, double cy, int sign) {
  char buf[256];
  if (sign > 0) {
    // upward triangle
    std::snprintf(buf, sizeof buf,
                  "<polygon points=\"%.1f,%.1f %.1f,%.1f %.1f,%.1f\" "
                  "fill=\"black\"/>\n",
                  cx, cy - 6.0, cx - 5.5, cy + 4.0, cx + 5.5, cy + 4.0);
    return buf;
  }
  // pentagon
  std::string s = "<polygon points=\"";
  for (int v = 0; v < 5; ++v) {
    const double ang = -1.5707963267948966 + 2.0 * 3.141592653589793 * v / 5.0;
    std::snprintf(buf, sizeof buf, "%.1f,%.1f%s", cx + 6.0 * std::cos(ang),
                  cy + 6.0 * std::sin(ang), v == 4 ? "" : " ");
    s += buf;
  }
  s += "\" fill=\"black\"/>\n";
  return s;
}

}  // namespace

std::string repartition_svg(const std::vector<RepartitionPoint>& pts,
                            const std::string& legend_plus,
                            const std::string& legend_minus) {
  int l_max = 0;
  for (const auto& p : pts) l_max = std::max(l_max, p.l);
  const int cell = 40, pad = 50, legend_w = 260;
  const int w = pad * 2 + cell * (l_max + 1) + legend_w;
  const int h = pad * 2 + cell * (l_max + 1);
  auto X = [&](int l2) { return double(pad + cell * l2); };
  auto Y = [&](int l) { return double(h - pad - cell * l); };

  std::string svg;
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" "
                "height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                w, h, w, h);
  svg += buf;
  // axes and dotted lattice
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                "stroke=\"black\"/>\n",
                X(0), Y(0), X(l_max) + 20.0, Y(0));
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                "stroke=\"black\"/>\n",
                X(0), Y(0), X(0), Y(l_max) - 20.0);
  svg += buf;
  for (int l2 = 0; l2 <= l_max; ++l2)
    for (int l = 0; l <= l_max; ++l) {
      std::snprintf(buf, sizeof buf,
                    "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"0.8\" "
                    "fill=\"gray\"/>\n",
                    X(l2), Y(l));
      svg += buf;
    }
  for (const auto& p : pts) svg += marker(X(p.l2), Y(p.l), p.computed_sign);
  // axis labels and legend
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"14\">l'</text>\n",
                X(l_max) + 26.0, Y(0) + 5.0);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"14\">l</text>\n",
                X(0) - 4.0, Y(l_max) - 26.0);
  svg += buf;
  const double lx = X(l_max) + 60.0;
  svg += marker(lx, Y(l_max) + 2.0, +1);
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"13\">%s</text>\n",
                lx + 12.0, Y(l_max) + 6.0, legend_plus.c_str());
  svg += buf;
  svg += marker(lx, Y(l_max) + 32.0, -1);
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"13\">%s</text>\n",
                lx + 12.0, Y(l_max) + 36.0, legend_minus.c_str());
  svg += buf;
  svg += "</svg>\n";
  return svg;
}

}  // namespace sympds::ktypes
