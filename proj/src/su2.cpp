#include "sympds/su2.hpp"

#include <cmath>
#include <vector>

namespace sympds::su2 {

namespace {
cplx ipow(cplx base, int e) {
  cplx r(1.0, 0.0);
  for (int t = 0; t < e; ++t) r *= base;
  return r;
}
}  // namespace

Eigen::Matrix2cd weyl_matrix() {
  Eigen::Matrix2cd w;
  w << cplx(0, 0), cplx(1, 0), cplx(-1, 0), cplx(0, 0);
  return w;
}

BinaryForm act(const Eigen::Matrix2cd& g, const BinaryForm& p) {
  const Eigen::Matrix2cd gtg = g.adjoint() * g;
  if ((gtg - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-10 ||
      std::abs(g.determinant() - cplx(1.0, 0.0)) > 1e-10)
    throw std::invalid_argument("su2::act: matrix not in SU(2)");

  // g^(-1) = [[d,-b],[-c,a]] for det 1
  const cplx a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  const cplx i00 = d, i01 = -b, i10 = -c, i11 = a;

  const int j = p.degree();
  BinaryForm out(j);
  // substitute x -> i00 x + i01 y, y -> i10 x + i11 y into sum c_a x^a y^(j-a)
  for (int a_idx = 0; a_idx <= j; ++a_idx) {
    const cplx ca = p.coeff(a_idx);
    if (ca == cplx(0.0, 0.0)) continue;
    // (i00 x + i01 y)^a  *  (i10 x + i11 y)^(j-a), expanded by binomials
    std::vector<cplx> first(a_idx + 1), second(j - a_idx + 1);
    for (int s = 0; s <= a_idx; ++s) {
      double bin = 1.0;
      for (int t = 1; t <= s; ++t) bin = bin * double(a_idx - s + t) / t;
      first[s] = bin * ipow(i00, s) * ipow(i01, a_idx - s);
    }
    for (int s = 0; s <= j - a_idx; ++s) {
      double bin = 1.0;
      for (int t = 1; t <= s; ++t) bin = bin * double(j - a_idx - s + t) / t;
      second[s] = bin * ipow(i10, s) * ipow(i11, j - a_idx - s);
    }
    for (int s1 = 0; s1 <= a_idx; ++s1)
      for (int s2 = 0; s2 <= j - a_idx; ++s2)
        out.coeffs()(s1 + s2) += ca * first[s1] * second[s2];
  }
  return out;
}

std::map<int, BinaryForm> weight_decompose(const BinaryForm& p) {
  std::map<int, BinaryForm> out;
  const int j = p.degree();
  for (int a = 0; a <= j; ++a) {
    if (p.coeff(a) == cplx(0.0, 0.0)) continue;
    const int w = p.weight_of_slot(a);
    auto it = out.find(w);
    if (it == out.end()) it = out.emplace(w, BinaryForm(j)).first;
    it->second.coeffs()(a) = p.coeff(a);
  }
  return out;
}

BinaryForm iota_w(const BinaryForm& p) { return act(weyl_matrix(), p); }

int j_scalar_on_zero_weight(int j_deg) {
  if (j_deg < 0 || j_deg % 2 != 0)
    throw std::invalid_argument(
        "j_scalar_on_zero_weight: degree must be even and nonnegative");
  const int a = j_deg / 2;
  const BinaryForm image = iota_w(BinaryForm::monomial(j_deg, a));
  const cplx scalar = image.coeff(a);
  const double re = scalar.real();
  if (std::abs(scalar.imag()) > 1e-12 || std::abs(std::abs(re) - 1.0) > 1e-12)
    throw std::logic_error("j_scalar_on_zero_weight: scalar not +-1");
  return re > 0 ? 1 : -1;
}

}  // namespace sympds::su2
