#include "sympds/specfun.hpp"

#include <cmath>

namespace sympds::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Lanczos coefficients for g = 607/128, 15 terms (Godfrey's set).
// Good for ~15 significant digits on the right half plane.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

cplx lanczos_gamma_right(cplx z) {
  // valid for Re z >= 0.5
  z -= 1.0;
  cplx sum = kLanczosCoeff[0];
  for (int i = 1; i < 15; ++i) sum += kLanczosCoeff[i] / (z + cplx(i, 0.0));
  const cplx t = z + (kLanczosG + 0.5);
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

}  // namespace

cplx i_pow_minus(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

cplx minus_i_pow_minus(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PoleReport gamma_pole_report(cplx z) {
  PoleReport r;
  const double nearest = std::min(0.0, std::round(z.real()));
  r.nearest_pole = cplx(nearest, 0.0);
  r.distance = std::abs(z - r.nearest_pole);
  r.is_pole = r.distance < kPoleThreshold;
  return r;
}

cplx complex_gamma(cplx z) {
  const PoleReport pole = gamma_pole_report(z);
  if (pole.is_pole) throw PoleError("complex_gamma: argument at a pole", pole);
  if (z.real() >= 0.5) return lanczos_gamma_right(z);
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return kPi / (std::sin(kPi * z) * lanczos_gamma_right(1.0 - z));
}

bool near_nonpositive_integer(cplx z) { return gamma_pole_report(z).is_pole; }

cplx b_function(cplx lambda, int k, int dim) {
  if (k < 0) throw std::invalid_argument("b_function: k must be >= 0");
  if (dim < 2 || dim % 2 != 0)
    throw std::invalid_argument("b_function: dim must be even and positive");
  const int N = dim / 2;
  const cplx num_arg = double(N) + (double(k) + lambda) / 2.0;
  const cplx den_arg = (double(k) - lambda) / 2.0;
  const PoleReport num_pole = gamma_pole_report(num_arg);
  if (num_pole.is_pole)
    throw PoleError("b_function: numerator Gamma pole", num_pole);
  // 1/Gamma vanishes at nonpositive integers; the numerator is then finite
  // (the two arguments differ by N + lambda and cannot both be nonpositive
  // integers), so the product is an exact zero of the meromorphic function.
  if (gamma_pole_report(den_arg).is_pole) return {0.0, 0.0};
  const cplx ratio = complex_gamma(num_arg) / complex_gamma(den_arg);
  return std::pow(kPi, -lambda - double(N)) * i_pow_minus(k) * ratio;
}

cplx ks_normalization(cplx mu, bool delta_odd, int N) {
  if (N < 2 || N % 2 != 0)
    throw std::invalid_argument("ks_normalization: N must be even, >= 2");
  const cplx s = mu + double(N);
  const cplx num_arg = delta_odd ? (2.0 - s) / 2.0 : (1.0 - s) / 2.0;
  const cplx den_arg = delta_odd ? (1.0 + s) / 2.0 : s / 2.0;
  const PoleReport num_pole = gamma_pole_report(num_arg);
  if (num_pole.is_pole)
    throw PoleError("ks_normalization: Gamma pole", num_pole);
  if (gamma_pole_report(den_arg).is_pole) return {0.0, 0.0};
  const cplx front = delta_odd ? cplx(0.0, -2.0) : cplx(2.0, 0.0);
  return front * std::pow(kPi, s - 0.5) * complex_gamma(num_arg) /
         complex_gamma(den_arg);
}

bool is_admissible(int delta, int l, int l2) {
  if (l2 < 0 || l < l2) return false;
  const int j = l - l2;
  return j >= std::abs(delta) && (j - delta) % 2 == 0;
}

cplx ks_eigenvalue(const Parameter& param, int l, int l2) {
  if (!is_admissible(param.delta, l, l2))
    throw std::invalid_argument("ks_eigenvalue: (l, l2) not admissible for delta");
  const int k = l + l2;
  const cplx num_arg = double(param.n) + (double(k) + param.mu) / 2.0;
  const cplx den_arg = double(param.n) + (double(k) - param.mu) / 2.0;
  const PoleReport num_pole = gamma_pole_report(num_arg);
  if (num_pole.is_pole)
    throw PoleError("ks_eigenvalue: numerator Gamma pole", num_pole);
  if (gamma_pole_report(den_arg).is_pole) return {0.0, 0.0};
  const cplx ratio = complex_gamma(num_arg) / complex_gamma(den_arg);
  return std::pow(kPi, -param.mu) * minus_i_pow_minus(k) * ratio;
}

}  // namespace sympds::specfun
