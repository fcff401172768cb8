#include "sympds/polyharm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sympds/rational.hpp"
#include "sympds/specfun.hpp"

namespace sympds::polyharm {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr long kMonomialBudget = 20000;

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// all exponent vectors of total degree k in d variables, lexicographically
// descending in the first coordinate (deterministic)
void enumerate_monomials(int d, int k, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == d - 1) {
    cur.push_back(k);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur.push_back(e);
    enumerate_monomials(d, k - e, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> monomials_of_degree(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  enumerate_monomials(d, k, cur, out);
  return out;
}

using detail::Rational;

// polynomial with exact rational coefficients, used only inside the
// projection; converted to SparsePoly (integer coefficients) at the end
using RationalPoly = std::map<std::vector<int>, Rational>;

void rp_add(RationalPoly& p, const std::vector<int>& e, Rational c) {
  if (c.is_zero()) return;
  auto it = p.find(e);
  if (it == p.end()) { p.emplace(e, c); return; }
  it->second = it->second + c;
  if (it->second.is_zero()) p.erase(it);
}

RationalPoly rp_laplacian(const RationalPoly& p, int d) {
  RationalPoly out;
  for (const auto& [e, c] : p) {
    for (int i = 0; i < d; ++i) {
      if (e[i] < 2) continue;
      std::vector<int> f = e;
      f[i] -= 2;
      rp_add(out, f, c * Rational(std::int64_t(e[i]) * (e[i] - 1)));
    }
  }
  return out;
}

RationalPoly rp_mul_r2(const RationalPoly& p, int d) {
  RationalPoly out;
  for (const auto& [e, c] : p) {
    for (int i = 0; i < d; ++i) {
      std::vector<int> f = e;
      f[i] += 2;
      rp_add(out, f, c);
    }
  }
  return out;
}

// harmonic projection of a degree-k monomial:
//   proj(p) = sum_j a_j r^(2j) Lap^j p,
//   a_0 = 1,  a_j = -a_{j-1} / (2j (2(k-j-1) + d))
// (the a_j are rational with small denominators)
SparsePoly project_harmonic(const std::vector<int>& mono, int d, int k) {
  RationalPoly acc;
  RationalPoly lap_power;  // Lap^j mono
  rp_add(lap_power, mono, Rational(1));
  Rational a(1);
  for (int j = 0; 2 * j <= k; ++j) {
    if (j > 0) {
      lap_power = rp_laplacian(lap_power, d);
      if (lap_power.empty()) break;
      a = a / Rational(-2LL * j * (2 * (k - j - 1) + d));
    }
    RationalPoly term = lap_power;
    for (int t = 0; t < j; ++t) term = rp_mul_r2(term, d);
    for (const auto& [e, c] : term) rp_add(acc, e, c * a);
  }
  if (acc.empty())
    throw std::logic_error("project_harmonic: projection vanished");
  // scale to coprime integers with positive leading coefficient
  std::int64_t den_lcm = 1;
  for (const auto& [e, c] : acc) den_lcm = detail::lcm64(den_lcm, c.den);
  std::int64_t num_gcd = 0;
  for (const auto& [e, c] : acc)
    num_gcd = std::gcd(num_gcd, std::abs(c.num * (den_lcm / c.den)));
  if (num_gcd == 0) num_gcd = 1;
  const std::int64_t lead = acc.begin()->second.num;
  const double flip = lead < 0 ? -1.0 : 1.0;
  SparsePoly out(d);
  for (const auto& [e, c] : acc) {
    const double v = double(c.num * (den_lcm / c.den) / num_gcd);
    out.add_term(e, cplx(flip * v, 0.0));
  }
  return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>>
bigraded_monomials(int M, int alpha, int beta) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& a : monomials_of_degree(M, alpha))
    for (const auto& b : monomials_of_degree(M, beta)) out.emplace_back(a, b);
  return out;
}

using BKey = BigradedPoly::Key;
using BRationalPoly = std::map<BKey, Rational>;

void brp_add(BRationalPoly& p, const BKey& e, Rational c) {
  if (c.is_zero()) return;
  auto it = p.find(e);
  if (it == p.end()) { p.emplace(e, c); return; }
  it->second = it->second + c;
  if (it->second.is_zero()) p.erase(it);
}

BRationalPoly brp_laplacian(const BRationalPoly& p, int M) {
  BRationalPoly out;
  for (const auto& [e, c] : p) {
    for (int i = 0; i < M; ++i) {
      if (e.first[i] < 1 || e.second[i] < 1) continue;
      BKey f = e;
      f.first[i] -= 1;
      f.second[i] -= 1;
      brp_add(out, f, c * Rational(std::int64_t(e.first[i]) * e.second[i]));
    }
  }
  return out;
}

BRationalPoly brp_mul_zz(const BRationalPoly& p, int M) {
  BRationalPoly out;
  for (const auto& [e, c] : p) {
    for (int i = 0; i < M; ++i) {
      BKey f = e;
      f.first[i] += 1;
      f.second[i] += 1;
      brp_add(out, f, c);
    }
  }
  return out;
}

// bigraded analogue with Lap = sum d/dz d/dzbar and r^2 = sum z zbar:
//   a_{j+1} = -a_j / ((j+1)(k + M - 2 - j)),  k = alpha + beta
BigradedPoly project_bigraded(const BKey& mono, int M, int k) {
  BRationalPoly acc;
  BRationalPoly lap_power;
  brp_add(lap_power, mono, Rational(1));
  Rational a(1);
  for (int j = 0; 2 * j <= k; ++j) {
    if (j > 0) {
      lap_power = brp_laplacian(lap_power, M);
      if (lap_power.empty()) break;
      a = a / Rational(-std::int64_t(j) * (k + M - 1 - j));
    }
    BRationalPoly term = lap_power;
    for (int t = 0; t < j; ++t) term = brp_mul_zz(term, M);
    for (const auto& [e, c] : term) brp_add(acc, e, c * a);
  }
  if (acc.empty())
    throw std::logic_error("project_bigraded: projection vanished");
  std::int64_t den_lcm = 1;
  for (const auto& [e, c] : acc) den_lcm = detail::lcm64(den_lcm, c.den);
  std::int64_t num_gcd = 0;
  for (const auto& [e, c] : acc)
    num_gcd = std::gcd(num_gcd, std::abs(c.num * (den_lcm / c.den)));
  if (num_gcd == 0) num_gcd = 1;
  const std::int64_t lead = acc.begin()->second.num;
  const double flip = lead < 0 ? -1.0 : 1.0;
  BigradedPoly out(M);
  for (const auto& [e, c] : acc) {
    const double v = double(c.num * (den_lcm / c.den) / num_gcd);
    out.add_term(e, cplx(flip * v, 0.0));
  }
  return out;
}

}  // namespace

long harmonic_dimension(int d, int k) {
  if (k < 0) return 0;
  return binomial(d + k - 1, k) - binomial(d + k - 3, k - 2);
}

long bigraded_dimension(int M, int alpha, int beta) {
  if (alpha < 0 || beta < 0) return 0;
  return binomial(alpha + M - 1, alpha) * binomial(beta + M - 1, beta) -
         binomial(alpha + M - 2, alpha - 1) * binomial(beta + M - 2, beta - 1);
}

std::vector<SparsePoly> harmonic_basis(int d, int k) {
  if (d < 1 || k < 0) throw std::invalid_argument("harmonic_basis: bad (d, k)");
  if (d % 2 != 0)
    throw std::invalid_argument("harmonic_basis: only even d supported");
  if (binomial(d + k - 1, k) > kMonomialBudget)
    throw ResourceError("harmonic_basis: (d, k) above monomial budget");
  std::vector<SparsePoly> basis;
  // Harmonic projections of the degree-k monomials with first exponent <= 1
  // are a basis: a combination of such monomials cannot lie in r^2 P^(k-2)
  // (any nonzero multiple of r^2 has first exponent >= 2 in its top term).
  for (const auto& mono : monomials_of_degree(d, k)) {
    if (mono[0] > 1) continue;
    basis.push_back(project_harmonic(mono, d, k));
  }
  return basis;
}

std::vector<BigradedPoly> bigraded_basis(int M, int alpha, int beta) {
  if (M < 1 || alpha < 0 || beta < 0)
    throw std::invalid_argument("bigraded_basis: bad (M, alpha, beta)");
  if (binomial(alpha + M - 1, alpha) * binomial(beta + M - 1, beta) >
      kMonomialBudget)
    throw ResourceError("bigraded_basis: (M, alpha, beta) above budget");
  std::vector<BigradedPoly> basis;
  const int k = alpha + beta;
  // same construction: keep monomials with min(a_1, b_1) = 0
  for (const auto& mono : bigraded_monomials(M, alpha, beta)) {
    if (mono.first[0] > 0 && mono.second[0] > 0) continue;
    basis.push_back(project_bigraded(mono, M, k));
  }
  return basis;
}

double sphere_moment(const std::vector<int>& exponents, int d) {
  if (int(exponents.size()) != d)
    throw std::invalid_argument("sphere_moment: exponent arity mismatch");
  if (d < 1) throw std::invalid_argument("sphere_moment: d must be >= 1");
  double log_num = 0.0;
  double half_sum = 0.0;
  for (int a : exponents) {
    if (a < 0) throw std::invalid_argument("sphere_moment: negative exponent");
    if (a % 2 != 0) return 0.0;
    log_num += std::lgamma((a + 1) / 2.0);
    half_sum += (a + 1) / 2.0;
  }
  return 2.0 * std::exp(log_num - std::lgamma(half_sum));
}

cplx sphere_integral(const SparsePoly& p) {
  cplx acc(0.0, 0.0);
  for (const auto& [e, c] : p.terms()) acc += c * sphere_moment(e, p.arity());
  return acc;
}

cplx pair_with_gaussian(const HomogeneousExtension& pl, const SparsePoly& q) {
  if (q.arity() != pl.base.arity())
    throw std::invalid_argument("pair_with_gaussian: arity mismatch");
  if (!q.is_homogeneous())
    throw std::invalid_argument("pair_with_gaussian: q must be homogeneous");
  const int d = q.arity();
  const int l = std::max(q.degree(), 0);
  const cplx s = pl.exponent + double(l) + double(d);
  if (s.real() <= 0.0)
    throw DivergenceError("pair_with_gaussian: radial integral diverges");
  const cplx radial =
      0.5 * std::pow(kPi, -s / 2.0) * specfun::complex_gamma(s / 2.0);
  return sphere_integral(pl.base * q) * radial;
}

double verify_feps_identity(const SparsePoly& p, cplx lambda,
                            const SparsePoly& q) {
  const int d = p.arity();
  if (d % 2 != 0)
    throw std::invalid_argument("verify_feps_identity: arity must be even");
  const int N = d / 2;
  const int k = std::max(p.degree(), 0);
  const int l = std::max(q.degree(), 0);
  if (lambda.real() + l + d <= 0.0 || double(l) - lambda.real() <= 0.0)
    throw DivergenceError("verify_feps_identity: outside convergence region");
  const cplx lhs = specfun::i_pow_minus(l) *
                   pair_with_gaussian(HomogeneousExtension(p, lambda),
                                      twist_eps(q, N));
  const cplx rhs =
      specfun::b_function(lambda, k, d) *
      pair_with_gaussian(
          HomogeneousExtension(twist_eps(p, N), -lambda - double(d)), q);
  return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1.0);
}

cplx b_function_pairing_oracle(const SparsePoly& q, cplx lambda) {
  const int d = q.arity();
  if (d % 2 != 0)
    throw std::invalid_argument("b_function_pairing_oracle: arity must be even");
  const int N = d / 2;
  const int l = std::max(q.degree(), 0);
  const cplx lhs = specfun::i_pow_minus(l) *
                   pair_with_gaussian(HomogeneousExtension(q, lambda),
                                      twist_eps(q, N));
  const cplx rhs = pair_with_gaussian(
      HomogeneousExtension(twist_eps(q, N), -lambda - double(d)), q);
  if (std::abs(rhs) == 0.0)
    throw DivergenceError("b_function_pairing_oracle: vanishing pairing");
  return lhs / rhs;
}

}  // namespace sympds::polyharm
