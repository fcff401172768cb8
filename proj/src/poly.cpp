#include "sympds/poly.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

namespace sympds {

namespace {
constexpr double kDropTol = 0.0;  // exact arithmetic: drop only true zeros

void check_arity(const SparsePoly::Exponents& e, int arity) {
  if (int(e.size()) != arity)
    throw std::invalid_argument("SparsePoly: exponent vector arity mismatch");
  for (int v : e)
    if (v < 0) throw std::invalid_argument("SparsePoly: negative exponent");
}
}  // namespace

SparsePoly::SparsePoly(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("SparsePoly: arity must be >= 1");
}

SparsePoly SparsePoly::constant(int arity, cplx c) {
  SparsePoly p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

SparsePoly SparsePoly::monomial(Exponents exps, cplx c) {
  SparsePoly p(int(exps.size()));
  p.add_term(exps, c);
  return p;
}

SparsePoly SparsePoly::coordinate(int arity, int i) {
  Exponents e(arity, 0);
  e.at(i) = 1;
  return monomial(std::move(e), cplx(1.0, 0.0));
}

void SparsePoly::add_term(const Exponents& exps, cplx c) {
  check_arity(exps, arity_);
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    if (std::abs(c) > kDropTol) terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (std::abs(it->second) <= kDropTol) terms_.erase(it);
}

cplx SparsePoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? cplx(0.0, 0.0) : it->second;
}

int SparsePoly::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int v : e) d += v;
    deg = std::max(deg, d);
  }
  return deg;
}

bool SparsePoly::is_homogeneous() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int v : e) d += v;
    if (deg < 0) deg = d;
    else if (d != deg) return false;
  }
  return true;
}

template <typename Scalar>
static cplx eval_impl(const SparsePoly::TermMap& terms,
                      std::span<const Scalar> x) {
  cplx acc(0.0, 0.0);
  for (const auto& [e, c] : terms) {
    cplx t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

cplx SparsePoly::eval(std::span<const double> x) const {
  if (int(x.size()) != arity_)
    throw std::invalid_argument("SparsePoly::eval: point arity mismatch");
  return eval_impl<double>(terms_, x);
}

cplx SparsePoly::eval(std::span<const cplx> x) const {
  if (int(x.size()) != arity_)
    throw std::invalid_argument("SparsePoly::eval: point arity mismatch");
  return eval_impl<cplx>(terms_, x);
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const {
  if (other.arity_ != arity_)
    throw std::invalid_argument("SparsePoly: arity mismatch in +");
  SparsePoly out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& other) const {
  return *this + other.scaled(cplx(-1.0, 0.0));
}

SparsePoly SparsePoly::operator*(const SparsePoly& other) const {
  if (other.arity_ != arity_)
    throw std::invalid_argument("SparsePoly: arity mismatch in *");
  SparsePoly out(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(arity_);
      for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::scaled(cplx c) const {
  SparsePoly out(arity_);
  if (c == cplx(0.0, 0.0)) return out;
  for (const auto& [e, coeffv] : terms_) out.terms_.emplace(e, coeffv * c);
  return out;
}

SparsePoly SparsePoly::precompose_signed_perm(
    const std::vector<int>& perm, const std::vector<int>& sign) const {
  if (int(perm.size()) != arity_ || int(sign.size()) != arity_)
    throw std::invalid_argument("precompose_signed_perm: size mismatch");
  SparsePoly out(arity_);
  for (const auto& [e, c] : terms_) {
    // substitute x_i -> sign[i] * x_{perm[i]}
    Exponents f(arity_, 0);
    double s = 1.0;
    for (int i = 0; i < arity_; ++i) {
      f[perm[i]] += e[i];
      if (sign[i] < 0 && (e[i] % 2) != 0) s = -s;
    }
    out.add_term(f, c * s);
  }
  return out;
}

std::string SparsePoly::to_json() const {
  nlohmann::json j;
  j["arity"] = arity_;
  j["terms"] = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::json t;
    t["exps"] = e;
    t["re"] = c.real();
    t["im"] = c.imag();
    j["terms"].push_back(t);
  }
  return j.dump();
}

SparsePoly SparsePoly::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SparsePoly p(j.at("arity").get<int>());
  for (const auto& t : j.at("terms")) {
    p.add_term(t.at("exps").get<Exponents>(),
               cplx(t.at("re").get<double>(), t.at("im").get<double>()));
  }
  return p;
}

SparsePoly laplacian(const SparsePoly& p) {
  SparsePoly out(p.arity());
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < p.arity(); ++i) {
      if (e[i] < 2) continue;
      SparsePoly::Exponents f = e;
      f[i] -= 2;
      out.add_term(f, c * double(e[i]) * double(e[i] - 1));
    }
  }
  return out;
}

SparsePoly twist_eps(const SparsePoly& p, int N) {
  if (p.arity() != 2 * N)
    throw std::invalid_argument("twist_eps: arity must equal 2N");
  std::vector<int> perm(2 * N), sign(2 * N, 1);
  for (int i = 0; i < 2 * N; ++i) perm[i] = i;
  for (int i = N; i < 2 * N; ++i) sign[i] = -1;
  return p.precompose_signed_perm(perm, sign);
}

std::vector<int> realified_j_signed_perm(int N, std::vector<int>& sign) {
  // y = J_R x with J(Z_1, Z_2) = (-Z_2, Z_1):  the substitution
  // x_i -> sign[i] x_{perm[i]} reads per block of n coordinates.
  if (N < 2 || N % 2 != 0)
    throw std::invalid_argument("realified_j_signed_perm: N must be even");
  const int n = N / 2;
  std::vector<int> perm(2 * N);
  sign.assign(2 * N, 1);
  for (int block = 0; block < 2; ++block) {     // 0: Re half, 1: Im half
    const int off = block * N;
    for (int i = 0; i < n; ++i) {
      perm[off + i] = off + n + i;              // y_i = -x_{n+i}
      sign[off + i] = -1;
      perm[off + n + i] = off + i;              // y_{n+i} = +x_i
    }
  }
  return perm;
}

SparsePoly twist_j(const SparsePoly& p, int N) {
  if (p.arity() != 2 * N)
    throw std::invalid_argument("twist_j: arity must equal 2N");
  std::vector<int> sign;
  const std::vector<int> perm = realified_j_signed_perm(N, sign);
  return p.precompose_signed_perm(perm, sign);
}

BigradedPoly::BigradedPoly(int complex_arity) : arity_(complex_arity) {
  if (complex_arity < 1)
    throw std::invalid_argument("BigradedPoly: arity must be >= 1");
}

BigradedPoly BigradedPoly::monomial(std::vector<int> a, std::vector<int> b,
                                    cplx c) {
  if (a.size() != b.size())
    throw std::invalid_argument("BigradedPoly: exponent size mismatch");
  BigradedPoly p(int(a.size()));
  p.add_term({std::move(a), std::move(b)}, c);
  return p;
}

void BigradedPoly::add_term(const Key& key, cplx c) {
  if (int(key.first.size()) != arity_ || int(key.second.size()) != arity_)
    throw std::invalid_argument("BigradedPoly: exponent arity mismatch");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (c != cplx(0.0, 0.0)) terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == cplx(0.0, 0.0)) terms_.erase(it);
}

bool BigradedPoly::is_bihomogeneous(int* alpha_out, int* beta_out) const {
  int alpha = -1, beta = -1;
  for (const auto& [key, c] : terms_) {
    int a = 0, b = 0;
    for (int v : key.first) a += v;
    for (int v : key.second) b += v;
    if (alpha < 0) { alpha = a; beta = b; }
    else if (a != alpha || b != beta) return false;
  }
  if (alpha_out) *alpha_out = alpha;
  if (beta_out) *beta_out = beta;
  return true;
}

BigradedPoly BigradedPoly::operator+(const BigradedPoly& other) const {
  if (other.arity_ != arity_)
    throw std::invalid_argument("BigradedPoly: arity mismatch in +");
  BigradedPoly out = *this;
  for (const auto& [k, c] : other.terms_) out.add_term(k, c);
  return out;
}

BigradedPoly BigradedPoly::scaled(cplx c) const {
  BigradedPoly out(arity_);
  if (c == cplx(0.0, 0.0)) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

BigradedPoly bigraded_laplacian(const BigradedPoly& p) {
  BigradedPoly out(p.complex_arity());
  for (const auto& [key, c] : p.terms()) {
    for (int i = 0; i < p.complex_arity(); ++i) {
      if (key.first[i] < 1 || key.second[i] < 1) continue;
      BigradedPoly::Key k = key;
      k.first[i] -= 1;
      k.second[i] -= 1;
      out.add_term(k, c * double(key.first[i]) * double(key.second[i]));
    }
  }
  return out;
}

HomogeneousExtension::HomogeneousExtension(SparsePoly p, cplx lambda)
    : base(std::move(p)), exponent(lambda) {
  if (!base.is_homogeneous())
    throw std::invalid_argument("HomogeneousExtension: base must be homogeneous");
}

cplx HomogeneousExtension::eval(std::span<const double> x) const {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  const double r = std::sqrt(r2);
  if (r == 0.0)
    throw std::domain_error("HomogeneousExtension: evaluation at the origin");
  const int k = std::max(base.degree(), 0);
  return std::pow(cplx(r, 0.0), exponent - double(k)) * base.eval(x);
}

}  // namespace sympds
