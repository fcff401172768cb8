#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sympds/types.hpp"

namespace sympds {

// Sparse multivariate polynomial with complex coefficients.  Terms are keyed
// by the exponent vector; zero coefficients are never stored, so iteration
// order (lexicographic on exponents) is deterministic.
class SparsePoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, cplx>;

  explicit SparsePoly(int arity);
  static SparsePoly constant(int arity, cplx c);
  static SparsePoly monomial(Exponents exps, cplx c);
  // the coordinate function x_i (0-based)
  static SparsePoly coordinate(int arity, int i);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& exps, cplx c);
  cplx coeff(const Exponents& exps) const;

  int degree() const;            // max total degree, -1 for the zero poly
  bool is_homogeneous() const;   // all terms share one total degree

  cplx eval(std::span<const double> x) const;
  cplx eval(std::span<const cplx> x) const;

  SparsePoly operator+(const SparsePoly& other) const;
  SparsePoly operator-(const SparsePoly& other) const;
  SparsePoly operator*(const SparsePoly& other) const;
  SparsePoly scaled(cplx c) const;

  // Precomposition with a signed coordinate permutation:
  // result(X) = this(Y) with Y_i = sign[i] * X[perm[i]].
  SparsePoly precompose_signed_perm(const std::vector<int>& perm,
                                    const std::vector<int>& sign) const;

  std::string to_json() const;
  static SparsePoly from_json(const std::string& text);

 private:
  int arity_;
  TermMap terms_;
};

// Sum of second partials; exact on integer/float coefficients, drops the
// degree by two.
SparsePoly laplacian(const SparsePoly& p);

// f^eps: precomposition with diag(I_N, -I_N) on R^(2N).  Realification
// convention everywhere: coordinates ordered (Re z_1..Re z_N, Im z_1..Im z_N),
// so eps is complex conjugation.
SparsePoly twist_eps(const SparsePoly& p, int N);

// Precomposition with the realified symplectic matrix J of C^N (N = 2n even):
// J(Z_1, Z_2) = (-Z_2, Z_1) acting block-diagonally on (Re, Im).
SparsePoly twist_j(const SparsePoly& p, int N);

std::vector<int> realified_j_signed_perm(int N, std::vector<int>& sign);

// Bigraded polynomial in (z, zbar) over C^M.  Terms keyed by the pair of
// exponent vectors (holomorphic, antiholomorphic).
class BigradedPoly {
 public:
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  using TermMap = std::map<Key, cplx>;

  explicit BigradedPoly(int complex_arity);
  static BigradedPoly monomial(std::vector<int> a, std::vector<int> b, cplx c);

  int complex_arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const Key& key, cplx c);
  bool is_bihomogeneous(int* alpha_out = nullptr, int* beta_out = nullptr) const;

  BigradedPoly operator+(const BigradedPoly& other) const;
  BigradedPoly scaled(cplx c) const;

 private:
  int arity_;
  TermMap terms_;
};

// Sum_i d/dz_i d/dzbar_i (the real Laplacian up to the factor 4, which is
// irrelevant for kernels).
BigradedPoly bigraded_laplacian(const BigradedPoly& p);

// The pair (p, lambda) representing the homogeneous extension
// p_lambda(rX) = r^lambda p(X), X on the unit sphere.  Kept symbolic: the
// extension is never sampled, only paired in closed form.
struct HomogeneousExtension {
  SparsePoly base;
  cplx exponent;

  HomogeneousExtension(SparsePoly p, cplx lambda);

  // |X|^(lambda - k) p(X) away from the origin, k = deg p.
  cplx eval(std::span<const double> x) const;
};

}  // namespace sympds
