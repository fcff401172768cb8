#pragma once

#include <vector>

#include "sympds/poly.hpp"
#include "sympds/types.hpp"

namespace sympds::polyharm {

// dim H^k(R^d) = C(d+k-1, k) - C(d+k-3, k-2)
long harmonic_dimension(int d, int k);
// dim H^{alpha,beta}(C^M)
long bigraded_dimension(int M, int alpha, int beta);

// Basis of the harmonic homogeneous polynomials of degree k on R^d, with
// exact integer coefficients (content 1, leading coefficient positive) and a
// deterministic ordering.  Throws ResourceError above the desk-scale budget.
std::vector<SparsePoly> harmonic_basis(int d, int k);

// Basis of the harmonic (alpha, beta)-forms on C^M, exact integer
// coefficients, deterministic ordering.
std::vector<BigradedPoly> bigraded_basis(int M, int alpha, int beta);

// Integral of x^a over the unit sphere S^(d-1):
//   2 prod Gamma((a_i+1)/2) / Gamma(sum (a_i+1)/2)  if all a_i even, else 0.
double sphere_moment(const std::vector<int>& exponents, int d);

// Integral of a polynomial over S^(d-1), term by term.
cplx sphere_integral(const SparsePoly& p);

// <p_lambda, q e^{-pi r^2}> in closed form:
//   (sphere integral of p q) * (1/2) pi^(-s/2) Gamma(s/2),  s = lambda+l+d,
// for q homogeneous of degree l.  Throws DivergenceError if Re s <= 0.
cplx pair_with_gaussian(const HomogeneousExtension& pl, const SparsePoly& q);

// Pairs both sides of  F_eps p_lambda = B_{2N}(lambda,k) p^eps_{-lambda-2N}
// against q e^{-pi r^2} via the closed forms
//   LHS = i^(-l) <p_lambda, q^eps e^{-pi r^2}>,
//   RHS = B_{2N}(lambda,k) <p^eps_{-lambda-2N}, q e^{-pi r^2}>,
// and returns |LHS-RHS| / (|LHS| + |RHS| + 1).
double verify_feps_identity(const SparsePoly& p, cplx lambda,
                            const SparsePoly& q);

// The ratio  i^(-l) <p_lambda, q^eps g> / <p^eps_{-lambda-2N}, q g>  for
// p = q: an oracle for B_{2N}(lambda, l) that never calls b_function.
cplx b_function_pairing_oracle(const SparsePoly& q, cplx lambda);

}  // namespace sympds::polyharm
