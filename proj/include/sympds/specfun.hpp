#pragma once

#include "sympds/types.hpp"

namespace sympds::specfun {

// Distance below which a Gamma argument counts as sitting on a pole.
inline constexpr double kPoleThreshold = 1e-10;

// Fourth roots of unity by table: i^(-k) and (-i)^(-k) for integer k.
// Table lookup keeps these factors exact; they decide signs downstream.
cplx i_pow_minus(long k);
cplx minus_i_pow_minus(long k);

PoleReport gamma_pole_report(cplx z);

// Gamma(z) on C minus the nonpositive integers (Lanczos rational
// approximation, reflection for Re z < 1/2).  Throws PoleError within
// kPoleThreshold of a pole.
cplx complex_gamma(cplx z);

// B_{2N}(lambda, k) = pi^(-lambda-N) i^(-k) Gamma(N + (k+lambda)/2) /
// Gamma((k-lambda)/2) for even dim = 2N.  Returns exact 0 at zeros of the
// reciprocal Gamma; throws PoleError at poles of the numerator.
cplx b_function(cplx lambda, int k, int dim);

// Normalisation constant C_N(mu, delta); only the parity of delta matters.
cplx ks_normalization(cplx mu, bool delta_odd, int N);

// Scalar by which the normalised intertwining operator acts on the K-type
// (l, l2):  pi^(-mu) (-i)^(-(l+l2)) Gamma(n+(l+l2+mu)/2) / Gamma(n+(l+l2-mu)/2).
// Requires (l, l2) admissible for delta: l >= l2 >= 0, l-l2 >= |delta|,
// l-l2 = delta mod 2.
cplx ks_eigenvalue(const Parameter& param, int l, int l2);

bool is_admissible(int delta, int l, int l2);

}  // namespace sympds::specfun
