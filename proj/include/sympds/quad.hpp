#pragma once

#include <vector>

namespace sympds::quad {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1].
Rule gauss_legendre(int n);

// Gauss-Jacobi for the weight (1+x)^beta on [-1, 1] (alpha = 0), beta > -1.
Rule gauss_jacobi01(int n, double beta);

// Rule for integrals of the form  int_0^1 s^beta F(s) ds  (F smooth):
// nodes in (0, 1), weights absorbing the s^beta factor.
Rule gauss_jacobi_unit(int n, double beta);

}  // namespace sympds::quad
