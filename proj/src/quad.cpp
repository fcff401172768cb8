#include "sympds/quad.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace sympds::quad {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
// recurrence matrix, weights come from the first eigenvector components.
Rule golub_welsch(const std::vector<double>& a, const std::vector<double>& b,
                  double mu0) {
  const int n = int(a.size());
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    T(i, i) = a[i];
    if (i + 1 < n) {
      T(i, i + 1) = b[i + 1];
      T(i + 1, i) = b[i + 1];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v0 * v0;
  }
  return r;
}

}  // namespace

Rule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");
  std::vector<double> a(n, 0.0), b(n, 0.0);
  for (int k = 1; k < n; ++k) b[k] = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(a, b, 2.0);
}

Rule gauss_jacobi01(int n, double beta) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi01: n >= 1");
  if (!(beta > -1.0)) throw std::invalid_argument("gauss_jacobi01: beta <= -1");
  std::vector<double> a(n, 0.0), b(n, 0.0);
  a[0] = beta / (beta + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + beta;
    a[k] = beta * beta / (s * (s + 2.0));
    b[k] = std::sqrt(4.0 * k * k * (k + beta) * (k + beta) /
                     (s * s * (s + 1.0) * (s - 1.0)));
  }
  const double mu0 = std::pow(2.0, beta + 1.0) / (beta + 1.0);
  return golub_welsch(a, b, mu0);
}

Rule gauss_jacobi_unit(int n, double beta) {
  // int_0^1 s^beta F(s) ds = 2^(-beta-1) int_-1^1 (1+x)^beta F((1+x)/2) dx
  Rule j = gauss_jacobi01(n, beta);
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const double scale = std::pow(2.0, -beta - 1.0);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = 0.5 * (1.0 + j.nodes[i]);
    r.weights[i] = scale * j.weights[i];
  }
  return r;
}

}  // namespace sympds::quad
