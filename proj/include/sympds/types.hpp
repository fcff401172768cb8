#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace sympds {

using cplx = std::complex<double>;

// Induction parameter (mu, delta) together with the rank n of the group.
// Everything downstream is phrased in terms of the derived sizes
//   N = 2n   (complex dimension of the induced-picture domain C^N)
//   m = n-1  (Heisenberg size; the non-standard model lives on C^(2m+1)).
struct Parameter {
  cplx mu;
  int delta = 0;
  int n = 1;

  Parameter(cplx mu_, int delta_, int n_) : mu(mu_), delta(delta_), n(n_) {
    if (n < 1) throw std::invalid_argument("Parameter: n must be >= 1");
  }

  int N() const { return 2 * n; }
  int m() const { return n - 1; }
  bool delta_even() const { return (delta % 2) == 0; }
};

struct PoleReport {
  bool is_pole = false;
  cplx nearest_pole{0.0, 0.0};
  double distance = 0.0;
};

// Evaluation requested at (or too close to) a pole of a meromorphic formula.
class PoleError : public std::runtime_error {
 public:
  PoleReport report;
  PoleError(const std::string& what, PoleReport r)
      : std::runtime_error(what), report(r) {}
};

// Integral with the requested parameters does not converge absolutely.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quadrature/grid budget was exhausted before the requested precision.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A (d, k) or grid request exceeds the configured desk-scale budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sympds
