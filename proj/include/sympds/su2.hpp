#pragma once

#include <Eigen/Dense>
#include <map>

#include "sympds/types.hpp"

namespace sympds::su2 {

// Homogeneous form of degree j in two variables; coefficient slot a holds
// the monomial x^a y^(j-a).  Carries the (j+1)-dimensional irreducible
// representation of SU(2) by substitution.
class BinaryForm {
 public:
  explicit BinaryForm(int degree)
      : degree_(degree), coeffs_(Eigen::VectorXcd::Zero(degree + 1)) {
    if (degree < 0) throw std::invalid_argument("BinaryForm: negative degree");
  }
  static BinaryForm monomial(int degree, int a, cplx c = cplx(1.0, 0.0)) {
    BinaryForm f(degree);
    f.coeffs_(a) = c;
    return f;
  }

  int degree() const { return degree_; }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }
  Eigen::VectorXcd& coeffs() { return coeffs_; }
  cplx coeff(int a) const { return coeffs_(a); }

  // weight of the monomial x^a y^(j-a) under diag(e^(i t), e^(-i t))
  int weight_of_slot(int a) const { return degree_ - 2 * a; }

 private:
  int degree_;
  Eigen::VectorXcd coeffs_;
};

// The matrix class of the quaternion unit j (and of the Weyl representative w)
// under the fixed Sp(1) = SU(2) dictionary.
Eigen::Matrix2cd weyl_matrix();

// (g . p)(v) = p(g^(-1) v).  g must be in SU(2) up to 1e-10.
BinaryForm act(const Eigen::Matrix2cd& g, const BinaryForm& p);

// Components indexed by the weights {-j, -j+2, ..., j}; each 1-dimensional.
std::map<int, BinaryForm> weight_decompose(const BinaryForm& p);

// Action of the Weyl representative [[0,1],[-1,0]]: exchanges the +w and -w
// weight lines; squares to (-1)^j.
BinaryForm iota_w(const BinaryForm& p);

// Scalar by which the Weyl/j matrix multiplies the zero-weight monomial of
// even degree; computed through act, not hard-coded.
int j_scalar_on_zero_weight(int j_deg);

}  // namespace sympds::su2
