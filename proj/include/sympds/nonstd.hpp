#pragma once

#include <vector>

#include "sympds/grid.hpp"
#include "sympds/poly.hpp"
#include "sympds/transforms.hpp"
#include "sympds/types.hpp"

namespace sympds::nonstd {

// Realified layout of C^(2m+1): complex coordinates (t, X1, X2) with X1 and
// X2 of size m, stored (Re t, Re X1, Re X2, Im t, Im X1, Im X2).
struct HeisenbergCoords {
  int m = 0;
  cplx t{0.0, 0.0};
  std::vector<cplx> x1, x2;

  static HeisenbergCoords from_realified(int m, std::span<const double> y);
  void to_realified(std::span<double> y) const;
};

// Pointwise pullback F(t, X1, X2) = f(1, X1, 2t, X2); no discretisation.
// f lives on C^N realified, N = 2(m+1).
EvaluableField restrict_to_heisenberg(const EvaluableField& f, int m);

// Model map: restriction followed by the conjugate partial Fourier transform
// in the (t, X2) complex coordinates, sampled on an offset grid.
GridField alpha_map(const EvaluableField& f, int m, int points_per_axis,
                    double extent);

// T H(s, X1, X2) = |s/2|^(-mu) [s]^(-delta) H(s, (2/s) X2, (s/2) X1).
// Pointwise; the coordinate map is an involution on points, so the inverse
// parameter composes to the identity exactly.
EvaluableField algebraic_intertwiner(const EvaluableField& h,
                                     const Parameter& param);

// H -> (H_+, H_-) with H_pm = (H +- T_{0,0} H) / 2.
std::pair<EvaluableField, EvaluableField> project_pm(const EvaluableField& h);

// Applies the intertwiner scalar directly on a grid over C^1 (the m = 0
// case, where the coordinate map is trivial).
GridField apply_intertwiner_grid_m0(const GridField& h, const Parameter& param);

struct DiagramConfig {
  int points_per_axis = 64;
  double extent = 8.0;            // t-plane half-width
  int symp_points_per_axis = 0;   // unused at m = 0 (radial reduction)
  std::vector<double> epsilons = {0.4, 0.28, 0.2, 0.14, 0.1};
};

struct DiagramReport {
  int n = 0;
  double mu = 0.0;
  int delta = 0;
  std::vector<double> epsilons;
  std::vector<double> residuals;
  double extrapolated = 0.0;
  bool monotone = false;
};

// Two-path check of the equivalence between the spectral and algebraic
// forms of the normalised intertwiner on the non-standard model:
//   path A: alpha_map applied to F_symp f,
//   path B: algebraic intertwiner applied to alpha_map(f),
// for the damped homogeneous vectors f = p_(mu-N) e^(-2 pi eps r), with the
// residual extrapolated along eps -> 0.  n = 1 only (m = 0).
DiagramReport verify_diagram(const SparsePoly& p, const Parameter& param,
                             const DiagramConfig& config);

}  // namespace sympds::nonstd
