#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sympds/grid.hpp"
#include "sympds/poly.hpp"
#include "sympds/types.hpp"

namespace sympds::transforms {

// Grid approximation of the continuous Fourier transform with kernel
// e^(-2 i pi <x, xi>): DFT with half-step phase corrections, scaled by the
// input spacing.  Frequencies live on the offset grid of extent M/(4L).
// Exact inverse pair on the discrete data.
GridField fourier_continuous(const GridField& f);
GridField inverse_fourier_continuous(const GridField& f);

// Same correction scheme along a subset of realified axes only.
GridField fourier_partial(const GridField& f, const std::vector<int>& axes,
                          bool inverse = false);

// Composition with diag(+-1): flips the listed axes (exact sample shuffle).
GridField negate_axes(const GridField& f, const std::vector<int>& axes);

// realified axis books for C^K fields, ordering (Re z_1..Re z_K, Im..):
std::vector<int> im_axes(int d);                  // the last d/2 axes
std::vector<int> block2_realified_axes(int N);    // X_2 block of C^N, N = 2n
std::vector<int> block2_im_axes(int N);
std::vector<int> swap_blocks_perm(int N);         // (u, v) -> (v, u) on C^N

// Conjugate Fourier transform on R^(2N): full transform then the
// conjugation flip (negate the Im half).
GridField fourier_eps(const GridField& f);

// Symplectic Fourier transform on C^N (N even): fourier_eps then the
// realified J composition.  An involution on band-limited fields.
GridField fourier_symplectic(const GridField& f);

// Partial conjugate transform of the second complex block of C^N.
GridField fourier_c2(const GridField& f, bool inverse = false);

// Relative L2 residual of (F_C2 o F_symp o F_C2^{-1}) f against the block
// swap (u, v) -> (v, u).
double check_flip(const GridField& f);

// Complex scaling of realified points: z -> a z on each complex coordinate.
void complex_scale_point(cplx a, std::span<const double> in,
                         std::span<double> out);

// Residual of  F_C2[f(a., a.)](X1, xi2) = |a|^(-2n) (F_C2 f)(a X1, a^-1 xi2)
// on a probe lattice, both sides through the grid transform (f evaluates as
// 0 outside its declared box).
double check_partial_scaling(const EvaluableField& f, cplx a, int n, int M,
                             double L);

// Residual of  (F_symp f)(a .) = |a|^(-2N) F_symp(f(a^-1 .)).
double check_symp_scaling(const EvaluableField& f, cplx a, int N, int M,
                          double L);

struct QuadratureConfig {
  std::int64_t points = 10'000'000;
  std::uint64_t seed = 0xC0FFEE;
  int batches = 200;
  double target_rel_se = 0.0;  // > 0: throw BudgetError if not reached
};

struct QuadratureResult {
  cplx value{0.0, 0.0};
  double std_error = 0.0;
  std::int64_t points = 0;
};

// Seeded uniform sphere quadrature of the singular kernel
//   int_S h(X) |Re w(X,Y)|^(-mu-N) sign(Re w(X,Y))^delta dsigma(X)
// for real mu in the absolute-convergence strip (-N, 1-N).
QuadratureResult ks_integral(const SparsePoly& h, const Parameter& param,
                             const Eigen::VectorXd& y,
                             const QuadratureConfig& quad);

struct KsNormalizationReport {
  cplx integral{0.0, 0.0};
  double std_error = 0.0;
  cplx closed_eps_j{0.0, 0.0};      // C_N B_{2N} p(eps J Y)
  cplx closed_eps_j_inv{0.0, 0.0};  // C_N B_{2N} p((eps J)^-1 Y)
  double deviations_eps_j = 0.0;    // |integral - closed| in std errors
  double deviations_eps_j_inv = 0.0;
  std::string matched;  // which orientation is closer
};

// Compares the singular integral against C_N(mu, delta) B_{2N}(mu-N, k)
// p(twist Y) for both twist orientations.  In the fixed realification eps
// and J commute, so the two candidate twists are eps J and its inverse
// -eps J; on degree-k vectors they differ by (-1)^k, and which one the
// integral follows is reported, never assumed.
KsNormalizationReport verify_knapp_stein_normalization(
    const SparsePoly& p, const Parameter& param, const Eigen::VectorXd& y,
    const QuadratureConfig& quad);

// Pointwise evaluator for the conjugate/symplectic transform of fields
// g(r) p(X) with p harmonic homogeneous of degree k on R^(2N) and
// g(s) = s^radial_power e^(-2 pi damping s): the Bessel reduction collapses
// the 2N-dimensional integral to one radial integral per |xi|, which is the
// only sound route when g is singular at the origin.
class RadialHarmonicTransform {
 public:
  RadialHarmonicTransform(SparsePoly p, double radial_power, double damping);

  cplx eval_conjugate(std::span<const double> xi) const;   // F_eps f
  cplx eval_symplectic(std::span<const double> xi) const;  // F_symp f

  double radial_integral(double r) const;  // cached per radius

 private:
  SparsePoly p_;
  int N_ = 0;  // field lives on R^(2N)
  int k_ = 0;
  double power_;
  double damping_;
  mutable std::map<double, double> cache_;
};

}  // namespace sympds::transforms
