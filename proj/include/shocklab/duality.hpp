#ifndef SHOCKLAB_DUALITY_HPP
#define SHOCKLAB_DUALITY_HPP

#include <optional>
#include <vector>

#include "shocklab/dual_process.hpp"
#include "shocklab/lattice.hpp"
#include "shocklab/rates.hpp"
#include "shocklab/shock.hpp"
#include "shocklab/shock_measure.hpp"

namespace shocklab {

// Outcome of one reverse-duality verification.
struct DualityReport {
  double residual_duality = 0.0;    // max |R W - Q^T R|
  double residual_intertwine = 0.0; // max |S W - Q S|
  ManifoldResiduals manifold{};
  bool on_manifold = false;
  double tolerance = 1e-10;
  // resolved parameters, echoed into reports
  Rates rates{};
  int l_minus = 0;
  int l_plus = 0;
  int n_shocks = 0;
};

DualityReport verify_reverse_duality(const Rates& rates, const Lattice& lat,
                                     int n_shocks, double tol = 1e-10);

// || exp(W^T t) mu^{x0}  -  sum_y P(y,t|x0,0) mu^y ||_inf.
// The dual transition probabilities come from the closed-form walk
// propagator for N = 1 (when use_closed_form is set) or from the
// exponential of Q otherwise.
struct EvolutionComparison {
  double error;
  std::vector<double> evolved;      // left-hand side
  std::vector<double> combination;  // right-hand side
};
EvolutionComparison evolve_and_compare(const Rates& rates, const Lattice& lat,
                                       int n_shocks,
                                       const ShockPositions& x0, double t,
                                       double expm_tol = 1e-12,
                                       bool use_closed_form = false);

// Invariant measure as the pi-weighted convex combination of shock
// measures, plus its stationarity residual ||W^T mu*||_inf.
struct InvariantMeasure {
  std::vector<double> mu;       // over 2^L configurations, sums to 1
  std::vector<double> weights;  // over C(L,N) states, sums to 1
  double stationarity_residual;
};
InvariantMeasure invariant_measure(const Rates& rates, const Lattice& lat,
                                   int n_shocks);

// Total variation distance between two probability vectors.
double total_variation(const std::vector<double>& a,
                       const std::vector<double>& b);

// Boundary eigenpair of the edge block (Lemma-level 2x2 algebra):
// left:  z = 1/kappa_+(alpha,gamma), eps = alpha - gamma z
// right: z = kappa_+(beta,delta),    eps = delta - beta z
// Self-checks the eigen-equation and the rational form
// eps = +-(r-ell) z/(1+z) to 1e-12.
enum class BoundarySide { kLeft, kRight };
struct BoundaryEigen {
  double z;
  double eps;
};
BoundaryEigen boundary_eigen(const Rates& rates, BoundarySide side);

// Determinant and projection coefficients of the two-site algebra:
// Delta(a,b) = a0 b1 - a1 b0, d(a,b) = (r-ell) a1 a0 / Delta,
// d~(a,b) = (r-ell) a1 b0 / Delta, and the boundary-weighted variants
// built from eps_-(a) = alpha - gamma z(a), eps_+(a) = delta - beta z(a).
struct ProjectionCoefficients {
  double delta;
  double d;
  double d_tilde;
  double d_minus;
  double d_plus;
  double d_tilde_minus;
  double d_tilde_plus;
};
ProjectionCoefficients projection_coefficients(const TwoVector& a,
                                               const TwoVector& b,
                                               const Rates& rates);

// Residuals of the three projection identities of the two-site block:
// (A) h|ab>  = u|ab>  - v|b a~> - w|a b~>
// (B) h|b a~> = u|b a~> - v|ab> - w|b~ a~>
// (C) h|a a~> = u|a a~> - w|c~ a~> - v|a c>
// Auxiliary vectors b~, c, c~ may be supplied; otherwise rotations
// guaranteed linearly independent of their partners are used.  All three
// vanish exactly when z(a~) = q^2 z(a).
struct ProjectionResiduals {
  double res_a;
  double res_b;
  double res_c;
  double max() const;
};
ProjectionResiduals verify_projection_lemma(
    const TwoVector& a, const TwoVector& a_tilde, const TwoVector& b,
    const Rates& rates,
    std::optional<TwoVector> b_tilde = std::nullopt,
    std::optional<TwoVector> c = std::nullopt,
    std::optional<TwoVector> c_tilde = std::nullopt);

// For each walk eigenvalue eps_p, the distance to the nearest eigenvalue
// of H; returns the largest such distance (single-shock dual).
struct SpectrumContainment {
  std::vector<double> eps;
  std::vector<double> distance;
  double max_gap;
};
SpectrumContainment spectrum_containment(const Rates& rates,
                                         const Lattice& lat);

}  // namespace shocklab

#endif
