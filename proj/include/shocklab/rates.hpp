#ifndef SHOCKLAB_RATES_HPP
#define SHOCKLAB_RATES_HPP

#include <optional>
#include <string>

namespace shocklab {

// The six rates of the open ASEP: bulk hops r (right) and ell (left),
// boundary injection/extraction alpha, gamma (left edge) and delta, beta
// (right edge).  All strictly positive, r != ell.
struct Rates {
  double r;
  double ell;
  double alpha;
  double beta;
  double gamma;
  double delta;

  double q() const;  // sqrt(r/ell), jump asymmetry
  double w() const;  // sqrt(r*ell), time scale
  void validate() const;
};

// Boundary parametrization (q, w, rho_-, rho_+, omega_-, omega_+):
//   r = q w,  ell = w / q,
//   alpha = (r + omega_-) rho_-,    gamma = (ell + omega_-)(1 - rho_-),
//   beta  = (r + omega_+)(1-rho_+), delta = (ell + omega_+) rho_+.
struct BoundaryParametrization {
  double q;
  double w;
  double rho_minus;
  double rho_plus;
  double omega_minus;
  double omega_plus;

  double r() const { return q * w; }
  double ell() const { return w / q; }
  void validate() const;
};

Rates rates_from_parametrization(const BoundaryParametrization& p);

// Fugacity z = rho / (1 - rho); throws at the rho = 1 pole.
double fugacity(double rho);
double density_from_fugacity(double z);

// Shock-count manifold indices: kappa_+(alpha,gamma) kappa_+(beta,delta)
// = q^{2N} defines B_N, and kappa_- kappa_- = q^{-2M} the submanifold
// B_N^M, 1 <= M <= N.
struct ManifoldSpec {
  int n_shocks = 1;  // N
  int m_index = 1;   // M
  void validate() const;
};

// Roots kappa_{+-}(x,y) of x k^2 - (y - x + r - ell) k - y = 0, evaluated
// with the cancellation-free quadratic formula.  kappa_plus >= 0 >=
// kappa_minus and kappa_plus*kappa_minus = -y/x.
struct KappaPair {
  double plus;
  double minus;
};
KappaPair kappa(double x, double y, const Rates& rates);

struct ManifoldResiduals {
  double res_n;  // kappa_+(a,g) kappa_+(b,d) - q^{2N}
  double res_m;  // kappa_-(a,g) kappa_-(b,d) - q^{-2M}
  bool on_manifold(double tol = 1e-10) const;
};
ManifoldResiduals manifold_residuals(const Rates& rates,
                                     const ManifoldSpec& spec);

// Solves the boundary parameters onto B_N^M: rho_+ from z_+ = q^{2N} z_-,
// and the jump barriers from the symmetric branch omega_- = omega_+ =
// (r - q^M ell)/(q^M - 1), unless omega_minus is supplied, in which case
// omega_+ is solved from the product constraint.
BoundaryParametrization solve_manifold(
    double q, double w, double rho_minus, const ManifoldSpec& spec,
    std::optional<double> omega_minus = std::nullopt);

}  // namespace shocklab

#endif
