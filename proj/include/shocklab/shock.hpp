#ifndef SHOCKLAB_SHOCK_HPP
#define SHOCKLAB_SHOCK_HPP

#include <vector>

#include "shocklab/rates.hpp"

namespace shocklab {

// An N-shock family of Bernoulli product measures: plateau (bulk)
// densities rho_0..rho_N and the densities rho*_1..rho*_N carried by the
// shock sites themselves.  Microscopic stability means the plateau
// fugacities grow by q^2 from plateau to plateau.
struct ShockProfile {
  std::vector<double> bulk;   // N+1 entries, values in (0,1)
  std::vector<double> shock;  // N entries, values in [0,1]

  int n_shocks() const { return static_cast<int>(shock.size()); }
  void validate() const;
  // max_i |z_i / z_{i-1} - q^2|
  double stability_residual(double q) const;
};

// Bulk densities from the stability recursion z_i = q^{2i} z_0.
std::vector<double> densities_from_stability(double rho0, int n_shocks,
                                             double q);

// Shock densities consistent with the boundary rates:
// z*_i = (alpha/gamma) q^{2(i-1)}.
std::vector<double> shock_densities_from_boundary(const Rates& rates,
                                                  int n_shocks);

// Full profile for a duality run: rho_0 pinned to the left boundary
// (z_0 = 1/kappa_+(alpha,gamma)), plateaus by stability, shock densities
// from the boundary rates.  Well defined off-manifold too, where it
// serves as the negative-control family.
ShockProfile profile_from_boundary(const Rates& rates, int n_shocks);

// Hopping rates of one microscopically stable shock.
struct ShockHopRates {
  double d_left;   // d_i^l = j_{i-1} / (rho_i - rho_{i-1})
  double d_right;  // d_i^r = j_i / (rho_i - rho_{i-1})
  double asymmetry() const;  // d_i = sqrt(d_r / d_l)
  double velocity() const { return d_right - d_left; }
  double diffusion() const { return 0.5 * (d_right + d_left); }
};

// j(rho) = (r - ell) rho (1 - rho)
double bernoulli_current(double rho, const Rates& rates);

// Rates for every shock of the profile.  Self-checks the equivalent
// closed forms d^l = ell(1-rho_{i-1}) + r rho_{i-1}, d^r = r(1-rho_i) +
// ell rho_i and the product identity d^l d^r = r ell, all of which hold
// exactly on stable profiles.
std::vector<ShockHopRates> shock_rates(const ShockProfile& profile,
                                       const Rates& rates);

}  // namespace shocklab

#endif
