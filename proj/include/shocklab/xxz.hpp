#ifndef SHOCKLAB_XXZ_HPP
#define SHOCKLAB_XXZ_HPP

#include <vector>

#include "shocklab/lattice.hpp"
#include "shocklab/rates.hpp"

namespace shocklab {

// Parameters of the equivalent XXZ chain with non-diagonal boundary
// fields, related to the ASEP rates by
//   alpha = (w/2) sinh(theta) e^{phi_- - psi_-} / (sinh phi_- cosh psi_-)
// and its three companions, with theta_- = psi_- - phi_- + theta L_-,
// theta_+ = phi_+ - psi_+ + theta L_+ and the energy shift
// E_0 = (L-1) cosh theta + (alpha+beta+gamma+delta)/w.
struct XXZParams {
  double theta;
  double w;
  double phi_minus;
  double psi_minus;
  double phi_plus;
  double psi_plus;
  double theta_minus;
  double theta_plus;
  double e0;
};

// Closed-form inverse parametrization:
//   psi_- = ln(kappa_+(alpha,gamma))/2, phi_- = psi_- + ln(alpha/gamma)/2,
//   psi_+ = ln(kappa_+(beta,delta))/2,  phi_+ = psi_+ + ln(beta/delta)/2.
XXZParams xxz_from_rates(const Rates& rates, const Lattice& lat);
Rates rates_from_xxz(const XXZParams& p);

// Dense H^XXZ assembled literally from Pauli-matrix tensor blocks.
std::vector<std::vector<double>> build_h_xxz(const XXZParams& p,
                                             const Lattice& lat);

// max |Q^{-1} H Q - H^XXZ| with the diagonal gauge Q = prod_k q^{k n_k}.
double xxz_residual(const Rates& rates, const Lattice& lat);

// |phi_- + psi_- + phi_+ + psi_+ - (theta_+ - theta_- + (2N-L+1) theta)|,
// the integrability condition; vanishes exactly on B_N.
double xxz_integrability_residual(const XXZParams& p, const Lattice& lat,
                                  int n_shocks);

}  // namespace shocklab

#endif
