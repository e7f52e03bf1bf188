#ifndef SHOCKLAB_SHOCK_MEASURE_HPP
#define SHOCKLAB_SHOCK_MEASURE_HPP

#include <vector>

#include "shocklab/dual_process.hpp"
#include "shocklab/lattice.hpp"
#include "shocklab/shock.hpp"

namespace shocklab {

// Site density of the shock measure mu^x at site k: rho*_i on a shock
// site x_i, plateau rho_i strictly between x_i and x_{i+1}.
double shock_site_density(const ShockProfile& profile,
                          const ShockPositions& xs, const Lattice& lat,
                          int k);

// Bernoulli shock measure as a probability vector over all 2^L
// configurations (tensor product of site marginals).
std::vector<double> shock_measure_vector(const ShockProfile& profile,
                                         const ShockPositions& xs,
                                         const Lattice& lat);

// Duality matrices over the C(L,N) shock-position states, row order
// given by SubsetIndex:
//   S row x = mu^x              (each row sums to 1)
//   R row x = pi(x) mu^x        (each row sums to pi(x))
// The reversible weights pi are normalized so max_x pi(x) = 1, which
// fixes the otherwise free global constant at an O(1) scale.
struct DualityMatrices {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<double> weights;            // pi, max-normalized
  std::vector<std::vector<double>> s;     // probability rows
  std::vector<std::vector<double>> r;     // weighted rows
};

DualityMatrices build_duality_matrices(const ShockProfile& profile,
                                       const Rates& rates,
                                       const Lattice& lat);

}  // namespace shocklab

#endif
