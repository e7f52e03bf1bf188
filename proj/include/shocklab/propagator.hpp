#ifndef SHOCKLAB_PROPAGATOR_HPP
#define SHOCKLAB_PROPAGATOR_HPP

#include <complex>
#include <vector>

#include "shocklab/dual_process.hpp"
#include "shocklab/lattice.hpp"
#include "shocklab/shock.hpp"

namespace shocklab {

// Closed-form transition probability of the single-shock random walk
// with reflecting walls (rates d^l, d^r, asymmetry d, scale
// w = sqrt(d^l d^r)):
//
//   P(y,t|x,0) = (d^2-1)/(d^{2L}-1) d^{2(y-L_-)}
//              + (2/L) sum_{p=1}^{L-1} d^{y-x} psi_p(x) psi_p(y)
//                      w/(d eps_p) e^{-eps_p t}
//
// with psi_p(y) = d sin(pi p (y+1-L_-)/L) - sin(pi p (y-L_-)/L) and
// eps_p = w (d + 1/d - 2 cos(pi p / L)).  The stationary prefactor is
// taken in its d -> 1 limit 1/L when the asymmetry degenerates.
double rw_propagator(int x, int y, double t, const ShockHopRates& sr,
                     const Lattice& lat);

// Relaxation spectrum eps_p, p = 0..L-1 (eps_0 = 0).
std::vector<double> rw_spectrum(const ShockHopRates& sr, const Lattice& lat);

// Normalized eigenvector components Psi_p(y) of the symmetrized walk
// generator; complex for p >= 1.  Exposed for the orthogonality checks.
std::complex<double> rw_eigenvector(int p, int y, const ShockHopRates& sr,
                                    const Lattice& lat);

}  // namespace shocklab

#endif
