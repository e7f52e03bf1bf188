#ifndef SHOCKLAB_EXPM_HPP
#define SHOCKLAB_EXPM_HPP

#include <vector>

#include "shocklab/sparse.hpp"

namespace shocklab {

// Action of the matrix exponential of an intensity matrix, by
// uniformization: with Lambda = max |diagonal|,
//
//   exp(G t) v = e^{-Lambda t} sum_n (Lambda t)^n / n!  P^n v,
//   P = I + G / Lambda,
//
// truncated once the neglected Poisson tail is below tol (l1 error bound).
// P is (sub)stochastic, so nonnegativity and total mass are preserved up
// to the tolerance.  Long horizons are split into segments to keep the
// Poisson weights representable.
//
// transpose = true computes exp(G^T t) v, the forward evolution of a
// measure under a row-convention generator.
std::vector<double> expm_action(const SparseMatrix& generator,
                                const std::vector<double>& v, double t,
                                double tol = 1e-12, bool transpose = false);

}  // namespace shocklab

#endif
