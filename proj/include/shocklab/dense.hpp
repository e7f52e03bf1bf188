#ifndef SHOCKLAB_DENSE_HPP
#define SHOCKLAB_DENSE_HPP

#include <complex>
#include <vector>

#include "shocklab/sparse.hpp"

namespace shocklab {

// Eigenvalues of a general real square matrix, sorted by real part (then
// imaginary part).  Throws ResourceLimitError above the dense cap.
std::vector<std::complex<double>> dense_eigs(
    const std::vector<std::vector<double>>& m);
std::vector<std::complex<double>> dense_eigs(const SparseMatrix& m);

// Stationary probability vector of an intensity matrix W: the normalized
// solution of W^T mu = 0, computed by a dense LU solve with one equation
// replaced by the normalization constraint, plus one step of iterative
// refinement.  Independent of any measure constructed elsewhere; serves
// as the null-space oracle.
std::vector<double> stationary_from_nullspace(const SparseMatrix& w);

}  // namespace shocklab

#endif
