#ifndef SHOCKLAB_ASEP_HPP
#define SHOCKLAB_ASEP_HPP

#include <array>
#include <vector>

#include "shocklab/lattice.hpp"
#include "shocklab/rates.hpp"
#include "shocklab/sparse.hpp"

namespace shocklab {

// Intensity matrix W of the open ASEP on the 2^L configuration space,
// assembled from the transition rules: hop right with r, left with ell,
// inject/extract alpha,gamma at the left edge and delta,beta at the right
// edge.  Rows sum to zero.
SparseMatrix build_w(const Rates& rates, const Lattice& lat);

// Unvalidated variant for test harnesses (e.g. the conservative limit
// with all boundary rates zero, which is not an admissible Rates value).
SparseMatrix build_w_raw(double r, double ell, double alpha, double beta,
                         double gamma, double delta, const Lattice& lat);

// Quantum Hamiltonian H = -W^T, assembled independently from the local
// blocks so the identity against build_w is a nontrivial cross-check:
//
//   bulk bond   [[0,0,0,0],[0,r,-r,0],[0,-ell,ell,0],[0,0,0,0]]
//   left edge   [[alpha,-gamma],[-alpha,gamma+r-ell]]
//   right edge  [[delta,-beta],[-delta,beta-(r-ell)]]
//
// The discrete-gradient shifts (r-ell) n_k contained in these blocks
// telescope across the lattice.  Columns sum to zero.
SparseMatrix build_h(const Rates& rates, const Lattice& lat);

// Local blocks as plain dense matrices (basis 00,01,10,11 with the left
// site as the first Kronecker factor), used by the lemma-level checks.
std::array<std::array<double, 4>, 4> bulk_block(const Rates& rates);
std::array<std::array<double, 2>, 2> left_block(const Rates& rates);
std::array<std::array<double, 2>, 2> right_block(const Rates& rates);

// Embedding helpers: append the triplets of a local operator acting on
// one site / one bond of the L-site tensor space.
void embed_site(std::vector<Triplet>& out,
                const std::array<std::array<double, 2>, 2>& block, int site,
                const Lattice& lat);
void embed_bond(std::vector<Triplet>& out,
                const std::array<std::array<double, 4>, 4>& block, int bond,
                const Lattice& lat);

enum class CurrentTag { kLeftBoundary, kBulkBond, kRightBoundary };

// Expected instantaneous current in the measure mu: across bond (k,k+1)
// for the bulk tag, or through the reservoir couplings at the edges.
double current_expectation(const std::vector<double>& mu, const Rates& rates,
                           const Lattice& lat, CurrentTag tag, int bond = 0);

}  // namespace shocklab

#endif
