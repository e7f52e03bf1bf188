#ifndef SHOCKLAB_LATTICE_HPP
#define SHOCKLAB_LATTICE_HPP

#include <cstdint>
#include <vector>

#include "shocklab/common.hpp"

namespace shocklab {

// Finite integer lattice [l_minus, l_plus] with at least two sites.
struct Lattice {
  int l_minus = 1;
  int l_plus = 2;

  Lattice() = default;
  Lattice(int lm, int lp);

  int length() const { return l_plus - l_minus + 1; }
  std::size_t num_configs() const { return std::size_t{1} << length(); }
  bool contains(int k) const { return k >= l_minus && k <= l_plus; }
};

// Particle configuration as an L-bit word.
//
// Bit order: site l_minus is the most significant bit, so the word read
// left to right is the lattice read left to right and the integer value
// of the word is the index of the configuration in the tensor-product
// basis (first Kronecker factor = leftmost site).
struct Configuration {
  std::uint32_t bits = 0;
  int length = 0;
};

std::size_t config_index(const Configuration& c);
Configuration index_config(std::size_t index, int length);

// Occupation number of site k (absolute lattice coordinate).
int occupation(const Configuration& c, const Lattice& lat, int k);
int occupation_bits(std::uint32_t bits, int length, int offset);  // offset = k - l_minus

// Two-component vector; for a density vector c0 = 1-rho, c1 = rho.
struct TwoVector {
  double c0 = 0.0;
  double c1 = 0.0;
};

TwoVector density_vector(double rho);

// Kronecker product of L two-vectors, leftmost factor most significant.
std::vector<double> kron_vector(const std::vector<TwoVector>& factors);

}  // namespace shocklab

#endif
