#ifndef SHOCKLAB_DUAL_PROCESS_HPP
#define SHOCKLAB_DUAL_PROCESS_HPP

#include <cstdint>
#include <vector>

#include "shocklab/lattice.hpp"
#include "shocklab/shock.hpp"
#include "shocklab/sparse.hpp"

namespace shocklab {

// Strictly increasing shock positions x_1 < ... < x_N in absolute
// lattice coordinates; the walls act through the implicit sentinels
// x_0 = l_minus - 1 and x_{N+1} = l_plus + 1.
using ShockPositions = std::vector<int>;

// Bijection between N-element position vectors on an L-site lattice and
// 0 .. C(L,N)-1, by colexicographic combinatorial ranking.
class SubsetIndex {
 public:
  SubsetIndex(int length, int n_particles);

  std::size_t count() const { return count_; }
  int length() const { return length_; }
  int particles() const { return particles_; }

  std::size_t rank(const ShockPositions& xs, const Lattice& lat) const;
  ShockPositions unrank(std::size_t index, const Lattice& lat) const;

 private:
  int length_;
  int particles_;
  std::size_t count_;
  std::vector<std::vector<std::uint64_t>> choose_;  // choose_[n][k]
};

// Left/right jump rates of particle i in state xs, including the
// exclusion and wall factors (zero when the move is blocked).
double shock_jump_rate_left(const ShockPositions& xs, int i,
                            const std::vector<ShockHopRates>& rates,
                            const Lattice& lat);
double shock_jump_rate_right(const ShockPositions& xs, int i,
                             const std::vector<ShockHopRates>& rates,
                             const Lattice& lat);

// Intensity matrix Q of the N-particle shock exclusion process on
// C(L,N) states, ordered by SubsetIndex.
SparseMatrix build_q(const ShockProfile& profile, const Rates& rates,
                     const Lattice& lat);
SparseMatrix build_q(const std::vector<ShockHopRates>& rates,
                     const Lattice& lat);

// Reversible weight pi(x) = prod_i d_i^{2(x_i - l_minus)}; the offset is
// a global normalization making the weights O(1) at desk scale.
double reversible_weight(const ShockPositions& xs,
                         const std::vector<ShockHopRates>& rates,
                         const Lattice& lat);

// All weights in SubsetIndex order; normalized: sum = 1, or by the
// maximum weight (max = 1).
std::vector<double> reversible_weights(const std::vector<ShockHopRates>& rates,
                                       const Lattice& lat, int n_particles);
enum class WeightNorm { kSum, kMax };
std::vector<double> normalized_weights(std::vector<double> weights,
                                       WeightNorm norm);

// max_{x,y} |pi(x) Q_{xy} - pi(y) Q_{yx}| over normalized weights.
double detailed_balance_residual(const SparseMatrix& q,
                                 const std::vector<double>& weights);

}  // namespace shocklab

#endif
