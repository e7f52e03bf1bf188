#include "shocklab/lattice.hpp"

#include <stdexcept>
#include <string>

namespace shocklab {

Lattice::Lattice(int lm, int lp) : l_minus(lm), l_plus(lp) {
  if (length() < 2) {
    throw std::invalid_argument("lattice needs at least 2 sites, got [" +
                                std::to_string(lm) + "," + std::to_string(lp) +
                                "]");
  }
  if (length() > 31) {
    throw ResourceLimitError("lattice with " + std::to_string(length()) +
                             " sites exceeds the 31-bit configuration word");
  }
}

std::size_t config_index(const Configuration& c) { return c.bits; }

Configuration index_config(std::size_t index, int length) {
  if (length < 1 || index >= (std::size_t{1} << length)) {
    throw std::invalid_argument("configuration index " +
                                std::to_string(index) +
                                " out of range for L=" +
                                std::to_string(length));
  }
  return Configuration{static_cast<std::uint32_t>(index), length};
}

int occupation_bits(std::uint32_t bits, int length, int offset) {
  return static_cast<int>((bits >> (length - 1 - offset)) & 1u);
}

int occupation(const Configuration& c, const Lattice& lat, int k) {
  if (!lat.contains(k)) {
    throw std::invalid_argument("site " + std::to_string(k) +
                                " outside the lattice");
  }
  return occupation_bits(c.bits, c.length, k - lat.l_minus);
}

TwoVector density_vector(double rho) {
  if (rho < 0.0 || rho > 1.0) {
    throw std::invalid_argument("density " + std::to_string(rho) +
                                " outside [0,1]");
  }
  return TwoVector{1.0 - rho, rho};
}

std::vector<double> kron_vector(const std::vector<TwoVector>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("kron_vector needs at least one factor");
  }
  std::vector<double> v{1.0};
  for (const TwoVector& f : factors) {
    std::vector<double> next(v.size() * 2);
    for (std::size_t i = 0; i < v.size(); ++i) {
      next[2 * i] = v[i] * f.c0;
      next[2 * i + 1] = v[i] * f.c1;
    }
    v.swap(next);
  }
  return v;
}

}  // namespace shocklab
