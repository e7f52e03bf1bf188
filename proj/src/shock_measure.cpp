#include "shocklab/shock_measure.hpp"

#include <stdexcept>

#include "shocklab/common.hpp"

namespace shocklab {

double shock_site_density(const ShockProfile& profile,
                          const ShockPositions& xs, const Lattice& lat,
                          int k) {
  if (!lat.contains(k)) {
    throw std::invalid_argument("site outside the lattice");
  }
  // shock site, or the plateau left of the next shock
  std::size_t plateau = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (k == xs[i]) return profile.shock[i];
    if (k > xs[i]) plateau = i + 1;
  }
  return profile.bulk[plateau];
}

std::vector<double> shock_measure_vector(const ShockProfile& profile,
                                         const ShockPositions& xs,
                                         const Lattice& lat) {
  profile.validate();
  if (static_cast<int>(xs.size()) != profile.n_shocks()) {
    throw std::invalid_argument("position count does not match the profile");
  }
  int prev = lat.l_minus - 1;
  for (int x : xs) {
    if (x <= prev || x > lat.l_plus) {
      throw std::invalid_argument(
          "shock positions must be strictly increasing inside the lattice");
    }
    prev = x;
  }
  std::vector<TwoVector> factors;
  factors.reserve(lat.length());
  for (int k = lat.l_minus; k <= lat.l_plus; ++k) {
    factors.push_back(density_vector(shock_site_density(profile, xs, lat, k)));
  }
  return kron_vector(factors);
}

DualityMatrices build_duality_matrices(const ShockProfile& profile,
                                       const Rates& rates,
                                       const Lattice& lat) {
  if (lat.length() > max_sites()) {
    throw ResourceLimitError("duality matrices capped at 2^" +
                             std::to_string(max_sites()) + " columns");
  }
  const std::vector<ShockHopRates> sr = shock_rates(profile, rates);
  const SubsetIndex idx(lat.length(), profile.n_shocks());
  DualityMatrices dm;
  dm.n_rows = idx.count();
  dm.n_cols = lat.num_configs();
  dm.weights = normalized_weights(
      reversible_weights(sr, lat, profile.n_shocks()), WeightNorm::kMax);
  dm.s.resize(dm.n_rows);
  dm.r.resize(dm.n_rows);
  for (std::size_t row = 0; row < dm.n_rows; ++row) {
    dm.s[row] = shock_measure_vector(profile, idx.unrank(row, lat), lat);
    dm.r[row].resize(dm.n_cols);
    for (std::size_t col = 0; col < dm.n_cols; ++col) {
      dm.r[row][col] = dm.weights[row] * dm.s[row][col];
    }
  }
  return dm;
}

}  // namespace shocklab
