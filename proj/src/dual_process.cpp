#include "shocklab/dual_process.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace shocklab {

SubsetIndex::SubsetIndex(int length, int n_particles)
    : length_(length), particles_(n_particles) {
  if (n_particles < 1 || n_particles > length) {
    throw std::invalid_argument("need 1 <= N <= L, got N=" +
                                std::to_string(n_particles) +
                                " L=" + std::to_string(length));
  }
  choose_.assign(length + 1, std::vector<std::uint64_t>(n_particles + 1, 0));
  for (int n = 0; n <= length; ++n) {
    choose_[n][0] = 1;
    for (int k = 1; k <= std::min(n, n_particles); ++k) {
      choose_[n][k] = (k == n) ? 1
                               : choose_[n - 1][k - 1] + choose_[n - 1][k];
    }
  }
  count_ = choose_[length][n_particles];
}

std::size_t SubsetIndex::rank(const ShockPositions& xs,
                              const Lattice& lat) const {
  if (static_cast<int>(xs.size()) != particles_) {
    throw std::invalid_argument("position vector has wrong particle count");
  }
  std::uint64_t r = 0;
  int prev = lat.l_minus - 1;
  for (int i = 0; i < particles_; ++i) {
    const int x = xs[i];
    if (x <= prev || x > lat.l_plus) {
      throw std::invalid_argument("positions must be strictly increasing "
                                  "inside the lattice");
    }
    prev = x;
    r += choose_[x - lat.l_minus][i + 1];  // colexicographic rank
  }
  return static_cast<std::size_t>(r);
}

ShockPositions SubsetIndex::unrank(std::size_t index,
                                   const Lattice& lat) const {
  if (index >= count_) {
    throw std::invalid_argument("dual state index out of range");
  }
  ShockPositions xs(particles_);
  std::uint64_t rest = index;
  for (int i = particles_; i >= 1; --i) {
    int c = i - 1;  // smallest position with choose[c][i] defined
    while (c + 1 <= length_ - (particles_ - i) &&
           choose_[c + 1][i] <= rest) {
      ++c;
    }
    rest -= choose_[c][i];
    xs[i - 1] = lat.l_minus + c;
  }
  return xs;
}

namespace {

// Sentinel-aware neighbour coordinates: x_0 = l_minus - 1, x_{N+1} =
// l_plus + 1.
int left_neighbour(const ShockPositions& xs, int i, const Lattice& lat) {
  return i == 0 ? lat.l_minus - 1 : xs[i - 1];
}

int right_neighbour(const ShockPositions& xs, int i, const Lattice& lat) {
  return i + 1 == static_cast<int>(xs.size()) ? lat.l_plus + 1 : xs[i + 1];
}

}  // namespace

double shock_jump_rate_left(const ShockPositions& xs, int i,
                            const std::vector<ShockHopRates>& rates,
                            const Lattice& lat) {
  const int x = xs[i];
  const int lo = left_neighbour(xs, i, lat);
  const int hi = right_neighbour(xs, i, lat);
  if (x == lo + 1 || x == hi) return 0.0;
  return rates[i].d_left;
}

double shock_jump_rate_right(const ShockPositions& xs, int i,
                             const std::vector<ShockHopRates>& rates,
                             const Lattice& lat) {
  const int x = xs[i];
  const int lo = left_neighbour(xs, i, lat);
  const int hi = right_neighbour(xs, i, lat);
  if (x == hi - 1 || x == lo) return 0.0;
  return rates[i].d_right;
}

SparseMatrix build_q(const std::vector<ShockHopRates>& rates,
                     const Lattice& lat) {
  const int n = static_cast<int>(rates.size());
  const SubsetIndex idx(lat.length(), n);
  std::vector<Triplet> trip;
  trip.reserve(idx.count() * (2 * n + 1));
  for (std::size_t s = 0; s < idx.count(); ++s) {
    ShockPositions xs = idx.unrank(s, lat);
    double exit_rate = 0.0;
    for (int i = 0; i < n; ++i) {
      const double wl = shock_jump_rate_left(xs, i, rates, lat);
      if (wl > 0.0) {
        xs[i] -= 1;
        trip.push_back({s, idx.rank(xs, lat), wl});
        xs[i] += 1;
        exit_rate += wl;
      }
      const double wr = shock_jump_rate_right(xs, i, rates, lat);
      if (wr > 0.0) {
        xs[i] += 1;
        trip.push_back({s, idx.rank(xs, lat), wr});
        xs[i] -= 1;
        exit_rate += wr;
      }
    }
    if (exit_rate > 0.0) trip.push_back({s, s, -exit_rate});
  }
  SparseMatrix q(idx.count(), std::move(trip), GeneratorKind::kIntensity);
  check_generator(q);
  return q;
}

SparseMatrix build_q(const ShockProfile& profile, const Rates& rates,
                     const Lattice& lat) {
  return build_q(shock_rates(profile, rates), lat);
}

double reversible_weight(const ShockPositions& xs,
                         const std::vector<ShockHopRates>& rates,
                         const Lattice& lat) {
  double w = 1.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    w *= std::pow(rates[i].asymmetry(), 2.0 * (xs[i] - lat.l_minus));
  }
  return w;
}

std::vector<double> reversible_weights(const std::vector<ShockHopRates>& rates,
                                       const Lattice& lat, int n_particles) {
  const SubsetIndex idx(lat.length(), n_particles);
  std::vector<double> w(idx.count());
  for (std::size_t s = 0; s < idx.count(); ++s) {
    w[s] = reversible_weight(idx.unrank(s, lat), rates, lat);
  }
  return w;
}

std::vector<double> normalized_weights(std::vector<double> weights,
                                       WeightNorm norm) {
  double scale = 0.0;
  if (norm == WeightNorm::kSum) {
    for (double w : weights) scale += w;
  } else {
    for (double w : weights) scale = std::max(scale, w);
  }
  if (scale <= 0.0) throw std::invalid_argument("weights must be positive");
  for (double& w : weights) w /= scale;
  return weights;
}

double detailed_balance_residual(const SparseMatrix& q,
                                 const std::vector<double>& weights) {
  if (weights.size() != q.dim()) {
    throw std::invalid_argument("weight vector does not match Q");
  }
  double worst = 0.0;
  const auto& rp = q.row_ptr();
  const auto& cols = q.cols();
  const auto& vals = q.values();
  for (std::size_t x = 0; x < q.dim(); ++x) {
    for (std::size_t k = rp[x]; k < rp[x + 1]; ++k) {
      const std::size_t y = cols[k];
      if (y == x) continue;
      const double flux = weights[x] * vals[k] - weights[y] * q.entry(y, x);
      worst = std::max(worst, std::abs(flux));
    }
  }
  return worst;
}

}  // namespace shocklab
