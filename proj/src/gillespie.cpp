#include "shocklab/gillespie.hpp"

#include <cmath>
#include <stdexcept>

#include "shocklab/duality.hpp"
#include "shocklab/parallel.hpp"
#include "shocklab/shock_measure.hpp"

namespace shocklab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(seed ^ splitmix64(index)));
}

std::uint64_t Rng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t x = state_;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double Rng::next_unit() {
  // 53-bit mantissa mapped into (0, 1]
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double Rng::next_exponential(double rate) {
  return -std::log(next_unit()) / rate;
}

AsepTrajectory gillespie_asep(const Rates& rates, const Lattice& lat,
                              const Configuration& init, double t_end,
                              std::uint64_t seed, bool record_events) {
  rates.validate();
  if (t_end < 0.0) throw std::invalid_argument("negative horizon");
  if (init.length != lat.length()) {
    throw std::invalid_argument("initial configuration does not match L");
  }
  const int length = lat.length();
  Rng rng(seed);

  AsepTrajectory traj;
  traj.seed = seed;
  traj.t_end = t_end;
  traj.initial = init;
  traj.occupation_time.assign(length, 0.0);

  std::uint32_t bits = init.bits;
  double t = 0.0;
  std::vector<std::pair<double, Move>> channels;
  channels.reserve(length + 1);
  while (true) {
    channels.clear();
    double total = 0.0;
    auto add = [&](double rate, Move move) {
      if (rate <= 0.0) return;
      total += rate;
      channels.emplace_back(total, move);
    };
    for (int off = 0; off + 1 < length; ++off) {
      const int nk = occupation_bits(bits, length, off);
      const int nk1 = occupation_bits(bits, length, off + 1);
      if (nk == 1 && nk1 == 0) {
        add(rates.r, {Move::Kind::kHopRight, lat.l_minus + off});
      } else if (nk == 0 && nk1 == 1) {
        add(rates.ell, {Move::Kind::kHopLeft, lat.l_minus + off});
      }
    }
    if (occupation_bits(bits, length, 0) == 0) {
      add(rates.alpha, {Move::Kind::kInjectLeft, lat.l_minus});
    } else {
      add(rates.gamma, {Move::Kind::kExtractLeft, lat.l_minus});
    }
    if (occupation_bits(bits, length, length - 1) == 0) {
      add(rates.delta, {Move::Kind::kInjectRight, lat.l_plus});
    } else {
      add(rates.beta, {Move::Kind::kExtractRight, lat.l_plus});
    }

    const double dt = rng.next_exponential(total);
    const double step = std::min(dt, t_end - t);
    for (int off = 0; off < length; ++off) {
      traj.occupation_time[off] += step * occupation_bits(bits, length, off);
    }
    if (t + dt >= t_end) break;
    t += dt;

    const double u = rng.next_unit() * total;
    const Move* chosen = &channels.back().second;
    for (const auto& [cum, move] : channels) {
      if (u <= cum) {
        chosen = &move;
        break;
      }
    }
    switch (chosen->kind) {
      case Move::Kind::kHopRight:
      case Move::Kind::kHopLeft: {
        const int off = chosen->index - lat.l_minus;
        bits ^= (1u << (length - 1 - off)) | (1u << (length - 2 - off));
        break;
      }
      case Move::Kind::kInjectLeft:
      case Move::Kind::kExtractLeft:
        bits ^= 1u << (length - 1);
        break;
      case Move::Kind::kInjectRight:
      case Move::Kind::kExtractRight:
        bits ^= 1u;
        break;
      default:
        throw std::logic_error("unexpected move kind");
    }
    if (record_events) traj.events.push_back({t, *chosen});
  }
  traj.final_state = Configuration{bits, length};
  return traj;
}

ShockTrajectory gillespie_shock(const std::vector<ShockHopRates>& sr,
                                const Lattice& lat, const ShockPositions& init,
                                double t_end, std::uint64_t seed,
                                bool record_events) {
  if (t_end < 0.0) throw std::invalid_argument("negative horizon");
  const int n = static_cast<int>(sr.size());
  const SubsetIndex idx(lat.length(), n);
  Rng rng(seed);

  ShockTrajectory traj;
  traj.seed = seed;
  traj.t_end = t_end;
  traj.initial = init;
  traj.occupation_time.assign(idx.count(), 0.0);

  ShockPositions xs = init;
  idx.rank(xs, lat);  // validates ordering
  double t = 0.0;
  std::vector<std::pair<double, Move>> channels;
  channels.reserve(2 * n);
  while (true) {
    channels.clear();
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      const double wl = shock_jump_rate_left(xs, i, sr, lat);
      if (wl > 0.0) {
        total += wl;
        channels.emplace_back(total, Move{Move::Kind::kShockLeft, i});
      }
      const double wr = shock_jump_rate_right(xs, i, sr, lat);
      if (wr > 0.0) {
        total += wr;
        channels.emplace_back(total, Move{Move::Kind::kShockRight, i});
      }
    }
    if (total <= 0.0) {
      // fully jammed; nothing ever moves
      traj.occupation_time[idx.rank(xs, lat)] += t_end - t;
      break;
    }
    const double dt = rng.next_exponential(total);
    traj.occupation_time[idx.rank(xs, lat)] += std::min(dt, t_end - t);
    if (t + dt >= t_end) break;
    t += dt;

    const double u = rng.next_unit() * total;
    const Move* chosen = &channels.back().second;
    for (const auto& [cum, move] : channels) {
      if (u <= cum) {
        chosen = &move;
        break;
      }
    }
    xs[chosen->index] += chosen->kind == Move::Kind::kShockRight ? 1 : -1;
    if (record_events) traj.events.push_back({t, *chosen});
  }
  traj.final_positions = xs;
  return traj;
}

Configuration sample_product_measure(const std::vector<double>& densities,
                                     const Lattice& lat, Rng& rng) {
  const int length = lat.length();
  if (static_cast<int>(densities.size()) != length) {
    throw std::invalid_argument("density profile does not match the lattice");
  }
  std::uint32_t bits = 0;
  for (int off = 0; off < length; ++off) {
    if (rng.next_unit() <= densities[off]) {
      bits |= 1u << (length - 1 - off);
    }
  }
  return Configuration{bits, length};
}

EnsembleStats compare_empirical_exact(const Rates& rates, const Lattice& lat,
                                      int n_shocks, const ShockPositions& x0,
                                      double t, std::size_t n_traj,
                                      std::uint64_t seed, int threads) {
  const int length = lat.length();
  const ShockProfile profile = profile_from_boundary(rates, n_shocks);
  std::vector<double> init_density(length);
  for (int off = 0; off < length; ++off) {
    init_density[off] =
        shock_site_density(profile, x0, lat, lat.l_minus + off);
  }

  // exact evolved profile from the dual convex combination
  const EvolutionComparison ec =
      evolve_and_compare(rates, lat, n_shocks, x0, t, 1e-12);
  std::vector<double> exact(length, 0.0);
  for (std::size_t cfg = 0; cfg < ec.combination.size(); ++cfg) {
    for (int off = 0; off < length; ++off) {
      if (occupation_bits(static_cast<std::uint32_t>(cfg), length, off)) {
        exact[off] += ec.combination[cfg];
      }
    }
  }

  std::vector<std::uint64_t> hits(length, 0);
  std::vector<std::uint32_t> finals(n_traj);
  parallel_for(n_traj, std::max(1, threads), [&](std::size_t j) {
    Rng rng = Rng::stream(seed, j);
    const Configuration init = sample_product_measure(init_density, lat, rng);
    const AsepTrajectory traj = gillespie_asep(
        rates, lat, init, t, rng.next_u64(), /*record_events=*/false);
    finals[j] = traj.final_state.bits;
  });
  for (std::size_t j = 0; j < n_traj; ++j) {
    for (int off = 0; off < length; ++off) {
      hits[off] += occupation_bits(finals[j], length, off);
    }
  }

  EnsembleStats stats;
  stats.n_traj = n_traj;
  stats.site_density.resize(length);
  stats.site_stderr.resize(length);
  stats.site_exact = exact;
  stats.site_z.resize(length);
  for (int off = 0; off < length; ++off) {
    const double p_hat = static_cast<double>(hits[off]) / n_traj;
    const double p = exact[off];
    // sample std / sqrt(n); falls back to the exact-null error when the
    // empirical variance degenerates
    double se = std::sqrt(p_hat * (1.0 - p_hat) / n_traj);
    if (se == 0.0) se = std::sqrt(p * (1.0 - p) / n_traj);
    stats.site_density[off] = p_hat;
    stats.site_stderr[off] = se;
    stats.site_z[off] = se > 0.0 ? (p_hat - p) / se : 0.0;
    stats.max_abs_z = std::max(stats.max_abs_z, std::abs(stats.site_z[off]));
  }
  return stats;
}

HistogramStats shock_stationary_histogram(const std::vector<ShockHopRates>& sr,
                                          const Lattice& lat,
                                          const ShockPositions& init,
                                          double t_end, std::size_t n_traj,
                                          std::uint64_t seed, int threads) {
  const int n = static_cast<int>(sr.size());
  const SubsetIndex idx(lat.length(), n);
  std::vector<std::size_t> finals(n_traj);
  parallel_for(n_traj, std::max(1, threads), [&](std::size_t j) {
    Rng rng = Rng::stream(seed, j);
    const ShockTrajectory traj = gillespie_shock(
        sr, lat, init, t_end, rng.next_u64(), /*record_events=*/false);
    finals[j] = idx.rank(traj.final_positions, lat);
  });

  HistogramStats hist;
  hist.n_traj = n_traj;
  hist.counts.assign(idx.count(), 0);
  for (std::size_t f : finals) ++hist.counts[f];
  hist.expected =
      normalized_weights(reversible_weights(sr, lat, n), WeightNorm::kSum);
  hist.z.resize(idx.count());
  for (std::size_t s = 0; s < idx.count(); ++s) {
    const double p = hist.expected[s];
    const double se = std::sqrt(p * (1.0 - p) * n_traj);
    hist.z[s] = se > 0.0 ? (hist.counts[s] - p * n_traj) / se : 0.0;
    hist.max_abs_z = std::max(hist.max_abs_z, std::abs(hist.z[s]));
  }
  return hist;
}

}  // namespace shocklab
