#ifndef SHOCKLAB_GILLESPIE_HPP
#define SHOCKLAB_GILLESPIE_HPP

#include <cstdint>
#include <vector>

#include "shocklab/dual_process.hpp"
#include "shocklab/lattice.hpp"
#include "shocklab/rates.hpp"
#include "shocklab/shock.hpp"

namespace shocklab {

// Small splittable PRNG: a splitmix64 stream per trajectory, derived
// from the ensemble seed and the trajectory index.  Deterministic across
// platforms (no distribution library involved).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  double next_unit();                  // uniform in (0, 1]
  double next_exponential(double rate);

 private:
  std::uint64_t state_;
};

struct Move {
  enum class Kind {
    kHopRight,      // bond k -> k+1
    kHopLeft,       // bond k+1 -> k
    kInjectLeft,
    kExtractLeft,
    kInjectRight,
    kExtractRight,
    kShockLeft,     // dual particle i steps left
    kShockRight,    // dual particle i steps right
  };
  Kind kind;
  int index;  // bond site k for hops, particle index i for shock moves
};

struct TrajectoryEvent {
  double time;
  Move move;
};

struct AsepTrajectory {
  std::uint64_t seed = 0;
  double t_end = 0.0;
  Configuration initial;
  Configuration final_state;
  std::vector<TrajectoryEvent> events;
  std::vector<double> occupation_time;  // per site, integral of eta_k dt
};

struct ShockTrajectory {
  std::uint64_t seed = 0;
  double t_end = 0.0;
  ShockPositions initial;
  ShockPositions final_positions;
  std::vector<TrajectoryEvent> events;
  std::vector<double> occupation_time;  // per dual state (SubsetIndex order)
};

// Statistically exact continuous-time trajectory of the open ASEP:
// exponential waiting times with the total exit rate of the current
// configuration, move drawn proportionally to the individual rates.
AsepTrajectory gillespie_asep(const Rates& rates, const Lattice& lat,
                              const Configuration& init, double t_end,
                              std::uint64_t seed, bool record_events = true);

// Same for the shock exclusion process (blocked and wall moves carry
// rate zero and are never proposed).
ShockTrajectory gillespie_shock(const std::vector<ShockHopRates>& sr,
                                const Lattice& lat, const ShockPositions& init,
                                double t_end, std::uint64_t seed,
                                bool record_events = true);

// One independent-site sample from a Bernoulli product measure given by
// per-site densities.
Configuration sample_product_measure(const std::vector<double>& densities,
                                     const Lattice& lat, Rng& rng);

struct EnsembleStats {
  std::size_t n_traj = 0;
  std::vector<double> site_density;   // empirical means
  std::vector<double> site_stderr;
  std::vector<double> site_exact;
  std::vector<double> site_z;
  double max_abs_z = 0.0;
};

// Runs n_traj ASEP trajectories started from independent samples of the
// shock measure mu^{x0}, measures the site densities at time t and
// compares them with the exact evolved profile (z-scores).
EnsembleStats compare_empirical_exact(const Rates& rates, const Lattice& lat,
                                      int n_shocks, const ShockPositions& x0,
                                      double t, std::size_t n_traj,
                                      std::uint64_t seed, int threads = 1);

// Final-position histogram of n_traj independent dual walks run to
// t_end, with z-scores against the exact stationary weights.
struct HistogramStats {
  std::size_t n_traj = 0;
  std::vector<std::size_t> counts;
  std::vector<double> expected;  // probabilities
  std::vector<double> z;
  double max_abs_z = 0.0;
};
HistogramStats shock_stationary_histogram(const std::vector<ShockHopRates>& sr,
                                          const Lattice& lat,
                                          const ShockPositions& init,
                                          double t_end, std::size_t n_traj,
                                          std::uint64_t seed, int threads = 1);

}  // namespace shocklab

#endif
