#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "shocklab/asep.hpp"
#include "shocklab/dense.hpp"
#include "shocklab/duality.hpp"
#include "shocklab/gillespie.hpp"

using namespace shocklab;

namespace {

Rates demo_rates() {
  return rates_from_parametrization({std::sqrt(2.0), std::sqrt(2.0),
                                     1.0 / 3.0, 0.5, std::sqrt(2.0),
                                     std::sqrt(2.0)});
}

}  // namespace

TEST_CASE("zero horizon returns the initial state") {
  const Lattice lat(1, 4);
  const Configuration init{0b1010, 4};
  const auto traj = gillespie_asep(demo_rates(), lat, init, 0.0, 99);
  CHECK(traj.final_state.bits == init.bits);
  CHECK(traj.events.empty());
}

TEST_CASE("identical seeds give identical trajectories") {
  const Lattice lat(1, 5);
  const Configuration init{0b00110, 5};
  const auto a = gillespie_asep(demo_rates(), lat, init, 8.0, 1234);
  const auto b = gillespie_asep(demo_rates(), lat, init, 8.0, 1234);
  REQUIRE(a.events.size() == b.events.size());
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    CHECK(a.events[i].time == b.events[i].time);
    CHECK(a.events[i].move.kind == b.events[i].move.kind);
    CHECK(a.events[i].move.index == b.events[i].move.index);
  }
  CHECK(a.final_state.bits == b.final_state.bits);

  const auto c = gillespie_asep(demo_rates(), lat, init, 8.0, 1235);
  CHECK(a.events.size() != c.events.size());  // overwhelmingly likely
}

TEST_CASE("rate rescaling rescales time and keeps the move sequence") {
  // doubling every rate is exact in binary floating point, so the same
  // seed must visit the same states at exactly half the times
  const Rates base = demo_rates();
  const Rates doubled{2 * base.r,     2 * base.ell,  2 * base.alpha,
                      2 * base.beta,  2 * base.gamma, 2 * base.delta};
  const Lattice lat(1, 5);
  const Configuration init{0b01100, 5};
  const auto slow = gillespie_asep(base, lat, init, 6.0, 777);
  const auto fast = gillespie_asep(doubled, lat, init, 3.0, 777);
  REQUIRE(slow.events.size() == fast.events.size());
  for (std::size_t i = 0; i < slow.events.size(); ++i) {
    CHECK(slow.events[i].move.kind == fast.events[i].move.kind);
    CHECK(slow.events[i].move.index == fast.events[i].move.index);
    CHECK(fast.events[i].time ==
          doctest::Approx(slow.events[i].time / 2.0).epsilon(1e-12));
  }
  CHECK(slow.final_state.bits == fast.final_state.bits);
}

TEST_CASE("every recorded move is admissible in the pre-move state") {
  const Rates rates = demo_rates();
  const Lattice lat(1, 5);
  const auto traj = gillespie_asep(rates, lat, Configuration{0, 5}, 20.0, 4);
  std::uint32_t bits = 0;
  double previous = 0.0;
  const int length = 5;
  for (const auto& ev : traj.events) {
    CHECK(ev.time > previous);
    previous = ev.time;
    const int off = ev.move.index - lat.l_minus;
    switch (ev.move.kind) {
      case Move::Kind::kHopRight:
        CHECK(occupation_bits(bits, length, off) == 1);
        CHECK(occupation_bits(bits, length, off + 1) == 0);
        bits ^= (1u << (length - 1 - off)) | (1u << (length - 2 - off));
        break;
      case Move::Kind::kHopLeft:
        CHECK(occupation_bits(bits, length, off) == 0);
        CHECK(occupation_bits(bits, length, off + 1) == 1);
        bits ^= (1u << (length - 1 - off)) | (1u << (length - 2 - off));
        break;
      case Move::Kind::kInjectLeft:
        CHECK(occupation_bits(bits, length, 0) == 0);
        bits ^= 1u << (length - 1);
        break;
      case Move::Kind::kExtractLeft:
        CHECK(occupation_bits(bits, length, 0) == 1);
        bits ^= 1u << (length - 1);
        break;
      case Move::Kind::kInjectRight:
        CHECK(occupation_bits(bits, length, length - 1) == 0);
        bits ^= 1u;
        break;
      case Move::Kind::kExtractRight:
        CHECK(occupation_bits(bits, length, length - 1) == 1);
        bits ^= 1u;
        break;
      default:
        FAIL("unexpected move kind");
    }
  }
  CHECK(bits == traj.final_state.bits);
}

TEST_CASE("two-site chain relaxes to the exact stationary law") {
  const Rates rates = demo_rates();
  const Lattice lat(1, 2);
  const auto pi = stationary_from_nullspace(build_w(rates, lat));

  const std::size_t n_traj = 40000;
  std::vector<std::size_t> counts(4, 0);
  for (std::size_t j = 0; j < n_traj; ++j) {
    Rng rng = Rng::stream(2024, j);
    const Configuration init{static_cast<std::uint32_t>(rng.next_u64() & 3u),
                             2};
    const auto traj =
        gillespie_asep(rates, lat, init, 12.0, rng.next_u64(), false);
    ++counts[traj.final_state.bits];
  }
  for (int s = 0; s < 4; ++s) {
    const double se = std::sqrt(pi[s] * (1 - pi[s]) * n_traj);
    const double z = (counts[s] - pi[s] * n_traj) / se;
    CHECK(std::abs(z) < 4.0);
  }
}

TEST_CASE("jammed dual process never moves") {
  const auto p = solve_manifold(std::sqrt(2.0), 1.0, 0.3, {3, 1});
  const auto sr =
      shock_rates(profile_from_boundary(rates_from_parametrization(p), 3),
                  rates_from_parametrization(p));
  const Lattice lat(1, 3);
  const auto traj = gillespie_shock(sr, lat, {1, 2, 3}, 5.0, 11);
  CHECK(traj.events.empty());
  CHECK(traj.final_positions == ShockPositions{1, 2, 3});
  CHECK(traj.occupation_time[0] == doctest::Approx(5.0));
}

TEST_CASE("short-time drift matches the shock velocity") {
  const Rates rates = demo_rates();
  const auto sr = shock_rates(profile_from_boundary(rates, 1), rates);
  const Lattice lat(1, 12);
  const double t = 0.25;
  const std::size_t n_traj = 20000;
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t j = 0; j < n_traj; ++j) {
    Rng rng = Rng::stream(31415, j);
    const auto traj = gillespie_shock(sr, lat, {6}, t, rng.next_u64(), false);
    const double displacement = traj.final_positions[0] - 6;
    sum += displacement;
    sum_sq += displacement * displacement;
  }
  const double mean = sum / n_traj;
  const double var = sum_sq / n_traj - mean * mean;
  const double se = std::sqrt(var / n_traj);
  CHECK(std::abs(mean - sr[0].velocity() * t) < 4.0 * se);
}

TEST_CASE("long-time histogram matches the reversible weights") {
  const Rates rates = demo_rates();
  const auto sr = shock_rates(profile_from_boundary(rates, 1), rates);
  const Lattice lat(1, 5);
  const auto hist =
      shock_stationary_histogram(sr, lat, {3}, 30.0, 30000, 99, 2);
  CHECK(hist.max_abs_z < 4.0);
}

TEST_CASE("occupation-time ratios witness reversibility") {
  const auto p = solve_manifold(std::sqrt(2.0), std::sqrt(2.0),
                                1.0 / 3.0, {2, 1});
  const Rates r2 = rates_from_parametrization(p);
  const auto sr = shock_rates(profile_from_boundary(r2, 2), r2);
  const Lattice lat(1, 4);
  const SubsetIndex idx(4, 2);
  const auto pi = normalized_weights(reversible_weights(sr, lat, 2),
                                     WeightNorm::kSum);

  const std::size_t n_traj = 400;
  const double horizon = 50.0;
  std::vector<std::vector<double>> fractions(
      n_traj, std::vector<double>(idx.count()));
  for (std::size_t j = 0; j < n_traj; ++j) {
    Rng rng = Rng::stream(7777, j);
    const auto traj =
        gillespie_shock(sr, lat, {1, 3}, horizon, rng.next_u64(), false);
    for (std::size_t s = 0; s < idx.count(); ++s) {
      fractions[j][s] = traj.occupation_time[s] / horizon;
    }
  }
  // detailed-balance witness: f(x) pi(y) - f(y) pi(x) has mean zero
  for (std::size_t x = 0; x < idx.count(); ++x) {
    for (std::size_t y = x + 1; y < idx.count(); ++y) {
      double sum = 0.0, sum_sq = 0.0;
      for (std::size_t j = 0; j < n_traj; ++j) {
        const double d = fractions[j][x] * pi[y] - fractions[j][y] * pi[x];
        sum += d;
        sum_sq += d * d;
      }
      const double mean = sum / n_traj;
      const double var = sum_sq / n_traj - mean * mean;
      const double se = std::sqrt(var / n_traj);
      CHECK(std::abs(mean) < 4.0 * std::max(se, 1e-12));
    }
  }
}

TEST_CASE("ensemble comparison against the exact evolved profile") {
  const Rates rates = demo_rates();
  const Lattice lat(1, 5);

  SUBCASE("zero horizon samples the initial product measure") {
    const auto stats =
        compare_empirical_exact(rates, lat, 1, {2}, 0.0, 30000, 5150, 2);
    CHECK(stats.max_abs_z < 4.0);
  }

  SUBCASE("finite horizon") {
    const auto stats = compare_empirical_exact(
        rates, lat, 1, {2}, 2.0 / rates.w(), 30000, 6283, 2);
    CHECK(stats.max_abs_z < 4.0);
  }
}
