#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "shocklab/dual_process.hpp"

using namespace shocklab;

namespace {

std::vector<ShockHopRates> demo_rates(int n) {
  // stable family for r=2, ell=1, rho_0 = 1/3
  const Rates rates{2.0, 1.0, 1.0, 1.0, 1.0, 1.0};
  ShockProfile profile;
  profile.bulk = densities_from_stability(1.0 / 3.0, n, std::sqrt(2.0));
  profile.shock.assign(n, 0.5);
  return shock_rates(profile, rates);
}

}  // namespace

TEST_CASE("subset ranking is a bijection") {
  for (int length = 2; length <= 8; ++length) {
    const Lattice lat(1, length);
    for (int n = 1; n <= length; ++n) {
      const SubsetIndex idx(length, n);
      std::vector<bool> seen(idx.count(), false);
      for (std::size_t s = 0; s < idx.count(); ++s) {
        const ShockPositions xs = idx.unrank(s, lat);
        REQUIRE(static_cast<int>(xs.size()) == n);
        for (std::size_t i = 1; i < xs.size(); ++i) CHECK(xs[i] > xs[i - 1]);
        CHECK(idx.rank(xs, lat) == s);
        CHECK(!seen[s]);
        seen[s] = true;
      }
    }
  }
  CHECK_THROWS_AS(SubsetIndex(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(SubsetIndex(4, 0), std::invalid_argument);
}

TEST_CASE("single walker generator is the reflecting tridiagonal matrix") {
  const auto sr = demo_rates(1);
  const Lattice lat(1, 4);
  const auto q = build_q(sr, lat).to_dense();
  const double dl = sr[0].d_left, dr = sr[0].d_right;
  const std::vector<std::vector<double>> expected = {
      {-dr, dr, 0, 0},
      {dl, -(dl + dr), dr, 0},
      {0, dl, -(dl + dr), dr},
      {0, 0, dl, -dl},
  };
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(q[i][j] == doctest::Approx(expected[i][j]).epsilon(1e-15));
    }
  }
}

TEST_CASE("fully packed lattice freezes") {
  const Lattice lat(1, 3);
  const auto q = build_q(demo_rates(3), lat);
  CHECK(q.dim() == 1);
  CHECK(q.nnz() == 0);
}

TEST_CASE("two particles on three sites, enumerated by hand") {
  const auto sr = demo_rates(2);
  const Lattice lat(1, 3);
  const SubsetIndex idx(3, 2);
  const auto q = build_q(sr, lat).to_dense();
  const std::size_t s12 = idx.rank({1, 2}, lat);
  const std::size_t s13 = idx.rank({1, 3}, lat);
  const std::size_t s23 = idx.rank({2, 3}, lat);
  const double d1l = sr[0].d_left, d1r = sr[0].d_right;
  const double d2l = sr[1].d_left, d2r = sr[1].d_right;

  // (1,2): only particle 2 can move, to the right
  CHECK(q[s12][s13] == doctest::Approx(d2r));
  CHECK(q[s12][s12] == doctest::Approx(-d2r));
  CHECK(q[s12][s23] == 0.0);
  // (1,3): particle 1 right, particle 2 left
  CHECK(q[s13][s23] == doctest::Approx(d1r));
  CHECK(q[s13][s12] == doctest::Approx(d2l));
  CHECK(q[s13][s13] == doctest::Approx(-(d1r + d2l)));
  // (2,3): only particle 1 can move, to the left
  CHECK(q[s23][s13] == doctest::Approx(d1l));
  CHECK(q[s23][s23] == doctest::Approx(-d1l));
  CHECK(q[s23][s12] == 0.0);
}

TEST_CASE("reversible weights for the demo walker") {
  const auto sr = demo_rates(1);
  const Lattice lat(1, 2);
  const auto w = normalized_weights(reversible_weights(sr, lat, 1),
                                    WeightNorm::kSum);
  CHECK(w[0] == doctest::Approx(8.0 / 17.0).epsilon(1e-14));
  CHECK(w[1] == doctest::Approx(9.0 / 17.0).epsilon(1e-14));
}

TEST_CASE("detailed balance holds for every lattice filling") {
  for (int length = 2; length <= 8; ++length) {
    const Lattice lat(1, length);
    for (int n = 1; n <= length; ++n) {
      const auto sr = demo_rates(n);
      const auto q = build_q(sr, lat);
      const auto pi = normalized_weights(reversible_weights(sr, lat, n),
                                         WeightNorm::kMax);
      CHECK(detailed_balance_residual(q, pi) < 1e-12);
    }
  }
}

TEST_CASE("sentinel factors silence wall and contact moves") {
  const auto sr = demo_rates(2);
  const Lattice lat(1, 5);
  // at the left wall the first particle cannot step out
  CHECK(shock_jump_rate_left({1, 3}, 0, sr, lat) == 0.0);
  CHECK(shock_jump_rate_right({1, 3}, 0, sr, lat) == doctest::Approx(
      sr[0].d_right));
  // contact pair: inner moves blocked
  CHECK(shock_jump_rate_right({2, 3}, 0, sr, lat) == 0.0);
  CHECK(shock_jump_rate_left({2, 3}, 1, sr, lat) == 0.0);
  // at the right wall the last particle cannot step out
  CHECK(shock_jump_rate_right({2, 5}, 1, sr, lat) == 0.0);
}
