#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "shocklab/asep.hpp"
#include "shocklab/dense.hpp"
#include "shocklab/duality.hpp"
#include "shocklab/propagator.hpp"

using namespace shocklab;

namespace {

Rates demo_rates() {
  return rates_from_parametrization({std::sqrt(2.0), std::sqrt(2.0),
                                     1.0 / 3.0, 0.5, std::sqrt(2.0),
                                     std::sqrt(2.0)});
}

Rates perturbed_rates(double delta_omega) {
  BoundaryParametrization p{std::sqrt(2.0), std::sqrt(2.0), 1.0 / 3.0, 0.5,
                            std::sqrt(2.0), std::sqrt(2.0) + delta_omega};
  return rates_from_parametrization(p);
}

}  // namespace

TEST_CASE("reverse duality holds exactly on the manifold") {
  const auto report = verify_reverse_duality(demo_rates(), Lattice(1, 3), 1);
  CHECK(report.on_manifold);
  CHECK(report.residual_duality < 1e-12);
  CHECK(report.residual_intertwine < 1e-12);
}

TEST_CASE("perturbing the right barrier breaks the duality") {
  const auto report =
      verify_reverse_duality(perturbed_rates(0.1), Lattice(1, 3), 1);
  CHECK(!report.on_manifold);
  CHECK(report.residual_duality > 1e-3);
  CHECK(report.residual_intertwine > 1e-3);
  CHECK(std::abs(report.manifold.res_m) > 1e-3);
  // the N constraint is barrier independent and stays satisfied
  CHECK(std::abs(report.manifold.res_n) < 1e-12);
}

TEST_CASE("fully shocked lattice: the blocking measure is stationary") {
  for (int length : {2, 3, 4}) {
    const Lattice lat(1, length);
    const auto p =
        solve_manifold(std::sqrt(2.0), 1.0, 0.3, {length, 1});
    const Rates rates = rates_from_parametrization(p);
    const auto report = verify_reverse_duality(rates, lat, length);
    CHECK(report.residual_duality < 1e-12);

    // Q is the 1x1 zero generator, so R W = 0: the single shock measure
    // row is a left null vector of W
    const ShockProfile profile = profile_from_boundary(rates, length);
    ShockPositions all(length);
    for (int i = 0; i < length; ++i) all[i] = 1 + i;
    const auto mu = shock_measure_vector(profile, all, lat);
    const auto residual = build_w(rates, lat).apply_transpose(mu);
    for (double v : residual) CHECK(std::abs(v) < 1e-12);
  }
}

TEST_CASE("duality holds exactly on the manifold, for every filling") {
  for (int length = 2; length <= 5; ++length) {
    for (int n = 1; n <= length; ++n) {
      const auto p = solve_manifold(std::sqrt(2.0), 1.0, 0.35, {n, 1});
      const Rates rates = rates_from_parametrization(p);
      const auto on = verify_reverse_duality(rates, Lattice(1, length), n);
      CHECK(on.residual_duality < 1e-12);
      CHECK(on.residual_intertwine < 1e-12);

      auto pp = p;
      pp.omega_plus += 0.1;
      const auto off = verify_reverse_duality(rates_from_parametrization(pp),
                                              Lattice(1, length), n);
      CHECK(off.residual_intertwine > 1e-4);
    }
  }
}

TEST_CASE("boundary eigenpairs") {
  const Rates rates = demo_rates();
  const auto left = boundary_eigen(rates, BoundarySide::kLeft);
  const auto right = boundary_eigen(rates, BoundarySide::kRight);

  // on the parametrization the left fugacity is z_- and the right is z_+
  CHECK(left.z == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(right.z == doctest::Approx(1.0).epsilon(1e-13));

  // eigenvalues match the shock-rate offsets d_1^l - ell and d_1^r - r
  const ShockProfile profile = profile_from_boundary(rates, 1);
  const auto sr = shock_rates(profile, rates)[0];
  CHECK(left.eps == doctest::Approx(sr.d_left - rates.ell).epsilon(1e-12));
  CHECK(right.eps == doctest::Approx(sr.d_right - rates.r).epsilon(1e-12));

  // both closed forms of the eigenvalue agree for generic rates
  std::mt19937_64 gen(61);
  std::uniform_real_distribution<double> unif(0.1, 3.0);
  for (int rep = 0; rep < 100; ++rep) {
    Rates random{unif(gen), unif(gen), unif(gen),
                 unif(gen), unif(gen), unif(gen)};
    if (random.r == random.ell) continue;
    const auto be = boundary_eigen(random, BoundarySide::kLeft);
    CHECK(be.eps ==
          doctest::Approx((random.r - random.ell) * be.z / (1.0 + be.z))
              .epsilon(1e-11));
  }
}

TEST_CASE("projection coefficients") {
  const Rates rates{2.0, 1.0, 0.6, 0.9, 0.4, 0.3};

  SUBCASE("parallel vectors are rejected") {
    CHECK_THROWS_AS(projection_coefficients({0.5, 0.5}, {0.2, 0.2}, rates),
                    std::invalid_argument);
  }

  SUBCASE("determinant identity at fugacity ratio q^2") {
    const TwoVector a{0.7, 0.3};
    const double zb = 2.0 * (0.3 / 0.7);  // q^2 z(a)
    const TwoVector b{1.0 / (1.0 + zb), zb / (1.0 + zb)};
    const auto pc = projection_coefficients(a, b, rates);
    CHECK(pc.delta == doctest::Approx((rates.r - rates.ell) * a.c0 * b.c1 /
                                      rates.r)
                          .epsilon(1e-13));
    CHECK(pc.delta == doctest::Approx((rates.r - rates.ell) * a.c1 * b.c0 /
                                      rates.ell)
                          .epsilon(1e-13));
  }

  SUBCASE("demo value reproduces the left shock rate") {
    const auto pc = projection_coefficients({2.0 / 3.0, 1.0 / 3.0},
                                            {0.5, 0.5}, rates);
    CHECK(pc.delta == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(pc.d == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  }
}

TEST_CASE("projection lemma residuals") {
  const Rates rates{2.0, 1.0, 0.6, 0.9, 0.4, 0.3};
  const TwoVector a{2.0 / 3.0, 1.0 / 3.0};   // density 1/3
  const TwoVector a_good{0.5, 0.5};          // fugacity q^2 z(a)
  const TwoVector b{0.8, 0.9};               // arbitrary non-parallel

  SUBCASE("all three identities hold at stability") {
    const auto res = verify_projection_lemma(a, a_good, b, rates);
    CHECK(res.res_a < 1e-12);
    CHECK(res.res_b < 1e-12);
    CHECK(res.res_c < 1e-12);
  }

  SUBCASE("violating the fugacity ratio breaks every identity") {
    const TwoVector a_bad{0.4, 0.6};  // z = 1.5 z(a) * 2 != q^2 z(a)
    const auto res = verify_projection_lemma(a, a_bad, b, rates);
    CHECK(res.res_a > 1e-3);
    CHECK(res.res_b > 1e-3);
    CHECK(res.res_c > 1e-3);
  }

  SUBCASE("case C with coinciding auxiliary vectors") {
    const TwoVector c{0.35, 0.65};
    const auto res =
        verify_projection_lemma(a, a_good, b, rates, std::nullopt, c, c);
    CHECK(res.res_c < 1e-12);
  }

  SUBCASE("random draws stay exact over the admissible family") {
    std::mt19937_64 gen(67);
    std::uniform_real_distribution<double> unif(0.1, 0.9);
    std::uniform_real_distribution<double> rate_draw(0.2, 2.5);
    for (int rep = 0; rep < 100; ++rep) {
      const double r = rate_draw(gen);
      double ell = rate_draw(gen);
      if (r == ell) ell *= 1.5;
      const Rates rnd{r, ell, rate_draw(gen), rate_draw(gen),
                      rate_draw(gen), rate_draw(gen)};
      const double rho = unif(gen);
      const TwoVector av{1.0 - rho, rho};
      const double zt = (r / ell) * fugacity(rho);
      const TwoVector at{1.0 / (1.0 + zt), zt / (1.0 + zt)};
      const TwoVector bv{unif(gen), unif(gen)};
      const auto res = verify_projection_lemma(av, at, bv, rnd);
      CHECK(res.max() < 1e-12);
    }
  }
}

TEST_CASE("invariant measure from the weighted combination") {
  const Rates rates = demo_rates();

  SUBCASE("two-site weights are the geometric law") {
    const auto inv = invariant_measure(rates, Lattice(1, 2), 1);
    CHECK(inv.weights[0] == doctest::Approx(8.0 / 17.0).epsilon(1e-13));
    CHECK(inv.weights[1] == doctest::Approx(9.0 / 17.0).epsilon(1e-13));
    CHECK(inv.stationarity_residual < 1e-12);
  }

  SUBCASE("weights equal the long-time walk propagator") {
    const Lattice lat(1, 5);
    const auto inv = invariant_measure(rates, lat, 1);
    const auto sr = shock_rates(profile_from_boundary(rates, 1), rates)[0];
    for (int y = 1; y <= 5; ++y) {
      CHECK(inv.weights[y - 1] ==
            doctest::Approx(rw_propagator(3, y, 1e4, sr, lat))
                .epsilon(1e-12));
    }
  }

  SUBCASE("equals the long-horizon limit of the evolution combination") {
    // the slowest walk mode relaxes at eps_1 >= w(2 - 2cos(pi/L)), so
    // the 1e-8 agreement needs ~80/w at L = 6 (50/w leaves ~2e-7)
    for (int length : {3, 6}) {
      const Lattice lat(1, length);
      const auto inv = invariant_measure(rates, lat, 1);
      const auto ec = evolve_and_compare(rates, lat, 1, {1},
                                         80.0 / rates.w(), 1e-10);
      CHECK(total_variation(inv.mu, ec.combination) < 1e-8);
    }
  }

  SUBCASE("matches the null-space oracle up to eight sites") {
    for (int length = 2; length <= 8; ++length) {
      for (int n : {1, 2, 3}) {
        if (n > length) continue;
        const auto p = solve_manifold(std::sqrt(2.0), 1.0, 0.3, {n, 1});
        const Rates r = rates_from_parametrization(p);
        const Lattice lat(1, length);
        const auto inv = invariant_measure(r, lat, n);
        CHECK(inv.stationarity_residual < 1e-10);
        const auto oracle = stationary_from_nullspace(build_w(r, lat));
        CHECK(total_variation(inv.mu, oracle) < 1e-10);
      }
    }
  }
}

TEST_CASE("measure evolution equals the dual convex combination") {
  const Rates rates = demo_rates();

  SUBCASE("zero horizon is exact") {
    const auto ec = evolve_and_compare(rates, Lattice(1, 4), 1, {2}, 0.0);
    CHECK(ec.error == 0.0);
  }

  SUBCASE("single shock, four sites") {
    const auto ec =
        evolve_and_compare(rates, Lattice(1, 4), 1, {2}, 1.0, 1e-10);
    CHECK(ec.error < 1e-8);
  }

  SUBCASE("closed-form walk route agrees") {
    const auto ec = evolve_and_compare(rates, Lattice(1, 4), 1, {2}, 1.0,
                                       1e-12, true);
    CHECK(ec.error < 1e-8);
    CHECK_THROWS_AS(evolve_and_compare(rates, Lattice(1, 4), 2, {1, 2}, 0.5,
                                       1e-12, true),
                    std::invalid_argument);
  }

  SUBCASE("two shocks, five sites") {
    const auto p = solve_manifold(std::sqrt(2.0), std::sqrt(2.0),
                                  1.0 / 3.0, {2, 1});
    const auto ec = evolve_and_compare(rates_from_parametrization(p),
                                       Lattice(1, 5), 2, {1, 3}, 0.5, 1e-10);
    CHECK(ec.error < 1e-8);
  }

  SUBCASE("error tracks the exponential tolerance budget") {
    const Lattice lat(1, 4);
    const auto reference =
        evolve_and_compare(rates, lat, 1, {2}, 1.5, 1e-13);
    double previous = 1e300;
    for (double tol : {1e-3, 1e-6, 1e-9}) {
      const auto ec = evolve_and_compare(rates, lat, 1, {2}, 1.5, tol);
      double drift = 0.0;
      for (std::size_t i = 0; i < ec.evolved.size(); ++i) {
        drift += std::abs(ec.evolved[i] - reference.evolved[i]);
      }
      CHECK(drift <= tol);
      CHECK(drift <= previous + 1e-15);
      previous = drift;
    }
  }
}

TEST_CASE("walk spectrum is contained in the ASEP spectrum") {
  const Rates rates = demo_rates();

  SUBCASE("two sites: 17/6 appears in spec(H)") {
    const auto sc = spectrum_containment(rates, Lattice(1, 2));
    CHECK(sc.eps[1] == doctest::Approx(17.0 / 6.0).epsilon(1e-14));
    CHECK(sc.max_gap < 1e-10);
  }

  SUBCASE("the zero mode always matches") {
    const auto sc = spectrum_containment(rates, Lattice(1, 5));
    CHECK(sc.distance[0] < 1e-10);
    CHECK(sc.max_gap < 1e-8);
  }

  SUBCASE("off the manifold the containment generically fails") {
    const auto sc = spectrum_containment(perturbed_rates(0.4),
                                         Lattice(1, 4));
    // reported, not asserted: at least the report is well-formed
    CHECK(sc.eps.size() == 4);
    CHECK(sc.distance.size() == 4);
    CHECK(sc.max_gap >= 0.0);
  }
}

TEST_CASE("duality residual vanishes exactly on the manifold (iff sweep)") {
  std::mt19937_64 gen(71);
  for (int length = 2; length <= 5; ++length) {
    for (int n = 1; n <= length; ++n) {
      const auto p = solve_manifold(std::sqrt(2.0), 1.0, 0.33, {n, 1});
      const auto on = verify_reverse_duality(rates_from_parametrization(p),
                                             Lattice(1, length), n, 1e-10);
      CHECK(on.on_manifold);
      CHECK((on.residual_duality < 1e-10) == on.on_manifold);

      auto pp = p;
      pp.omega_plus += 0.1;
      const auto off = verify_reverse_duality(rates_from_parametrization(pp),
                                              Lattice(1, length), n, 1e-10);
      CHECK(!off.on_manifold);
      CHECK(off.residual_intertwine >= 1e-10);

      // intertwining follows from duality whenever duality holds
      if (on.residual_duality < 1e-12) {
        CHECK(on.residual_intertwine < 1e-12);
      }
    }
  }
}
