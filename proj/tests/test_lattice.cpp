#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "shocklab/lattice.hpp"

using namespace shocklab;

namespace {

// Independent oracle for the bit order: build the tensor product of unit
// two-vectors selected by the occupations and locate the single 1.
std::size_t kron_position(const std::vector<int>& occupations) {
  std::vector<TwoVector> factors;
  for (int n : occupations) {
    factors.push_back(n ? TwoVector{0.0, 1.0} : TwoVector{1.0, 0.0});
  }
  const std::vector<double> v = kron_vector(factors);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 1.0) return i;
  }
  FAIL("no unit entry found");
  return 0;
}

}  // namespace

TEST_CASE("lattice basics") {
  const Lattice lat(-1, 2);
  CHECK(lat.length() == 4);
  CHECK(lat.num_configs() == 16);
  CHECK(lat.contains(-1));
  CHECK(lat.contains(2));
  CHECK(!lat.contains(3));
  CHECK_THROWS_AS(Lattice(3, 3), std::invalid_argument);
}

TEST_CASE("configuration indexing matches the tensor-product order") {
  CHECK(config_index(Configuration{0, 3}) == 0);
  CHECK(config_index(Configuration{7, 3}) == 7);

  // only the leftmost site occupied -> MSB -> index 4 for L = 3
  CHECK(kron_position({1, 0, 0}) == 4);
  CHECK(kron_position({0, 0, 1}) == 1);
  CHECK(kron_position({1, 1, 1}) == 7);

  const Lattice lat(1, 3);
  for (std::size_t i = 0; i < 8; ++i) {
    const Configuration c = index_config(i, 3);
    CHECK(config_index(c) == i);
    std::vector<int> occ;
    for (int k = lat.l_minus; k <= lat.l_plus; ++k) {
      occ.push_back(occupation(c, lat, k));
    }
    CHECK(kron_position(occ) == i);
  }
  CHECK_THROWS_AS(index_config(8, 3), std::invalid_argument);
}

TEST_CASE("kron_vector examples") {
  const auto vacuum = kron_vector({{1, 0}, {1, 0}});
  REQUIRE(vacuum.size() == 4);
  CHECK(vacuum[0] == 1.0);
  CHECK(vacuum[1] == 0.0);
  CHECK(vacuum[2] == 0.0);
  CHECK(vacuum[3] == 0.0);

  const auto uniform = kron_vector({{0.5, 0.5}, {0.5, 0.5}});
  for (double x : uniform) CHECK(x == doctest::Approx(0.25).epsilon(1e-15));

  const auto mixed =
      kron_vector({{2.0 / 3.0, 1.0 / 3.0}, {0.5, 0.5}});
  CHECK(mixed[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(mixed[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(mixed[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(mixed[3] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

  CHECK_THROWS_AS(kron_vector({}), std::invalid_argument);
}

TEST_CASE("kron_vector of density vectors is a probability vector") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    const int length = 1 + static_cast<int>(gen() % 10);
    std::vector<TwoVector> factors;
    for (int i = 0; i < length; ++i) {
      factors.push_back(density_vector(unif(gen)));
    }
    const std::vector<double> v = kron_vector(factors);
    double sum = 0.0;
    for (double x : v) {
      CHECK(x >= 0.0);
      sum += x;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}
