#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "shocklab/config.hpp"
#include "shocklab/duality.hpp"

using namespace shocklab;
using nlohmann::json;

TEST_CASE("raw-rates config") {
  const json doc = {
      {"lattice", {{"l_minus", 1}, {"l_plus", 4}}},
      {"parameters",
       {{"rates",
         {{"r", 2.0}, {"ell", 1.0}, {"alpha", 0.6}, {"beta", 0.9},
          {"gamma", 0.4}, {"delta", 0.3}}}}},
      {"shocks", {{"N", 1}, {"M", 1}}},
      {"experiment", {{"kind", "verify"}, {"t", {0.5, 2.0}}, {"seed", 7}}},
  };
  const ExperimentConfig cfg = parse_config(doc);
  CHECK(cfg.lattice.length() == 4);
  CHECK(cfg.rates.r == 2.0);
  CHECK(cfg.times.size() == 2);
  CHECK(cfg.seed == 7);
  CHECK(!cfg.from_parametrization);
}

TEST_CASE("parametrization config solves missing entries onto the manifold") {
  const json doc = {
      {"lattice", {{"l_minus", 1}, {"l_plus", 4}}},
      {"parameters",
       {{"parametrization",
         {{"q", std::sqrt(2.0)}, {"w", std::sqrt(2.0)},
          {"rho_minus", 1.0 / 3.0}}}}},
      {"shocks", {{"N", 1}, {"M", 1}}},
  };
  const ExperimentConfig cfg = parse_config(doc);
  REQUIRE(cfg.parametrization.has_value());
  CHECK(cfg.parametrization->omega_minus ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(cfg.parametrization->rho_plus == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(manifold_residuals(cfg.rates, {1, 1}).on_manifold(1e-10));
}

TEST_CASE("explicit off-manifold parametrization is accepted") {
  const json doc = {
      {"lattice", {{"l_minus", 1}, {"l_plus", 3}}},
      {"parameters",
       {{"parametrization",
         {{"q", std::sqrt(2.0)}, {"w", std::sqrt(2.0)},
          {"rho_minus", 1.0 / 3.0}, {"rho_plus", 0.5},
          {"omega_minus", std::sqrt(2.0)},
          {"omega_plus", std::sqrt(2.0) + 0.1}}}}},
      {"shocks", {{"N", 1}, {"M", 1}}},
  };
  const ExperimentConfig cfg = parse_config(doc);
  CHECK(!manifold_residuals(cfg.rates, {1, 1}).on_manifold(1e-10));
}

TEST_CASE("validation failures are aggregated") {
  const json doc = {
      {"lattice", {{"l_minus", 1}, {"l_plus", 1}}},  // single site
      {"parameters",
       {{"rates",
         {{"r", 2.0}, {"ell", 1.0}, {"alpha", -0.6}, {"beta", 0.9},
          {"gamma", 0.4}, {"delta", 0.3}}}}},
      {"shocks", {{"N", 0}}},
  };
  try {
    parse_config(doc);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("lattice") != std::string::npos);
    CHECK(msg.find("alpha") != std::string::npos);
    CHECK(msg.find("N") != std::string::npos);
  }
}

TEST_CASE("exactly one parameter style") {
  const json both = {
      {"lattice", {{"l_minus", 1}, {"l_plus", 3}}},
      {"parameters",
       {{"rates",
         {{"r", 2.0}, {"ell", 1.0}, {"alpha", 0.6}, {"beta", 0.9},
          {"gamma", 0.4}, {"delta", 0.3}}},
        {"parametrization",
         {{"q", 1.2}, {"w", 1.0}, {"rho_minus", 0.3}}}}},
  };
  CHECK_THROWS_AS(parse_config(both), ConfigError);

  const json neither = {{"lattice", {{"l_minus", 1}, {"l_plus", 3}}}};
  CHECK_THROWS_AS(parse_config(neither), ConfigError);
}

TEST_CASE("position list is validated against N and the lattice") {
  json doc = {
      {"lattice", {{"l_minus", 1}, {"l_plus", 4}}},
      {"parameters",
       {{"parametrization",
         {{"q", 1.3}, {"w", 1.0}, {"rho_minus", 0.3}}}}},
      {"shocks", {{"N", 2}, {"M", 1}, {"positions", {1, 3}}}},
  };
  CHECK_NOTHROW(parse_config(doc));
  doc["shocks"]["positions"] = {3, 1};
  CHECK_THROWS_AS(parse_config(doc), ConfigError);
  doc["shocks"]["positions"] = {1, 2, 3};
  CHECK_THROWS_AS(parse_config(doc), ConfigError);
}

TEST_CASE("resolved parameters reproduce the run bit for bit") {
  const json doc = {
      {"lattice", {{"l_minus", 1}, {"l_plus", 4}}},
      {"parameters",
       {{"parametrization",
         {{"q", std::sqrt(2.0)}, {"w", std::sqrt(2.0)},
          {"rho_minus", 1.0 / 3.0}}}}},
      {"shocks", {{"N", 1}, {"M", 1}}},
  };
  const ExperimentConfig cfg = parse_config(doc);
  const auto report1 =
      verify_reverse_duality(cfg.rates, cfg.lattice, cfg.n_shocks);

  // round trip through the emitted resolved-parameter document
  const json resolved = resolved_parameters(cfg);
  const json doc2 = {
      {"lattice", resolved["lattice"]},
      {"parameters", {{"rates", resolved["rates"]}}},
      {"shocks", {{"N", 1}, {"M", 1}}},
  };
  const json reparsed = json::parse(doc2.dump());
  const ExperimentConfig cfg2 = parse_config(reparsed);
  CHECK(cfg2.rates.alpha == cfg.rates.alpha);
  CHECK(cfg2.rates.beta == cfg.rates.beta);
  CHECK(cfg2.rates.gamma == cfg.rates.gamma);
  CHECK(cfg2.rates.delta == cfg.rates.delta);
  const auto report2 =
      verify_reverse_duality(cfg2.rates, cfg2.lattice, cfg2.n_shocks);
  CHECK(report1.residual_duality == report2.residual_duality);
  CHECK(report1.residual_intertwine == report2.residual_intertwine);
}
