#ifndef SHOCKLAB_CONFIG_HPP
#define SHOCKLAB_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "shocklab/dual_process.hpp"
#include "shocklab/lattice.hpp"
#include "shocklab/rates.hpp"

namespace shocklab {

// One experiment description, deserialized from a JSON document.  The
// parameters are given either as the six raw rates or through the
// boundary parametrization; with the parametrization, omitted rho_plus /
// omega entries are solved onto the B_N^M manifold of the shocks block.
struct ExperimentConfig {
  Lattice lattice;
  Rates rates{};
  bool from_parametrization = false;
  std::optional<BoundaryParametrization> parametrization;

  int n_shocks = 1;
  int m_index = 1;
  std::optional<ShockPositions> positions;

  std::string kind;               // experiment kind (subcommand may override)
  std::vector<double> times;      // horizons, in units of 1/w
  double tolerance = 1e-10;       // identity tolerance
  double expm_tol = 1e-12;        // uniformization budget
  std::size_t n_traj = 100000;
  std::uint64_t seed = 1;

  std::string out_dir = "out";
  std::vector<std::string> formats = {"json", "csv"};
};

// Parses and validates; aggregates all validation failures into a single
// ConfigError message.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::string& path);

// Fully resolved parameter echo for reports (config round-trip).
nlohmann::json resolved_parameters(const ExperimentConfig& cfg);

}  // namespace shocklab

#endif
