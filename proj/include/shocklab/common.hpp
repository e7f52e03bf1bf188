#ifndef SHOCKLAB_COMMON_HPP
#define SHOCKLAB_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shocklab {

// Invalid or inconsistent run configuration (CLI exit code 1).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Request exceeds a configured memory/size cap (CLI exit code 2).
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Desk-scale caps, overridable through the environment.
int max_sites();      // SHOCKLAB_MAX_SITES, default 14 (2^14 states)
int max_dense_dim();  // SHOCKLAB_MAX_DENSE_DIM, default 4096

}  // namespace shocklab

#endif
