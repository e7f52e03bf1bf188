#include "shocklab/common.hpp"

#include <cstdlib>

namespace shocklab {

namespace {

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || v <= 0) return fallback;
  return static_cast<int>(v);
}

}  // namespace

int max_sites() { return env_int("SHOCKLAB_MAX_SITES", 14); }

int max_dense_dim() { return env_int("SHOCKLAB_MAX_DENSE_DIM", 4096); }

}  // namespace shocklab
