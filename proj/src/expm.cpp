#include "shocklab/expm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace shocklab {

namespace {

// One uniformization sweep over horizon tau with error budget tol.
std::vector<double> expm_segment(const SparseMatrix& g,
                                 std::vector<double> v, double tau,
                                 double tol, bool transpose,
                                 double lambda) {
  const double a = lambda * tau;
  std::vector<double> result(v.size(), 0.0);
  double weight = std::exp(-a);  // Poisson(0)
  double cumulative = weight;
  for (std::size_t i = 0; i < v.size(); ++i) result[i] = weight * v[i];

  const std::size_t max_terms =
      200 + static_cast<std::size_t>(2.0 * a + 60.0 * std::sqrt(a + 1.0));
  std::size_t n = 0;
  while (1.0 - cumulative > tol) {
    if (++n > max_terms) {
      throw std::runtime_error("uniformization failed to converge after " +
                               std::to_string(max_terms) + " terms");
    }
    // v <- P v with P = I + G/lambda
    const std::vector<double> gv = transpose ? g.apply_transpose(v)
                                             : g.apply(v);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += gv[i] / lambda;
    weight *= a / static_cast<double>(n);
    cumulative += weight;
    for (std::size_t i = 0; i < v.size(); ++i) result[i] += weight * v[i];
  }
  return result;
}

}  // namespace

std::vector<double> expm_action(const SparseMatrix& generator,
                                const std::vector<double>& v, double t,
                                double tol, bool transpose) {
  if (t < 0.0) throw std::invalid_argument("negative time in expm_action");
  if (!(tol > 0.0)) throw std::invalid_argument("expm_action needs tol > 0");
  if (v.size() != generator.dim()) {
    throw std::invalid_argument("expm_action dimension mismatch");
  }
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("non-finite entry in expm_action input");
    }
  }
  const double lambda = generator.max_abs_diagonal();
  if (t == 0.0 || lambda == 0.0) return v;

  // Keep the Poisson weights representable: split horizons with
  // lambda*t beyond ~500 into equal segments.
  const int segments =
      std::max(1, static_cast<int>(std::ceil(lambda * t / 500.0)));
  const double tau = t / segments;
  const double seg_tol = tol / segments;
  std::vector<double> state = v;
  for (int s = 0; s < segments; ++s) {
    state = expm_segment(generator, std::move(state), tau, seg_tol,
                         transpose, lambda);
  }
  return state;
}

}  // namespace shocklab
