#include "shocklab/shock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace shocklab {

void ShockProfile::validate() const {
  if (shock.empty() || bulk.size() != shock.size() + 1) {
    throw std::invalid_argument(
        "shock profile needs N >= 1 shock densities and N+1 bulk densities");
  }
  for (double rho : bulk) {
    if (!(rho > 0.0 && rho < 1.0)) {
      throw std::invalid_argument("bulk density " + std::to_string(rho) +
                                  " outside (0,1)");
    }
  }
  for (double rho : shock) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
      throw std::invalid_argument("shock density " + std::to_string(rho) +
                                  " outside [0,1]");
    }
  }
}

double ShockProfile::stability_residual(double q) const {
  double worst = 0.0;
  for (std::size_t i = 1; i < bulk.size(); ++i) {
    const double ratio = fugacity(bulk[i]) / fugacity(bulk[i - 1]);
    worst = std::max(worst, std::abs(ratio - q * q));
  }
  return worst;
}

std::vector<double> densities_from_stability(double rho0, int n_shocks,
                                             double q) {
  if (!(rho0 > 0.0 && rho0 < 1.0)) {
    throw std::invalid_argument("rho0 must lie strictly inside (0,1)");
  }
  if (q == 1.0 || !(q > 0.0)) {
    throw std::invalid_argument("stability recursion needs q > 0, q != 1");
  }
  if (n_shocks < 1) throw std::invalid_argument("need at least one shock");
  std::vector<double> rho(n_shocks + 1);
  const double z0 = fugacity(rho0);
  for (int i = 0; i <= n_shocks; ++i) {
    rho[i] = density_from_fugacity(std::pow(q, 2.0 * i) * z0);
  }
  return rho;
}

std::vector<double> shock_densities_from_boundary(const Rates& rates,
                                                  int n_shocks) {
  if (n_shocks < 1) throw std::invalid_argument("need at least one shock");
  if (!(rates.alpha > 0.0 && rates.gamma > 0.0)) {
    throw std::invalid_argument("boundary rates alpha, gamma must be positive");
  }
  const double q2 = rates.r / rates.ell;
  std::vector<double> rho(n_shocks);
  double z = rates.alpha / rates.gamma;
  for (int i = 0; i < n_shocks; ++i) {
    rho[i] = density_from_fugacity(z);
    z *= q2;
  }
  return rho;
}

ShockProfile profile_from_boundary(const Rates& rates, int n_shocks) {
  rates.validate();
  const double z0 = 1.0 / kappa(rates.alpha, rates.gamma, rates).plus;
  ShockProfile profile;
  profile.bulk =
      densities_from_stability(density_from_fugacity(z0), n_shocks, rates.q());
  profile.shock = shock_densities_from_boundary(rates, n_shocks);
  profile.validate();
  return profile;
}

double ShockHopRates::asymmetry() const { return std::sqrt(d_right / d_left); }

double bernoulli_current(double rho, const Rates& rates) {
  return (rates.r - rates.ell) * rho * (1.0 - rho);
}

std::vector<ShockHopRates> shock_rates(const ShockProfile& profile,
                                       const Rates& rates) {
  profile.validate();
  rates.validate();
  const double stability = profile.stability_residual(rates.q());
  if (stability > 1e-8) {
    throw std::invalid_argument(
        "profile violates the microscopic stability condition by " +
        std::to_string(stability));
  }
  std::vector<ShockHopRates> out(profile.n_shocks());
  for (int i = 1; i <= profile.n_shocks(); ++i) {
    const double lo = profile.bulk[i - 1];
    const double hi = profile.bulk[i];
    const double gap = hi - lo;
    if (gap == 0.0) {
      throw std::invalid_argument("degenerate plateau pair at shock " +
                                  std::to_string(i));
    }
    ShockHopRates sr{bernoulli_current(lo, rates) / gap,
                     bernoulli_current(hi, rates) / gap};
    // equivalent closed forms; exact on stable profiles
    const double d_left_alt = rates.ell * (1.0 - lo) + rates.r * lo;
    const double d_right_alt = rates.r * (1.0 - hi) + rates.ell * hi;
    if (std::abs(sr.d_left - d_left_alt) > 1e-12 * std::max(1.0, sr.d_left) ||
        std::abs(sr.d_right - d_right_alt) >
            1e-12 * std::max(1.0, sr.d_right) ||
        std::abs(sr.d_left * sr.d_right - rates.r * rates.ell) >
            1e-12 * rates.r * rates.ell) {
      throw std::runtime_error("shock rate identities violated at shock " +
                               std::to_string(i));
    }
    out[i - 1] = sr;
  }
  return out;
}

}  // namespace shocklab
