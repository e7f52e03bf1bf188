#include "shocklab/rates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace shocklab {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

double Rates::q() const { return std::sqrt(r / ell); }

double Rates::w() const { return std::sqrt(r * ell); }

void Rates::validate() const {
  std::vector<std::pair<const char*, double>> named = {
      {"r", r},         {"ell", ell},   {"alpha", alpha},
      {"beta", beta},   {"gamma", gamma}, {"delta", delta}};
  for (const auto& [name, value] : named) {
    require(std::isfinite(value) && value > 0.0,
            std::string("rate ") + name + " must be strictly positive, got " +
                std::to_string(value));
  }
  require(r != ell, "bulk rates must be asymmetric (r != ell)");
}

void BoundaryParametrization::validate() const {
  require(std::isfinite(q) && q > 0.0 && q != 1.0,
          "asymmetry q must be positive and different from 1");
  require(std::isfinite(w) && w > 0.0, "time scale w must be positive");
  require(rho_minus > 0.0 && rho_minus < 1.0,
          "rho_minus must lie strictly inside (0,1)");
  require(rho_plus > 0.0 && rho_plus < 1.0,
          "rho_plus must lie strictly inside (0,1)");
  require(omega_minus > -ell(), "omega_minus must exceed -ell");
  require(omega_plus > -ell(), "omega_plus must exceed -ell");
}

Rates rates_from_parametrization(const BoundaryParametrization& p) {
  p.validate();
  const double r = p.r();
  const double ell = p.ell();
  Rates rates{r,
              ell,
              (r + p.omega_minus) * p.rho_minus,
              (r + p.omega_plus) * (1.0 - p.rho_plus),
              (ell + p.omega_minus) * (1.0 - p.rho_minus),
              (ell + p.omega_plus) * p.rho_plus};
  rates.validate();
  return rates;
}

double fugacity(double rho) {
  if (rho < 0.0 || rho >= 1.0) {
    throw std::invalid_argument("fugacity needs rho in [0,1), got " +
                                std::to_string(rho));
  }
  return rho / (1.0 - rho);
}

double density_from_fugacity(double z) {
  if (z < 0.0) throw std::invalid_argument("fugacity must be nonnegative");
  return z / (1.0 + z);
}

void ManifoldSpec::validate() const {
  if (n_shocks < 1) {
    throw std::invalid_argument("shock count N must be at least 1");
  }
  if (m_index < 1 || m_index > n_shocks) {
    throw std::invalid_argument("manifold index M must satisfy 1 <= M <= N");
  }
}

KappaPair kappa(double x, double y, const Rates& rates) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("kappa needs x > 0, got " + std::to_string(x));
  }
  const double b = y - x + rates.r - rates.ell;
  const double s = std::sqrt(b * b + 4.0 * x * y);
  // cancellation-free branch choice; the companion root follows from
  // kappa_+ kappa_- = -y/x
  KappaPair k{};
  if (b >= 0.0) {
    k.plus = (b + s) / (2.0 * x);
    k.minus = k.plus == 0.0 ? 0.0 : -y / (x * k.plus);
  } else {
    k.minus = (b - s) / (2.0 * x);
    k.plus = k.minus == 0.0 ? 0.0 : -y / (x * k.minus);
  }
  return k;
}

ManifoldResiduals manifold_residuals(const Rates& rates,
                                     const ManifoldSpec& spec) {
  rates.validate();
  spec.validate();
  const KappaPair left = kappa(rates.alpha, rates.gamma, rates);
  const KappaPair right = kappa(rates.beta, rates.delta, rates);
  const double q2 = rates.r / rates.ell;
  return ManifoldResiduals{
      left.plus * right.plus - std::pow(q2, spec.n_shocks),
      left.minus * right.minus - std::pow(q2, -spec.m_index)};
}

bool ManifoldResiduals::on_manifold(double tol) const {
  return std::abs(res_n) < tol && std::abs(res_m) < tol;
}

BoundaryParametrization solve_manifold(double q, double w, double rho_minus,
                                       const ManifoldSpec& spec,
                                       std::optional<double> omega_minus) {
  spec.validate();
  if (!(q > 0.0) || q == 1.0) {
    throw std::invalid_argument("solve_manifold needs q > 0, q != 1");
  }
  if (!(rho_minus > 0.0 && rho_minus < 1.0)) {
    throw std::invalid_argument("rho_minus must lie strictly inside (0,1)");
  }
  const double r = q * w;
  const double ell = w / q;
  const double z_minus = fugacity(rho_minus);
  const double z_plus = std::pow(q, 2.0 * spec.n_shocks) * z_minus;
  const double rho_plus = density_from_fugacity(z_plus);

  BoundaryParametrization p{};
  p.q = q;
  p.w = w;
  p.rho_minus = rho_minus;
  p.rho_plus = rho_plus;
  const double qm = std::pow(q, spec.m_index);
  if (omega_minus.has_value()) {
    p.omega_minus = *omega_minus;
    // (r+om)(r+op) / ((ell+om)(ell+op)) = q^{2M}  =>  (r+op)/(ell+op) = c
    const double c = qm * qm * (ell + p.omega_minus) / (r + p.omega_minus);
    if (c == 1.0) {
      throw std::invalid_argument(
          "no finite omega_plus: the constraint degenerates at ratio 1");
    }
    p.omega_plus = (r - c * ell) / (c - 1.0);
  } else {
    // symmetric branch omega_- = omega_+; the negative branch
    // omega = -(r + q^M ell)/(1 + q^M) always violates omega > -ell
    p.omega_minus = p.omega_plus = (r - qm * ell) / (qm - 1.0);
  }
  Rates check;
  try {
    check = rates_from_parametrization(p);
  } catch (const std::invalid_argument& e) {
    const double rejected = -(r + qm * ell) / (1.0 + qm);
    throw std::invalid_argument(
        std::string("no positive-rate manifold solution: ") + e.what() +
        " (symmetric branch omega=" + std::to_string(p.omega_plus) +
        ", rejected branch omega=" + std::to_string(rejected) + ")");
  }
  const ManifoldResiduals res = manifold_residuals(check, spec);
  if (!res.on_manifold(1e-8)) {
    throw std::runtime_error("manifold solve failed to verify: res_N=" +
                             std::to_string(res.res_n) + " res_M=" +
                             std::to_string(res.res_m));
  }
  return p;
}

}  // namespace shocklab
