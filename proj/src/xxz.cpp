#include "shocklab/xxz.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "shocklab/asep.hpp"
#include "shocklab/common.hpp"

namespace shocklab {

XXZParams xxz_from_rates(const Rates& rates, const Lattice& lat) {
  rates.validate();
  XXZParams p{};
  p.theta = std::log(rates.q());
  p.w = rates.w();
  p.psi_minus = 0.5 * std::log(kappa(rates.alpha, rates.gamma, rates).plus);
  p.phi_minus = p.psi_minus + 0.5 * std::log(rates.alpha / rates.gamma);
  p.psi_plus = 0.5 * std::log(kappa(rates.beta, rates.delta, rates).plus);
  p.phi_plus = p.psi_plus + 0.5 * std::log(rates.beta / rates.delta);
  p.theta_minus = p.psi_minus - p.phi_minus + p.theta * lat.l_minus;
  p.theta_plus = p.phi_plus - p.psi_plus + p.theta * lat.l_plus;
  p.e0 = (lat.length() - 1) * std::cosh(p.theta) +
         (rates.alpha + rates.beta + rates.gamma + rates.delta) / p.w;
  return p;
}

Rates rates_from_xxz(const XXZParams& p) {
  const double front = 0.5 * p.w * std::sinh(p.theta);
  const double left = front / (std::sinh(p.phi_minus) * std::cosh(p.psi_minus));
  const double right = front / (std::sinh(p.phi_plus) * std::cosh(p.psi_plus));
  Rates rates{p.w * std::exp(p.theta),
              p.w * std::exp(-p.theta),
              left * std::exp(p.phi_minus - p.psi_minus),
              right * std::exp(p.phi_plus - p.psi_plus),
              left * std::exp(p.psi_minus - p.phi_minus),
              right * std::exp(p.psi_plus - p.phi_plus)};
  rates.validate();
  return rates;
}

namespace {

using Dense = std::vector<std::vector<double>>;

void add_site_block(Dense& h, const std::array<std::array<double, 2>, 2>& b,
                    int site, const Lattice& lat) {
  std::vector<Triplet> trip;
  embed_site(trip, b, site, lat);
  for (const Triplet& t : trip) h[t.row][t.col] += t.value;
}

void add_bond_block(Dense& h, const std::array<std::array<double, 4>, 4>& b,
                    int bond, const Lattice& lat) {
  std::vector<Triplet> trip;
  embed_bond(trip, b, bond, lat);
  for (const Triplet& t : trip) h[t.row][t.col] += t.value;
}

}  // namespace

std::vector<std::vector<double>> build_h_xxz(const XXZParams& p,
                                             const Lattice& lat) {
  if (lat.length() > max_sites()) {
    throw ResourceLimitError("XXZ Hamiltonian capped at 2^" +
                             std::to_string(max_sites()) + " states");
  }
  const std::size_t dim = lat.num_configs();
  Dense h(dim, std::vector<double>(dim, 0.0));
  const double half_w = 0.5 * p.w;
  const double ch = std::cosh(p.theta);

  // -(w/2) [sx sx + sy sy + cosh(theta) sz sz] per bond; sx sx + sy sy
  // has the two hopping entries 2 in the middle block
  const std::array<std::array<double, 4>, 4> bond = {{
      {-half_w * ch, 0, 0, 0},
      {0, half_w * ch, -2.0 * half_w, 0},
      {0, -2.0 * half_w, half_w * ch, 0},
      {0, 0, 0, -half_w * ch},
  }};
  for (int k = lat.l_minus; k < lat.l_plus; ++k) {
    add_bond_block(h, bond, k, lat);
  }
  // +(w/2) E_0 on the diagonal
  for (std::size_t i = 0; i < dim; ++i) h[i][i] += half_w * p.e0;

  const double s_minus =
      std::sinh(p.theta) / (std::sinh(p.phi_minus) * std::cosh(p.psi_minus));
  const double s_plus =
      std::sinh(p.theta) / (std::sinh(p.phi_plus) * std::cosh(p.psi_plus));
  const double zm = std::sinh(p.psi_minus) * std::cosh(p.phi_minus);
  const double zp = std::sinh(p.psi_plus) * std::cosh(p.phi_plus);
  const std::array<std::array<double, 2>, 2> left = {{
      {-half_w * s_minus * zm, -half_w * s_minus * std::exp(p.theta_minus)},
      {-half_w * s_minus * std::exp(-p.theta_minus), half_w * s_minus * zm},
  }};
  const std::array<std::array<double, 2>, 2> right = {{
      {half_w * s_plus * zp, -half_w * s_plus * std::exp(p.theta_plus)},
      {-half_w * s_plus * std::exp(-p.theta_plus), -half_w * s_plus * zp},
  }};
  add_site_block(h, left, lat.l_minus, lat);
  add_site_block(h, right, lat.l_plus, lat);
  return h;
}

double xxz_residual(const Rates& rates, const Lattice& lat) {
  const XXZParams p = xxz_from_rates(rates, lat);
  const Dense target = build_h_xxz(p, lat);
  const Dense h = build_h(rates, lat).to_dense();
  const std::size_t dim = h.size();
  const int length = lat.length();
  const double q = rates.q();

  // gauge weights q^{sum_k k eta_k} over all sites
  std::vector<double> gauge(dim, 1.0);
  for (std::size_t cfg = 0; cfg < dim; ++cfg) {
    double expo = 0.0;
    for (int off = 0; off < length; ++off) {
      if (occupation_bits(static_cast<std::uint32_t>(cfg), length, off)) {
        expo += lat.l_minus + off;
      }
    }
    gauge[cfg] = std::pow(q, expo);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double transformed = h[i][j] * gauge[j] / gauge[i];
      worst = std::max(worst, std::abs(transformed - target[i][j]));
    }
  }
  return worst;
}

double xxz_integrability_residual(const XXZParams& p, const Lattice& lat,
                                  int n_shocks) {
  if (n_shocks < 1) throw std::invalid_argument("need at least one shock");
  const double lhs = p.phi_minus + p.psi_minus + p.phi_plus + p.psi_plus;
  const double rhs = p.theta_plus - p.theta_minus +
                     (2.0 * n_shocks - lat.length() + 1.0) * p.theta;
  return std::abs(lhs - rhs);
}

}  // namespace shocklab
