#include "shocklab/duality.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "shocklab/asep.hpp"
#include "shocklab/dense.hpp"
#include "shocklab/expm.hpp"
#include "shocklab/propagator.hpp"

namespace shocklab {

namespace {

using Matrix = std::vector<std::vector<double>>;

double max_abs_difference(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      m = std::max(m, std::abs(a[i][j] - b[i][j]));
    }
  }
  return m;
}

// rows_out[x] = sum_z Q_{z,x} rows[z]  (left action of Q^T)
Matrix q_transpose_times(const SparseMatrix& q, const Matrix& rows) {
  Matrix out(rows.size(), std::vector<double>(rows[0].size(), 0.0));
  const auto& rp = q.row_ptr();
  const auto& cols = q.cols();
  const auto& vals = q.values();
  for (std::size_t z = 0; z < q.dim(); ++z) {
    for (std::size_t k = rp[z]; k < rp[z + 1]; ++k) {
      const std::size_t x = cols[k];
      const double v = vals[k];
      for (std::size_t j = 0; j < rows[z].size(); ++j) {
        out[x][j] += v * rows[z][j];
      }
    }
  }
  return out;
}

// rows_out[x] = sum_z Q_{x,z} rows[z]
Matrix q_times(const SparseMatrix& q, const Matrix& rows) {
  Matrix out(rows.size(), std::vector<double>(rows[0].size(), 0.0));
  const auto& rp = q.row_ptr();
  const auto& cols = q.cols();
  const auto& vals = q.values();
  for (std::size_t x = 0; x < q.dim(); ++x) {
    for (std::size_t k = rp[x]; k < rp[x + 1]; ++k) {
      const std::size_t z = cols[k];
      const double v = vals[k];
      for (std::size_t j = 0; j < rows[z].size(); ++j) {
        out[x][j] += v * rows[z][j];
      }
    }
  }
  return out;
}

// rows_out[x] = rows[x] W
Matrix rows_times_w(const Matrix& rows, const SparseMatrix& w) {
  Matrix out(rows.size());
  for (std::size_t x = 0; x < rows.size(); ++x) {
    out[x] = w.apply_transpose(rows[x]);
  }
  return out;
}

}  // namespace

DualityReport verify_reverse_duality(const Rates& rates, const Lattice& lat,
                                     int n_shocks, double tol) {
  if (n_shocks < 1 || n_shocks > lat.length()) {
    throw std::invalid_argument("need 1 <= N <= L for reverse duality");
  }
  const ShockProfile profile = profile_from_boundary(rates, n_shocks);
  const std::vector<ShockHopRates> sr = shock_rates(profile, rates);
  const SparseMatrix w = build_w(rates, lat);
  const SparseMatrix q = build_q(sr, lat);
  const DualityMatrices dm = build_duality_matrices(profile, rates, lat);

  DualityReport report;
  report.residual_duality =
      max_abs_difference(rows_times_w(dm.r, w), q_transpose_times(q, dm.r));
  report.residual_intertwine =
      max_abs_difference(rows_times_w(dm.s, w), q_times(q, dm.s));
  report.manifold = manifold_residuals(rates, ManifoldSpec{n_shocks, 1});
  report.on_manifold = report.manifold.on_manifold(tol);
  report.tolerance = tol;
  report.rates = rates;
  report.l_minus = lat.l_minus;
  report.l_plus = lat.l_plus;
  report.n_shocks = n_shocks;
  return report;
}

EvolutionComparison evolve_and_compare(const Rates& rates, const Lattice& lat,
                                       int n_shocks,
                                       const ShockPositions& x0, double t,
                                       double expm_tol, bool use_closed_form) {
  const ShockProfile profile = profile_from_boundary(rates, n_shocks);
  const std::vector<ShockHopRates> sr = shock_rates(profile, rates);
  const SubsetIndex idx(lat.length(), n_shocks);

  const SparseMatrix w = build_w(rates, lat);
  EvolutionComparison out;
  out.evolved = expm_action(w, shock_measure_vector(profile, x0, lat), t,
                            expm_tol, /*transpose=*/true);

  std::vector<double> p(idx.count());
  if (use_closed_form) {
    if (n_shocks != 1) {
      throw std::invalid_argument(
          "closed-form propagator applies to a single shock");
    }
    for (std::size_t y = 0; y < idx.count(); ++y) {
      p[y] = rw_propagator(x0.at(0), idx.unrank(y, lat).at(0), t, sr[0], lat);
    }
  } else {
    const SparseMatrix q = build_q(sr, lat);
    std::vector<double> e(idx.count(), 0.0);
    e[idx.rank(x0, lat)] = 1.0;
    p = expm_action(q, e, t, expm_tol, /*transpose=*/true);
  }

  out.combination.assign(lat.num_configs(), 0.0);
  for (std::size_t y = 0; y < idx.count(); ++y) {
    const std::vector<double> mu_y =
        shock_measure_vector(profile, idx.unrank(y, lat), lat);
    for (std::size_t j = 0; j < mu_y.size(); ++j) {
      out.combination[j] += p[y] * mu_y[j];
    }
  }
  out.error = 0.0;
  for (std::size_t j = 0; j < out.evolved.size(); ++j) {
    out.error = std::max(out.error,
                         std::abs(out.evolved[j] - out.combination[j]));
  }
  return out;
}

InvariantMeasure invariant_measure(const Rates& rates, const Lattice& lat,
                                   int n_shocks) {
  const ShockProfile profile = profile_from_boundary(rates, n_shocks);
  const std::vector<ShockHopRates> sr = shock_rates(profile, rates);
  const SubsetIndex idx(lat.length(), n_shocks);

  InvariantMeasure inv;
  inv.weights = normalized_weights(reversible_weights(sr, lat, n_shocks),
                                   WeightNorm::kSum);
  inv.mu.assign(lat.num_configs(), 0.0);
  for (std::size_t y = 0; y < idx.count(); ++y) {
    const std::vector<double> mu_y =
        shock_measure_vector(profile, idx.unrank(y, lat), lat);
    for (std::size_t j = 0; j < mu_y.size(); ++j) {
      inv.mu[j] += inv.weights[y] * mu_y[j];
    }
  }
  const SparseMatrix w = build_w(rates, lat);
  const std::vector<double> wt_mu = w.apply_transpose(inv.mu);
  inv.stationarity_residual = 0.0;
  for (double v : wt_mu) {
    inv.stationarity_residual = std::max(inv.stationarity_residual,
                                         std::abs(v));
  }
  return inv;
}

double total_variation(const std::vector<double>& a,
                       const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("total variation needs equal lengths");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return 0.5 * s;
}

BoundaryEigen boundary_eigen(const Rates& rates, BoundarySide side) {
  rates.validate();
  BoundaryEigen be{};
  double block[2][2];
  if (side == BoundarySide::kLeft) {
    be.z = 1.0 / kappa(rates.alpha, rates.gamma, rates).plus;
    be.eps = rates.alpha - rates.gamma * be.z;
    block[0][0] = rates.alpha;
    block[0][1] = -rates.gamma;
    block[1][0] = -rates.alpha;
    block[1][1] = rates.gamma + rates.r - rates.ell;
  } else {
    be.z = kappa(rates.beta, rates.delta, rates).plus;
    be.eps = rates.delta - rates.beta * be.z;
    block[0][0] = rates.delta;
    block[0][1] = -rates.beta;
    block[1][0] = -rates.delta;
    block[1][1] = rates.beta - (rates.r - rates.ell);
  }
  // eigen-equation and the rational eigenvalue form, both exact
  const double sign = side == BoundarySide::kLeft ? 1.0 : -1.0;
  const double rational = sign * (rates.r - rates.ell) * be.z / (1.0 + be.z);
  const double r0 = block[0][0] + block[0][1] * be.z - be.eps;
  const double r1 = block[1][0] + block[1][1] * be.z - be.eps * be.z;
  const double scale = std::max({1.0, std::abs(be.eps), std::abs(be.z)});
  if (std::abs(r0) > 1e-12 * scale || std::abs(r1) > 1e-12 * scale ||
      std::abs(be.eps - rational) > 1e-12 * scale) {
    throw std::runtime_error("boundary eigenpair self-check failed");
  }
  return be;
}

namespace {

double vec_fugacity(const TwoVector& v) {
  if (v.c0 == 0.0) {
    throw std::invalid_argument("fugacity undefined for c0 = 0");
  }
  return v.c1 / v.c0;
}

std::array<double, 4> kron2(const TwoVector& u, const TwoVector& v) {
  return {u.c0 * v.c0, u.c0 * v.c1, u.c1 * v.c0, u.c1 * v.c1};
}

std::array<double, 4> apply_block(
    const std::array<std::array<double, 4>, 4>& m,
    const std::array<double, 4>& v) {
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

double residual_of(const std::array<double, 4>& lhs,
                   const std::array<double, 4>& rhs) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(lhs[i] - rhs[i]));
  return m;
}

TwoVector rotated(const TwoVector& v) { return TwoVector{-v.c1, v.c0}; }

}  // namespace

ProjectionCoefficients projection_coefficients(const TwoVector& a,
                                               const TwoVector& b,
                                               const Rates& rates) {
  ProjectionCoefficients pc{};
  pc.delta = a.c0 * b.c1 - a.c1 * b.c0;
  if (pc.delta == 0.0) {
    throw std::invalid_argument(
        "projection coefficients undefined for linearly dependent vectors");
  }
  const double rml = rates.r - rates.ell;
  pc.d = rml * a.c1 * a.c0 / pc.delta;
  pc.d_tilde = rml * a.c1 * b.c0 / pc.delta;
  const double za = vec_fugacity(a);
  const double eps_minus = rates.alpha - rates.gamma * za;
  const double eps_plus = rates.delta - rates.beta * za;
  pc.d_minus = eps_minus * a.c0 * (a.c0 + a.c1) / pc.delta;
  pc.d_plus = eps_plus * a.c0 * (a.c0 + a.c1) / pc.delta;
  pc.d_tilde_minus = eps_minus * a.c0 * (b.c0 + b.c1) / pc.delta;
  pc.d_tilde_plus = eps_plus * a.c0 * (b.c0 + b.c1) / pc.delta;
  return pc;
}

double ProjectionResiduals::max() const {
  return std::max({res_a, res_b, res_c});
}

ProjectionResiduals verify_projection_lemma(const TwoVector& a,
                                            const TwoVector& a_tilde,
                                            const TwoVector& b,
                                            const Rates& rates,
                                            std::optional<TwoVector> b_tilde,
                                            std::optional<TwoVector> c,
                                            std::optional<TwoVector> c_tilde) {
  const TwoVector bt = b_tilde.value_or(rotated(b));
  const TwoVector cv = c.value_or(rotated(a_tilde));
  const TwoVector ct = c_tilde.value_or(rotated(a));
  const auto h = bulk_block(rates);

  auto d = [&](const TwoVector& u, const TwoVector& v) {
    return projection_coefficients(u, v, rates).d;
  };
  auto d_tilde = [&](const TwoVector& u, const TwoVector& v) {
    return projection_coefficients(u, v, rates).d_tilde;
  };

  ProjectionResiduals res{};
  {
    const double u = rates.ell - d_tilde(b, bt);
    const double v = d(a, a_tilde);
    const double w = -d(b, bt);
    const auto ab = kron2(a, b);
    std::array<double, 4> rhs{};
    const auto bat = kron2(b, a_tilde);
    const auto abt = kron2(a, bt);
    for (int i = 0; i < 4; ++i) rhs[i] = u * ab[i] - v * bat[i] - w * abt[i];
    res.res_a = residual_of(apply_block(h, ab), rhs);
  }
  {
    const double u = rates.r + d_tilde(b, bt);
    const double v = -d(a_tilde, a);
    const double w = d(b, bt);
    const auto bat = kron2(b, a_tilde);
    const auto ab = kron2(a, b);
    const auto btat = kron2(bt, a_tilde);
    std::array<double, 4> rhs{};
    for (int i = 0; i < 4; ++i) rhs[i] = u * bat[i] - v * ab[i] - w * btat[i];
    res.res_b = residual_of(apply_block(h, bat), rhs);
  }
  {
    const double u = d_tilde(a, ct) - d_tilde(a_tilde, cv);
    const double v = -d(a_tilde, cv);
    const double w = d(a, ct);
    const auto aat = kron2(a, a_tilde);
    const auto ctat = kron2(ct, a_tilde);
    const auto ac = kron2(a, cv);
    std::array<double, 4> rhs{};
    for (int i = 0; i < 4; ++i) rhs[i] = u * aat[i] - w * ctat[i] - v * ac[i];
    res.res_c = residual_of(apply_block(h, aat), rhs);
  }
  return res;
}

SpectrumContainment spectrum_containment(const Rates& rates,
                                         const Lattice& lat) {
  const ShockProfile profile = profile_from_boundary(rates, 1);
  const std::vector<ShockHopRates> sr = shock_rates(profile, rates);
  SpectrumContainment sc;
  sc.eps = rw_spectrum(sr[0], lat);
  const std::vector<std::complex<double>> spec =
      dense_eigs(build_h(rates, lat));
  sc.distance.resize(sc.eps.size());
  sc.max_gap = 0.0;
  for (std::size_t p = 0; p < sc.eps.size(); ++p) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& lambda : spec) {
      best = std::min(best, std::abs(lambda - sc.eps[p]));
    }
    sc.distance[p] = best;
    sc.max_gap = std::max(sc.max_gap, best);
  }
  return sc;
}

}  // namespace shocklab
