#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shocklab/asep.hpp"
#include "shocklab/common.hpp"
#include "shocklab/dense.hpp"
#include "shocklab/dual_process.hpp"
#include "shocklab/duality.hpp"
#include "shocklab/expm.hpp"
#include "shocklab/gillespie.hpp"
#include "shocklab/propagator.hpp"
#include "shocklab/shock.hpp"
#include "shocklab/shock_measure.hpp"
#include "shocklab/xxz.hpp"

namespace py = pybind11;
using namespace shocklab;

namespace {

py::array_t<double> as_array(const std::vector<double>& v) {
  py::array_t<double> out(v.size());
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::array_t<double> as_matrix(const std::vector<std::vector<double>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  py::array_t<double> out({rows, cols});
  auto buf = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) buf(i, j) = m[i][j];
  }
  return out;
}

std::vector<ShockHopRates> boundary_shock_rates(const Rates& rates, int n) {
  return shock_rates(profile_from_boundary(rates, n), rates);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact generators, shock-measure duality and Monte Carlo for "
            "the open ASEP and its dual shock exclusion process";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError");
  py::register_exception<ConfigError>(m, "ConfigError");

  py::class_<Lattice>(m, "Lattice")
      .def(py::init<int, int>(), py::arg("l_minus"), py::arg("l_plus"))
      .def_readonly("l_minus", &Lattice::l_minus)
      .def_readonly("l_plus", &Lattice::l_plus)
      .def_property_readonly("length", &Lattice::length)
      .def("__repr__", [](const Lattice& lat) {
        return "Lattice(" + std::to_string(lat.l_minus) + ", " +
               std::to_string(lat.l_plus) + ")";
      });

  py::class_<Rates>(m, "Rates")
      .def(py::init([](double r, double ell, double alpha, double beta,
                       double gamma, double delta) {
             Rates rates{r, ell, alpha, beta, gamma, delta};
             rates.validate();
             return rates;
           }),
           py::arg("r"), py::arg("ell"), py::arg("alpha"), py::arg("beta"),
           py::arg("gamma"), py::arg("delta"))
      .def_readonly("r", &Rates::r)
      .def_readonly("ell", &Rates::ell)
      .def_readonly("alpha", &Rates::alpha)
      .def_readonly("beta", &Rates::beta)
      .def_readonly("gamma", &Rates::gamma)
      .def_readonly("delta", &Rates::delta)
      .def_property_readonly("q", &Rates::q)
      .def_property_readonly("w", &Rates::w);

  py::class_<SparseMatrix>(m, "Generator")
      .def_property_readonly("dim", &SparseMatrix::dim)
      .def_property_readonly("nnz", &SparseMatrix::nnz)
      .def("apply",
           [](const SparseMatrix& g, const std::vector<double>& x) {
             return as_array(g.apply(x));
           })
      .def("apply_transpose",
           [](const SparseMatrix& g, const std::vector<double>& x) {
             return as_array(g.apply_transpose(x));
           })
      .def("to_dense",
           [](const SparseMatrix& g) { return as_matrix(g.to_dense()); })
      .def("row_sums",
           [](const SparseMatrix& g) { return as_array(g.row_sums()); })
      .def("column_sums",
           [](const SparseMatrix& g) { return as_array(g.column_sums()); });

  m.def("fugacity", &fugacity, py::arg("rho"));
  m.def(
      "kappa",
      [](double x, double y, const Rates& rates) {
        const KappaPair k = kappa(x, y, rates);
        return py::make_tuple(k.plus, k.minus);
      },
      py::arg("x"), py::arg("y"), py::arg("rates"));

  m.def(
      "rates_from_parametrization",
      [](double q, double w, double rho_minus, double rho_plus,
         double omega_minus, double omega_plus) {
        return rates_from_parametrization(BoundaryParametrization{
            q, w, rho_minus, rho_plus, omega_minus, omega_plus});
      },
      py::arg("q"), py::arg("w"), py::arg("rho_minus"), py::arg("rho_plus"),
      py::arg("omega_minus"), py::arg("omega_plus"));

  m.def(
      "solve_manifold",
      [](double q, double w, double rho_minus, int n, int mm,
         std::optional<double> omega_minus) {
        const BoundaryParametrization p =
            solve_manifold(q, w, rho_minus, ManifoldSpec{n, mm}, omega_minus);
        py::dict d;
        d["q"] = p.q;
        d["w"] = p.w;
        d["rho_minus"] = p.rho_minus;
        d["rho_plus"] = p.rho_plus;
        d["omega_minus"] = p.omega_minus;
        d["omega_plus"] = p.omega_plus;
        d["rates"] = rates_from_parametrization(p);
        return d;
      },
      py::arg("q"), py::arg("w"), py::arg("rho_minus"), py::arg("N"),
      py::arg("M") = 1, py::arg("omega_minus") = std::nullopt);

  m.def(
      "manifold_residuals",
      [](const Rates& rates, int n, int mm) {
        const ManifoldResiduals res =
            manifold_residuals(rates, ManifoldSpec{n, mm});
        return py::make_tuple(res.res_n, res.res_m);
      },
      py::arg("rates"), py::arg("N"), py::arg("M") = 1);

  m.def("build_w", &build_w, py::arg("rates"), py::arg("lattice"));
  m.def("build_h", &build_h, py::arg("rates"), py::arg("lattice"));
  m.def(
      "build_q",
      [](const Rates& rates, const Lattice& lat, int n) {
        return build_q(boundary_shock_rates(rates, n), lat);
      },
      py::arg("rates"), py::arg("lattice"), py::arg("N"));

  m.def(
      "expm_action",
      [](const SparseMatrix& g, const std::vector<double>& v, double t,
         double tol, bool transpose) {
        return as_array(expm_action(g, v, t, tol, transpose));
      },
      py::arg("generator"), py::arg("v"), py::arg("t"),
      py::arg("tol") = 1e-12, py::arg("transpose") = false);

  m.def("dense_eigs", [](const SparseMatrix& g) {
    const auto ev = dense_eigs(g);
    py::array_t<std::complex<double>> out(ev.size());
    std::copy(ev.begin(), ev.end(), out.mutable_data());
    return out;
  });

  m.def("stationary_from_nullspace", [](const SparseMatrix& w) {
    return as_array(stationary_from_nullspace(w));
  });

  m.def(
      "profile_from_boundary",
      [](const Rates& rates, int n) {
        const ShockProfile p = profile_from_boundary(rates, n);
        py::dict d;
        d["bulk"] = as_array(p.bulk);
        d["shock"] = as_array(p.shock);
        return d;
      },
      py::arg("rates"), py::arg("N"));

  m.def(
      "shock_rates",
      [](const Rates& rates, int n) {
        py::list out;
        for (const ShockHopRates& s : boundary_shock_rates(rates, n)) {
          py::dict d;
          d["d_left"] = s.d_left;
          d["d_right"] = s.d_right;
          d["asymmetry"] = s.asymmetry();
          d["velocity"] = s.velocity();
          d["diffusion"] = s.diffusion();
          out.append(d);
        }
        return out;
      },
      py::arg("rates"), py::arg("N"));

  m.def(
      "shock_measure_vector",
      [](const Rates& rates, const Lattice& lat, const ShockPositions& xs) {
        const ShockProfile p =
            profile_from_boundary(rates, static_cast<int>(xs.size()));
        return as_array(shock_measure_vector(p, xs, lat));
      },
      py::arg("rates"), py::arg("lattice"), py::arg("positions"));

  m.def(
      "duality_matrices",
      [](const Rates& rates, const Lattice& lat, int n) {
        const ShockProfile p = profile_from_boundary(rates, n);
        const DualityMatrices dm = build_duality_matrices(p, rates, lat);
        py::dict d;
        d["weights"] = as_array(dm.weights);
        d["S"] = as_matrix(dm.s);
        d["R"] = as_matrix(dm.r);
        return d;
      },
      py::arg("rates"), py::arg("lattice"), py::arg("N"));

  m.def(
      "verify_reverse_duality",
      [](const Rates& rates, const Lattice& lat, int n, double tol) {
        const DualityReport rep = verify_reverse_duality(rates, lat, n, tol);
        py::dict d;
        d["residual_duality"] = rep.residual_duality;
        d["residual_intertwine"] = rep.residual_intertwine;
        d["res_N"] = rep.manifold.res_n;
        d["res_M"] = rep.manifold.res_m;
        d["on_manifold"] = rep.on_manifold;
        return d;
      },
      py::arg("rates"), py::arg("lattice"), py::arg("N"),
      py::arg("tol") = 1e-10);

  m.def(
      "evolve_and_compare",
      [](const Rates& rates, const Lattice& lat, int n,
         const ShockPositions& x0, double t, double expm_tol,
         bool use_closed_form) {
        const EvolutionComparison ec =
            evolve_and_compare(rates, lat, n, x0, t, expm_tol,
                               use_closed_form);
        py::dict d;
        d["error"] = ec.error;
        d["evolved"] = as_array(ec.evolved);
        d["combination"] = as_array(ec.combination);
        return d;
      },
      py::arg("rates"), py::arg("lattice"), py::arg("N"), py::arg("x0"),
      py::arg("t"), py::arg("expm_tol") = 1e-12,
      py::arg("use_closed_form") = false);

  m.def(
      "invariant_measure",
      [](const Rates& rates, const Lattice& lat, int n) {
        const InvariantMeasure inv = invariant_measure(rates, lat, n);
        py::dict d;
        d["mu"] = as_array(inv.mu);
        d["weights"] = as_array(inv.weights);
        d["stationarity_residual"] = inv.stationarity_residual;
        return d;
      },
      py::arg("rates"), py::arg("lattice"), py::arg("N"));

  m.def(
      "rw_propagator",
      [](const Rates& rates, const Lattice& lat, int x, int y, double t) {
        return rw_propagator(x, y, t, boundary_shock_rates(rates, 1)[0], lat);
      },
      py::arg("rates"), py::arg("lattice"), py::arg("x"), py::arg("y"),
      py::arg("t"));

  m.def(
      "rw_spectrum",
      [](const Rates& rates, const Lattice& lat) {
        return as_array(rw_spectrum(boundary_shock_rates(rates, 1)[0], lat));
      },
      py::arg("rates"), py::arg("lattice"));

  m.def(
      "spectrum_containment",
      [](const Rates& rates, const Lattice& lat) {
        const SpectrumContainment sc = spectrum_containment(rates, lat);
        py::dict d;
        d["eps"] = as_array(sc.eps);
        d["distance"] = as_array(sc.distance);
        d["max_gap"] = sc.max_gap;
        return d;
      },
      py::arg("rates"), py::arg("lattice"));

  m.def(
      "xxz_params",
      [](const Rates& rates, const Lattice& lat) {
        const XXZParams p = xxz_from_rates(rates, lat);
        py::dict d;
        d["theta"] = p.theta;
        d["w"] = p.w;
        d["phi_minus"] = p.phi_minus;
        d["psi_minus"] = p.psi_minus;
        d["phi_plus"] = p.phi_plus;
        d["psi_plus"] = p.psi_plus;
        d["theta_minus"] = p.theta_minus;
        d["theta_plus"] = p.theta_plus;
        d["E0"] = p.e0;
        return d;
      },
      py::arg("rates"), py::arg("lattice"));
  m.def("xxz_residual", &xxz_residual, py::arg("rates"), py::arg("lattice"));

  m.def(
      "gillespie_asep",
      [](const Rates& rates, const Lattice& lat, std::uint32_t init_bits,
         double t_end, std::uint64_t seed) {
        const AsepTrajectory traj =
            gillespie_asep(rates, lat, Configuration{init_bits, lat.length()},
                           t_end, seed);
        py::dict d;
        d["final_bits"] = traj.final_state.bits;
        d["n_events"] = traj.events.size();
        d["occupation_time"] = as_array(traj.occupation_time);
        return d;
      },
      py::arg("rates"), py::arg("lattice"), py::arg("init_bits"),
      py::arg("t_end"), py::arg("seed"));

  m.def(
      "compare_empirical_exact",
      [](const Rates& rates, const Lattice& lat, int n,
         const ShockPositions& x0, double t, std::size_t n_traj,
         std::uint64_t seed, int threads) {
        const EnsembleStats stats = compare_empirical_exact(
            rates, lat, n, x0, t, n_traj, seed, threads);
        py::dict d;
        d["site_density"] = as_array(stats.site_density);
        d["site_exact"] = as_array(stats.site_exact);
        d["site_z"] = as_array(stats.site_z);
        d["max_abs_z"] = stats.max_abs_z;
        return d;
      },
      py::arg("rates"), py::arg("lattice"), py::arg("N"), py::arg("x0"),
      py::arg("t"), py::arg("n_traj"), py::arg("seed"),
      py::arg("threads") = 1);
}
