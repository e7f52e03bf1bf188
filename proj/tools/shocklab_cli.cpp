// Command-line laboratory for the open ASEP and its dual shock
// exclusion process: manifold checks, duality verification, exact
// evolution and invariant measures, walk propagators and spectra, the
// XXZ correspondence, and Monte Carlo simulation.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "shocklab/asep.hpp"
#include "shocklab/common.hpp"
#include "shocklab/config.hpp"
#include "shocklab/dense.hpp"
#include "shocklab/duality.hpp"
#include "shocklab/expm.hpp"
#include "shocklab/gillespie.hpp"
#include "shocklab/io.hpp"
#include "shocklab/propagator.hpp"
#include "shocklab/shock_measure.hpp"
#include "shocklab/xxz.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace shocklab;

namespace {

struct CliOptions {
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  int threads = 1;
};

ExperimentConfig load(const CliOptions& opt) {
  ExperimentConfig cfg = load_config(opt.config_path);
  if (opt.out_dir) cfg.out_dir = *opt.out_dir;
  if (opt.tol) cfg.tolerance = *opt.tol;
  if (opt.seed) cfg.seed = *opt.seed;
  return cfg;
}

fs::path prepare_out_dir(const ExperimentConfig& cfg) {
  fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  return dir;
}

void write_json(const fs::path& path, const json& doc) {
  std::ofstream out(path);
  out << doc.dump(2) << '\n';
}

ShockPositions default_positions(const ExperimentConfig& cfg) {
  if (cfg.positions) return *cfg.positions;
  ShockPositions xs(cfg.n_shocks);
  for (int i = 0; i < cfg.n_shocks; ++i) xs[i] = cfg.lattice.l_minus + i;
  return xs;
}

std::vector<double> site_densities(const std::vector<double>& mu,
                                   const Lattice& lat) {
  const int length = lat.length();
  std::vector<double> rho(length, 0.0);
  for (std::size_t cfg = 0; cfg < mu.size(); ++cfg) {
    for (int off = 0; off < length; ++off) {
      if (occupation_bits(static_cast<std::uint32_t>(cfg), length, off)) {
        rho[off] += mu[cfg];
      }
    }
  }
  return rho;
}

int cmd_check_manifold(const CliOptions& opt) {
  const ExperimentConfig cfg = load(opt);
  const ManifoldSpec spec{cfg.n_shocks, cfg.m_index};
  const ManifoldResiduals res = manifold_residuals(cfg.rates, spec);

  json report;
  report["parameters"] = resolved_parameters(cfg);
  report["residuals"] = {{"res_N", res.res_n}, {"res_M", res.res_m}};
  report["on_manifold"] = res.on_manifold(cfg.tolerance);
  const ShockProfile profile = profile_from_boundary(cfg.rates, cfg.n_shocks);
  report["profile"] = {{"bulk_densities", profile.bulk},
                       {"shock_densities", profile.shock}};
  const auto sr = shock_rates(profile, cfg.rates);
  json rates_json = json::array();
  for (const auto& s : sr) {
    rates_json.push_back({{"d_left", s.d_left},
                          {"d_right", s.d_right},
                          {"asymmetry", s.asymmetry()},
                          {"velocity", s.velocity()},
                          {"diffusion", s.diffusion()}});
  }
  report["shock_rates"] = rates_json;
  if (cfg.lattice.length() <= cfg.n_shocks - cfg.m_index + 1) {
    report["warnings"] = json::array(
        {"finite-dimensional stationary representation requires "
         "L > N - M + 1 on this submanifold"});
  }

  const fs::path dir = prepare_out_dir(cfg);
  write_json(dir / "manifold_report.json", report);
  std::cout << "res_N = " << format_double(res.res_n)
            << "  res_M = " << format_double(res.res_m)
            << "  on_manifold = " << (res.on_manifold(cfg.tolerance) ? "yes"
                                                                     : "no")
            << '\n'
            << "report: " << (dir / "manifold_report.json").string() << '\n';
  return 0;
}

int cmd_verify(const CliOptions& opt) {
  const ExperimentConfig cfg = load(opt);
  const fs::path dir = prepare_out_dir(cfg);

  const DualityReport rep =
      verify_reverse_duality(cfg.rates, cfg.lattice, cfg.n_shocks,
                             cfg.tolerance);
  json report = to_json(rep);
  report["parameters"] = resolved_parameters(cfg);

  const double w_scale = cfg.rates.w();
  json evolution = json::array();
  const ShockPositions x0 = default_positions(cfg);
  for (double t : cfg.times) {
    const auto ec = evolve_and_compare(cfg.rates, cfg.lattice, cfg.n_shocks,
                                       x0, t / w_scale, cfg.expm_tol);
    evolution.push_back({{"t", t / w_scale}, {"error", ec.error}});
  }
  report["evolution"] = evolution;

  if (cfg.n_shocks == 1) {
    const auto sc = spectrum_containment(cfg.rates, cfg.lattice);
    report["spectrum_max_gap"] = sc.max_gap;
  }
  report["xxz_residual"] = xxz_residual(cfg.rates, cfg.lattice);
  const XXZParams xp = xxz_from_rates(cfg.rates, cfg.lattice);
  report["xxz_integrability_residual"] =
      xxz_integrability_residual(xp, cfg.lattice, cfg.n_shocks);

  write_json(dir / "duality_report.json", report);

  std::ofstream csv_out(dir / "residuals.csv");
  CsvWriter csv(csv_out);
  csv.header({"L", "N", "res_N", "res_M", "residual_duality",
              "residual_intertwine", "on_manifold"});
  csv.row({static_cast<double>(cfg.lattice.length()),
           static_cast<double>(cfg.n_shocks), rep.manifold.res_n,
           rep.manifold.res_m, rep.residual_duality, rep.residual_intertwine,
           rep.on_manifold ? 1.0 : 0.0});

  // optional parameter sweep: one CSV row per grid point
  std::ifstream raw(opt.config_path);
  json doc;
  raw >> doc;
  if (doc.contains("sweep")) {
    const json& sw = doc["sweep"];
    const auto q2_list = sw.value("q2", std::vector<double>{2.0});
    const auto rho_list = sw.value("rho_minus", std::vector<double>{1.0 / 3.0});
    const int l_max = sw.value("l_max", cfg.lattice.length());
    const int n_max = sw.value("n_max", 0);  // 0 = up to L
    const double perturb = sw.value("perturb_omega_plus", 0.0);
    std::ofstream sweep_out(dir / "sweep.csv");
    CsvWriter sweep_csv(sweep_out);
    sweep_csv.header({"q2", "rho_minus", "L", "N", "res_N", "res_M",
                      "residual_duality", "residual_intertwine",
                      "on_manifold"});
    for (double q2 : q2_list) {
      for (double rho : rho_list) {
        for (int length = 2; length <= l_max; ++length) {
          for (int n = 1; n <= (n_max > 0 ? std::min(n_max, length) : length);
               ++n) {
            auto solved =
                solve_manifold(std::sqrt(q2), 1.0, rho, {n, 1});
            solved.omega_plus += perturb;
            const auto point = verify_reverse_duality(
                rates_from_parametrization(solved), Lattice(1, length), n,
                cfg.tolerance);
            sweep_csv.row({q2, rho, static_cast<double>(length),
                           static_cast<double>(n), point.manifold.res_n,
                           point.manifold.res_m, point.residual_duality,
                           point.residual_intertwine,
                           point.on_manifold ? 1.0 : 0.0});
          }
        }
      }
    }
  }

  std::cout << "duality residual = " << format_double(rep.residual_duality)
            << "  intertwine residual = "
            << format_double(rep.residual_intertwine) << "  "
            << (rep.on_manifold ? "on-manifold" : "off-manifold") << '\n'
            << "report: " << (dir / "duality_report.json").string() << '\n';
  return 0;
}

int cmd_evolve(const CliOptions& opt) {
  const ExperimentConfig cfg = load(opt);
  const fs::path dir = prepare_out_dir(cfg);
  const double w_scale = cfg.rates.w();
  const ShockPositions x0 = default_positions(cfg);

  // the initial shock measure itself, as (config index, probability)
  {
    const ShockProfile profile =
        profile_from_boundary(cfg.rates, cfg.n_shocks);
    std::ofstream mout(dir / "shock_measure.csv");
    write_measure_csv(mout, shock_measure_vector(profile, x0, cfg.lattice));
  }

  std::ofstream out(dir / "evolution.csv");
  CsvWriter csv(out);
  csv.header({"t", "site", "density", "evolve_error"});
  std::vector<double> times = cfg.times.empty() ? std::vector<double>{0.0}
                                                : cfg.times;
  for (double t_raw : times) {
    const double t = t_raw / w_scale;
    const auto ec = evolve_and_compare(cfg.rates, cfg.lattice, cfg.n_shocks,
                                       x0, t, cfg.expm_tol);
    const std::vector<double> rho = site_densities(ec.evolved, cfg.lattice);
    for (int off = 0; off < cfg.lattice.length(); ++off) {
      csv.row({t, static_cast<double>(cfg.lattice.l_minus + off), rho[off],
               ec.error});
    }
  }
  std::cout << "profiles: " << (dir / "evolution.csv").string() << '\n';
  return 0;
}

int cmd_invariant(const CliOptions& opt) {
  const ExperimentConfig cfg = load(opt);
  const fs::path dir = prepare_out_dir(cfg);
  const InvariantMeasure inv =
      invariant_measure(cfg.rates, cfg.lattice, cfg.n_shocks);
  const std::vector<double> oracle =
      stationary_from_nullspace(build_w(cfg.rates, cfg.lattice));
  const double tv = total_variation(inv.mu, oracle);

  std::ofstream wout(dir / "invariant_weights.csv");
  CsvWriter wcsv(wout);
  wcsv.header({"state_index", "weight"});
  for (std::size_t i = 0; i < inv.weights.size(); ++i) {
    wcsv.row({static_cast<double>(i), inv.weights[i]});
  }
  std::ofstream mout(dir / "invariant_measure.csv");
  write_measure_csv(mout, inv.mu);
  std::ofstream dout(dir / "invariant_densities.csv");
  CsvWriter dcsv(dout);
  dcsv.header({"site", "density"});
  const std::vector<double> rho = site_densities(inv.mu, cfg.lattice);
  for (int off = 0; off < cfg.lattice.length(); ++off) {
    dcsv.row({static_cast<double>(cfg.lattice.l_minus + off), rho[off]});
  }
  write_json(dir / "invariant_report.json",
             json{{"stationarity_residual", inv.stationarity_residual},
                  {"tv_distance_to_nullspace", tv},
                  {"parameters", resolved_parameters(cfg)}});
  std::cout << "stationarity residual = "
            << format_double(inv.stationarity_residual)
            << "  TV vs null-space oracle = " << format_double(tv) << '\n';
  return 0;
}

int cmd_propagator(const CliOptions& opt) {
  const ExperimentConfig cfg = load(opt);
  if (cfg.n_shocks != 1) {
    throw ConfigError("the closed-form propagator requires N = 1");
  }
  const fs::path dir = prepare_out_dir(cfg);
  const ShockProfile profile = profile_from_boundary(cfg.rates, 1);
  const auto sr = shock_rates(profile, cfg.rates)[0];
  const SparseMatrix q = build_q({sr}, cfg.lattice);
  const double w_scale = cfg.rates.w();

  std::ofstream out(dir / "propagator.csv");
  CsvWriter csv(out);
  csv.header({"t", "x", "y", "p_closed_form", "p_expm", "abs_diff"});
  double worst = 0.0;
  for (double t_raw : cfg.times) {
    const double t = t_raw / w_scale;
    for (int x = cfg.lattice.l_minus; x <= cfg.lattice.l_plus; ++x) {
      std::vector<double> e(cfg.lattice.length(), 0.0);
      e[x - cfg.lattice.l_minus] = 1.0;
      const std::vector<double> row =
          expm_action(q, e, t, cfg.expm_tol, /*transpose=*/true);
      for (int y = cfg.lattice.l_minus; y <= cfg.lattice.l_plus; ++y) {
        const double closed = rw_propagator(x, y, t, sr, cfg.lattice);
        const double numeric = row[y - cfg.lattice.l_minus];
        worst = std::max(worst, std::abs(closed - numeric));
        csv.row({t, static_cast<double>(x), static_cast<double>(y),
                 std::max(0.0, closed), numeric,
                 std::abs(closed - numeric)});
      }
    }
  }
  std::cout << "max |closed form - expm| = " << format_double(worst) << '\n';
  return 0;
}

int cmd_spectrum(const CliOptions& opt) {
  const ExperimentConfig cfg = load(opt);
  if (cfg.n_shocks != 1) {
    throw ConfigError("the walk spectrum requires N = 1");
  }
  const fs::path dir = prepare_out_dir(cfg);
  const auto sc = spectrum_containment(cfg.rates, cfg.lattice);
  std::ofstream out(dir / "spectrum.csv");
  CsvWriter csv(out);
  csv.header({"p", "eps_p", "distance_to_spec_H"});
  for (std::size_t p = 0; p < sc.eps.size(); ++p) {
    csv.row({static_cast<double>(p), sc.eps[p], sc.distance[p]});
  }
  std::cout << "max spectral gap = " << format_double(sc.max_gap) << '\n';
  return 0;
}

int cmd_xxz(const CliOptions& opt) {
  const ExperimentConfig cfg = load(opt);
  const fs::path dir = prepare_out_dir(cfg);
  const XXZParams p = xxz_from_rates(cfg.rates, cfg.lattice);
  const Rates round_trip = rates_from_xxz(p);
  json report{{"theta", p.theta},
              {"w", p.w},
              {"phi_minus", p.phi_minus},
              {"psi_minus", p.psi_minus},
              {"phi_plus", p.phi_plus},
              {"psi_plus", p.psi_plus},
              {"theta_minus", p.theta_minus},
              {"theta_plus", p.theta_plus},
              {"E0", p.e0},
              {"transform_residual", xxz_residual(cfg.rates, cfg.lattice)},
              {"integrability_residual",
               xxz_integrability_residual(p, cfg.lattice, cfg.n_shocks)},
              {"round_trip_rates",
               {{"r", round_trip.r},
                {"ell", round_trip.ell},
                {"alpha", round_trip.alpha},
                {"beta", round_trip.beta},
                {"gamma", round_trip.gamma},
                {"delta", round_trip.delta}}},
              {"parameters", resolved_parameters(cfg)}};
  write_json(dir / "xxz_report.json", report);
  std::cout << "transform residual = "
            << format_double(report["transform_residual"].get<double>())
            << '\n';
  return 0;
}

const char* move_name(Move::Kind kind) {
  switch (kind) {
    case Move::Kind::kHopRight: return "hop_right";
    case Move::Kind::kHopLeft: return "hop_left";
    case Move::Kind::kInjectLeft: return "inject_left";
    case Move::Kind::kExtractLeft: return "extract_left";
    case Move::Kind::kInjectRight: return "inject_right";
    case Move::Kind::kExtractRight: return "extract_right";
    case Move::Kind::kShockLeft: return "shock_left";
    case Move::Kind::kShockRight: return "shock_right";
  }
  return "unknown";
}

int cmd_simulate(const CliOptions& opt) {
  const ExperimentConfig cfg = load(opt);
  const fs::path dir = prepare_out_dir(cfg);
  const double w_scale = cfg.rates.w();
  const double t = (cfg.times.empty() ? 2.0 : cfg.times.front()) / w_scale;
  const ShockPositions x0 = default_positions(cfg);

  // optional per-event debug log of one trajectory
  if (std::find(cfg.formats.begin(), cfg.formats.end(), "events") !=
      cfg.formats.end()) {
    const ShockProfile profile =
        profile_from_boundary(cfg.rates, cfg.n_shocks);
    std::vector<double> densities(cfg.lattice.length());
    for (int off = 0; off < cfg.lattice.length(); ++off) {
      densities[off] = shock_site_density(profile, x0, cfg.lattice,
                                          cfg.lattice.l_minus + off);
    }
    Rng rng = Rng::stream(cfg.seed, 0);
    const Configuration init =
        sample_product_measure(densities, cfg.lattice, rng);
    const AsepTrajectory traj =
        gillespie_asep(cfg.rates, cfg.lattice, init, t, rng.next_u64());
    std::ofstream log(dir / "asep_events.log");
    for (const auto& ev : traj.events) {
      log << format_double(ev.time) << ' ' << move_name(ev.move.kind) << ' '
          << ev.move.index << '\n';
    }
  }

  const EnsembleStats stats =
      compare_empirical_exact(cfg.rates, cfg.lattice, cfg.n_shocks, x0, t,
                              cfg.n_traj, cfg.seed, opt.threads);
  std::ofstream out(dir / "mc_densities.csv");
  CsvWriter csv(out);
  csv.header({"site", "empirical", "stderr", "exact", "z"});
  for (int off = 0; off < cfg.lattice.length(); ++off) {
    csv.row({static_cast<double>(cfg.lattice.l_minus + off),
             stats.site_density[off], stats.site_stderr[off],
             stats.site_exact[off], stats.site_z[off]});
  }

  const ShockProfile profile = profile_from_boundary(cfg.rates, cfg.n_shocks);
  const auto sr = shock_rates(profile, cfg.rates);
  const HistogramStats hist = shock_stationary_histogram(
      sr, cfg.lattice, x0, 40.0 / w_scale, cfg.n_traj, cfg.seed + 1,
      opt.threads);
  std::ofstream hout(dir / "mc_dual_histogram.csv");
  CsvWriter hcsv(hout);
  hcsv.header({"state_index", "count", "expected_probability", "z"});
  for (std::size_t s = 0; s < hist.counts.size(); ++s) {
    hcsv.row({static_cast<double>(s), static_cast<double>(hist.counts[s]),
              hist.expected[s], hist.z[s]});
  }

  json report{{"asep", to_json(stats)},
              {"dual_walk", to_json(hist)},
              {"parameters", resolved_parameters(cfg)},
              {"note", "acceptance threshold |z| < 4 per bin; no "
                       "multiple-comparison correction applied"}};
  write_json(dir / "mc_report.json", report);
  std::cout << "ASEP max |z| = " << format_double(stats.max_abs_z)
            << "  dual-walk max |z| = " << format_double(hist.max_abs_z)
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for the open ASEP and its dual "
               "shock exclusion process"};
  app.require_subcommand(1);

  CliOptions opt;
  app.add_option("--threads", opt.threads, "worker threads for ensembles");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "JSON config file")
        ->required();
    sub->add_option("--out", opt.out_dir, "output directory");
    sub->add_option("--tol", opt.tol, "identity tolerance override");
    sub->add_option("--seed", opt.seed, "RNG seed override");
  };

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const CliOptions&);
  };
  const Sub subs[] = {
      {"check-manifold", "manifold residuals, solved barriers, shock rates",
       cmd_check_manifold},
      {"verify", "reverse-duality, evolution, spectrum and XXZ residuals",
       cmd_verify},
      {"evolve", "exact evolved density profiles", cmd_evolve},
      {"invariant", "invariant measure and null-space cross-check",
       cmd_invariant},
      {"propagator", "closed-form walk propagator vs matrix exponential",
       cmd_propagator},
      {"spectrum", "walk spectrum containment in spec(H)", cmd_spectrum},
      {"xxz", "XXZ parametrization and transform residual", cmd_xxz},
      {"simulate", "Monte Carlo ensembles vs exact references",
       cmd_simulate},
  };
  int (*selected)(const CliOptions&) = nullptr;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    sub->callback([&selected, &s] { selected = s.run; });
  }

  CLI11_PARSE(app, argc, argv);
  try {
    return selected(opt);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
