#include "shocklab/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace shocklab {

namespace {

using nlohmann::json;

class Collector {
 public:
  void fail(const std::string& msg) { errors_.push_back(msg); }
  void raise_if_failed() const {
    if (errors_.empty()) return;
    std::ostringstream os;
    os << "invalid config:";
    for (const auto& e : errors_) os << "\n  - " << e;
    throw ConfigError(os.str());
  }

 private:
  std::vector<std::string> errors_;
};

double get_number(const json& j, const char* key, Collector& errs,
                  double fallback = 0.0) {
  if (!j.contains(key)) {
    errs.fail(std::string("missing field '") + key + "'");
    return fallback;
  }
  if (!j[key].is_number()) {
    errs.fail(std::string("field '") + key + "' must be a number");
    return fallback;
  }
  return j[key].get<double>();
}

}  // namespace

ExperimentConfig parse_config(const json& doc) {
  Collector errs;
  ExperimentConfig cfg;

  if (!doc.is_object()) {
    throw ConfigError("invalid config: document is not a JSON object");
  }

  if (!doc.contains("lattice") || !doc["lattice"].is_object()) {
    errs.fail("missing 'lattice' object");
  } else {
    const json& lat = doc["lattice"];
    const double lm = get_number(lat, "l_minus", errs);
    const double lp = get_number(lat, "l_plus", errs);
    try {
      cfg.lattice = Lattice(static_cast<int>(lm), static_cast<int>(lp));
    } catch (const std::exception& e) {
      errs.fail(e.what());
    }
  }

  if (doc.contains("shocks")) {
    const json& sh = doc["shocks"];
    if (sh.contains("N")) cfg.n_shocks = sh["N"].get<int>();
    if (sh.contains("M")) cfg.m_index = sh["M"].get<int>();
    if (sh.contains("positions")) {
      cfg.positions = sh["positions"].get<ShockPositions>();
    }
  }
  try {
    ManifoldSpec{cfg.n_shocks, cfg.m_index}.validate();
    if (cfg.n_shocks > cfg.lattice.length()) {
      errs.fail("shock count N exceeds the lattice length");
    }
  } catch (const std::exception& e) {
    errs.fail(e.what());
  }

  const bool has_rates =
      doc.contains("parameters") && doc["parameters"].contains("rates");
  const bool has_param = doc.contains("parameters") &&
                         doc["parameters"].contains("parametrization");
  if (has_rates == has_param) {
    errs.fail("exactly one of parameters.rates / "
              "parameters.parametrization is required");
  } else if (has_rates) {
    const json& r = doc["parameters"]["rates"];
    cfg.rates = Rates{get_number(r, "r", errs),     get_number(r, "ell", errs),
                      get_number(r, "alpha", errs), get_number(r, "beta", errs),
                      get_number(r, "gamma", errs),
                      get_number(r, "delta", errs)};
    try {
      cfg.rates.validate();
    } catch (const std::exception& e) {
      errs.fail(e.what());
    }
  } else {
    const json& p = doc["parameters"]["parametrization"];
    const double q = get_number(p, "q", errs);
    const double w = get_number(p, "w", errs);
    const double rho_minus = get_number(p, "rho_minus", errs);
    errs.raise_if_failed();
    try {
      const ManifoldSpec spec{cfg.n_shocks, cfg.m_index};
      // anything omitted is solved onto B_N^M; explicit values win
      std::optional<double> om;
      if (p.contains("omega_minus")) om = p["omega_minus"].get<double>();
      BoundaryParametrization bp =
          (p.contains("omega_minus") && p.contains("omega_plus"))
              ? solve_manifold(q, w, rho_minus, spec)
              : solve_manifold(q, w, rho_minus, spec, om);
      if (p.contains("omega_minus")) {
        bp.omega_minus = p["omega_minus"].get<double>();
      }
      if (p.contains("omega_plus")) {
        bp.omega_plus = p["omega_plus"].get<double>();
      }
      if (p.contains("rho_plus")) bp.rho_plus = p["rho_plus"].get<double>();
      cfg.parametrization = bp;
      cfg.from_parametrization = true;
      cfg.rates = rates_from_parametrization(bp);
    } catch (const std::exception& e) {
      errs.fail(e.what());
    }
  }

  if (doc.contains("experiment")) {
    const json& ex = doc["experiment"];
    if (ex.contains("kind")) cfg.kind = ex["kind"].get<std::string>();
    if (ex.contains("t")) {
      if (ex["t"].is_array()) {
        cfg.times = ex["t"].get<std::vector<double>>();
      } else {
        cfg.times = {ex["t"].get<double>()};
      }
      for (double t : cfg.times) {
        if (t < 0.0) errs.fail("negative time in experiment.t");
      }
    }
    if (ex.contains("tol")) cfg.tolerance = ex["tol"].get<double>();
    if (ex.contains("expm_tol")) cfg.expm_tol = ex["expm_tol"].get<double>();
    if (cfg.tolerance <= 0.0 || cfg.expm_tol <= 0.0) {
      errs.fail("tolerances must be positive");
    }
    if (ex.contains("n_traj")) {
      cfg.n_traj = ex["n_traj"].get<std::size_t>();
    }
    if (ex.contains("seed")) cfg.seed = ex["seed"].get<std::uint64_t>();
  }

  if (doc.contains("output")) {
    const json& out = doc["output"];
    if (out.contains("dir")) cfg.out_dir = out["dir"].get<std::string>();
    if (out.contains("formats")) {
      cfg.formats = out["formats"].get<std::vector<std::string>>();
    }
  }

  if (cfg.positions.has_value()) {
    if (static_cast<int>(cfg.positions->size()) != cfg.n_shocks) {
      errs.fail("shocks.positions must list exactly N sites");
    } else {
      int prev = cfg.lattice.l_minus - 1;
      for (int x : *cfg.positions) {
        if (x <= prev || x > cfg.lattice.l_plus) {
          errs.fail("shocks.positions must be strictly increasing inside "
                    "the lattice");
          break;
        }
        prev = x;
      }
    }
  }

  errs.raise_if_failed();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(doc);
}

nlohmann::json resolved_parameters(const ExperimentConfig& cfg) {
  json out;
  out["lattice"] = {{"l_minus", cfg.lattice.l_minus},
                    {"l_plus", cfg.lattice.l_plus}};
  out["rates"] = {{"r", cfg.rates.r},         {"ell", cfg.rates.ell},
                  {"alpha", cfg.rates.alpha}, {"beta", cfg.rates.beta},
                  {"gamma", cfg.rates.gamma}, {"delta", cfg.rates.delta}};
  out["derived"] = {{"q", cfg.rates.q()}, {"w", cfg.rates.w()}};
  if (cfg.parametrization.has_value()) {
    const auto& p = *cfg.parametrization;
    out["parametrization"] = {
        {"q", p.q},
        {"w", p.w},
        {"rho_minus", p.rho_minus},
        {"rho_plus", p.rho_plus},
        {"omega_minus", p.omega_minus},
        {"omega_plus", p.omega_plus}};
  }
  out["shocks"] = {{"N", cfg.n_shocks}, {"M", cfg.m_index}};
  return out;
}

}  // namespace shocklab
