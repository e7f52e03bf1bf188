#include "shocklab/io.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace shocklab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void CsvWriter::header(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out_ << ',';
    out_ << names[i];
  }
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    out_ << format_double(values[i]);
  }
  out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    out_ << values[i];
  }
  out_ << '\n';
}

void write_measure_csv(std::ostream& out, const std::vector<double>& mu) {
  CsvWriter csv(out);
  csv.header({"config_index", "probability"});
  for (std::size_t i = 0; i < mu.size(); ++i) {
    csv.row({static_cast<double>(i), mu[i]});
  }
}

nlohmann::json to_json(const DualityReport& report) {
  return nlohmann::json{
      {"residual_duality", report.residual_duality},
      {"residual_intertwine", report.residual_intertwine},
      {"manifold", {{"res_N", report.manifold.res_n},
                    {"res_M", report.manifold.res_m}}},
      {"on_manifold", report.on_manifold},
      {"tolerance", report.tolerance},
      {"lattice", {{"l_minus", report.l_minus}, {"l_plus", report.l_plus}}},
      {"n_shocks", report.n_shocks},
      {"rates", {{"r", report.rates.r},
                 {"ell", report.rates.ell},
                 {"alpha", report.rates.alpha},
                 {"beta", report.rates.beta},
                 {"gamma", report.rates.gamma},
                 {"delta", report.rates.delta}}}};
}

nlohmann::json to_json(const EnsembleStats& stats) {
  return nlohmann::json{{"n_traj", stats.n_traj},
                        {"site_density", stats.site_density},
                        {"site_stderr", stats.site_stderr},
                        {"site_exact", stats.site_exact},
                        {"site_z", stats.site_z},
                        {"max_abs_z", stats.max_abs_z}};
}

nlohmann::json to_json(const HistogramStats& stats) {
  return nlohmann::json{{"n_traj", stats.n_traj},
                        {"counts", stats.counts},
                        {"expected", stats.expected},
                        {"z", stats.z},
                        {"max_abs_z", stats.max_abs_z}};
}

}  // namespace shocklab
