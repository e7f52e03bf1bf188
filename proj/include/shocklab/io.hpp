#ifndef SHOCKLAB_IO_HPP
#define SHOCKLAB_IO_HPP

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "shocklab/duality.hpp"
#include "shocklab/gillespie.hpp"

namespace shocklab {

// Minimal RFC-4180-style CSV writer: header row, '.' decimal separator,
// full double precision.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void header(const std::vector<std::string>& names);
  void row(const std::vector<double>& values);
  void row(const std::vector<std::string>& values);

 private:
  std::ostream& out_;
};

std::string format_double(double v);

// (configuration index, probability) table of a measure vector.
void write_measure_csv(std::ostream& out, const std::vector<double>& mu);

nlohmann::json to_json(const DualityReport& report);
nlohmann::json to_json(const EnsembleStats& stats);
nlohmann::json to_json(const HistogramStats& stats);

}  // namespace shocklab

#endif
