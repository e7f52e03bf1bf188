#include "shocklab/propagator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shocklab {

namespace {

// stationary weight (d^2-1)/(d^{2L}-1) d^{2(y-L_-)}, with the d -> 1
// limit 1/L
double stationary_term(double d, int length, int y_offset) {
  const double d2 = d * d;
  if (std::abs(d2 - 1.0) < 1e-14) return 1.0 / length;
  return (d2 - 1.0) / (std::pow(d, 2.0 * length) - 1.0) *
         std::pow(d, 2.0 * y_offset);
}

double psi(int p, int y_offset, double d, int length) {
  const double arg = std::numbers::pi * p / length;
  return d * std::sin(arg * (y_offset + 1)) - std::sin(arg * y_offset);
}

}  // namespace

std::vector<double> rw_spectrum(const ShockHopRates& sr, const Lattice& lat) {
  const int length = lat.length();
  const double d = sr.asymmetry();
  const double w = std::sqrt(sr.d_left * sr.d_right);
  std::vector<double> eps(length);
  eps[0] = 0.0;
  for (int p = 1; p < length; ++p) {
    eps[p] =
        w * (d + 1.0 / d - 2.0 * std::cos(std::numbers::pi * p / length));
  }
  return eps;
}

double rw_propagator(int x, int y, double t, const ShockHopRates& sr,
                     const Lattice& lat) {
  if (t < 0.0) throw std::invalid_argument("negative time in rw_propagator");
  if (!lat.contains(x) || !lat.contains(y)) {
    throw std::invalid_argument("walker coordinates outside the lattice");
  }
  const int length = lat.length();
  const int xo = x - lat.l_minus;
  const int yo = y - lat.l_minus;
  const double d = sr.asymmetry();
  const double w = std::sqrt(sr.d_left * sr.d_right);

  double value = stationary_term(d, length, yo);
  const std::vector<double> eps = rw_spectrum(sr, lat);
  for (int p = 1; p < length; ++p) {
    value += 2.0 / length * std::pow(d, yo - xo) * psi(p, xo, d, length) *
             psi(p, yo, d, length) * w / (d * eps[p]) *
             std::exp(-eps[p] * t);
  }
  return value;
}

std::complex<double> rw_eigenvector(int p, int y, const ShockHopRates& sr,
                                    const Lattice& lat) {
  const int length = lat.length();
  if (p < 0 || p >= length || !lat.contains(y)) {
    throw std::invalid_argument("eigenvector index out of range");
  }
  const int yo = y - lat.l_minus;
  const double d = sr.asymmetry();
  if (p == 0) {
    const double d2 = d * d;
    const double norm = std::abs(d2 - 1.0) < 1e-14
                            ? 1.0 / length
                            : (d2 - 1.0) / (std::pow(d, 2.0 * length) - 1.0);
    return std::sqrt(norm) * std::pow(d, yo);
  }
  const std::complex<double> phase =
      std::exp(std::complex<double>(0.0, -std::numbers::pi * p / length));
  return std::sqrt(2.0 / length) * psi(p, yo, d, length) / (d - phase);
}

}  // namespace shocklab
