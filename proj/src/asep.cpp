#include "shocklab/asep.hpp"

#include <stdexcept>
#include <string>

#include "shocklab/common.hpp"

namespace shocklab {

namespace {

void check_size(const Lattice& lat) {
  if (lat.length() > max_sites()) {
    throw ResourceLimitError(
        "configuration space 2^" + std::to_string(lat.length()) +
        " exceeds the cap of 2^" + std::to_string(max_sites()) +
        " states (override with SHOCKLAB_MAX_SITES)");
  }
}

}  // namespace

SparseMatrix build_w_raw(double r, double ell, double alpha, double beta,
                         double gamma, double delta, const Lattice& lat) {
  check_size(lat);
  const int length = lat.length();
  const std::size_t dim = lat.num_configs();
  std::vector<Triplet> trip;
  trip.reserve(dim * (length + 2));
  for (std::size_t c = 0; c < dim; ++c) {
    const std::uint32_t bits = static_cast<std::uint32_t>(c);
    double exit_rate = 0.0;
    auto emit = [&](std::uint32_t target, double rate) {
      if (rate == 0.0) return;
      trip.push_back({c, target, rate});
      exit_rate += rate;
    };
    // bulk hops across bonds (k, k+1), offsets 0..L-2
    for (int off = 0; off + 1 < length; ++off) {
      const int nk = occupation_bits(bits, length, off);
      const int nk1 = occupation_bits(bits, length, off + 1);
      if (nk == nk1) continue;
      const std::uint32_t swapped =
          bits ^ ((1u << (length - 1 - off)) | (1u << (length - 2 - off)));
      emit(swapped, nk == 1 ? r : ell);
    }
    // boundary creation/annihilation
    const std::uint32_t left_bit = 1u << (length - 1);
    emit(bits ^ left_bit, (bits & left_bit) ? gamma : alpha);
    emit(bits ^ 1u, (bits & 1u) ? beta : delta);
    trip.push_back({c, c, -exit_rate});
  }
  SparseMatrix w(dim, std::move(trip), GeneratorKind::kIntensity);
  check_generator(w);
  return w;
}

SparseMatrix build_w(const Rates& rates, const Lattice& lat) {
  rates.validate();
  return build_w_raw(rates.r, rates.ell, rates.alpha, rates.beta, rates.gamma,
                     rates.delta, lat);
}

std::array<std::array<double, 4>, 4> bulk_block(const Rates& rates) {
  const double r = rates.r;
  const double l = rates.ell;
  return {{{0, 0, 0, 0}, {0, r, -r, 0}, {0, -l, l, 0}, {0, 0, 0, 0}}};
}

std::array<std::array<double, 2>, 2> left_block(const Rates& rates) {
  return {{{rates.alpha, -rates.gamma},
           {-rates.alpha, rates.gamma + rates.r - rates.ell}}};
}

std::array<std::array<double, 2>, 2> right_block(const Rates& rates) {
  return {{{rates.delta, -rates.beta},
           {-rates.delta, rates.beta - (rates.r - rates.ell)}}};
}

void embed_site(std::vector<Triplet>& out,
                const std::array<std::array<double, 2>, 2>& block, int site,
                const Lattice& lat) {
  const int length = lat.length();
  const int shift = length - 1 - (site - lat.l_minus);
  const std::uint32_t mask = 1u << shift;
  const std::size_t dim = lat.num_configs();
  for (std::size_t c = 0; c < dim; ++c) {
    const std::uint32_t bits = static_cast<std::uint32_t>(c);
    const int local = (bits & mask) ? 1 : 0;
    for (int target = 0; target < 2; ++target) {
      const double v = block[target][local];
      if (v == 0.0) continue;
      const std::uint32_t row = target == local ? bits : bits ^ mask;
      out.push_back({row, c, v});
    }
  }
}

void embed_bond(std::vector<Triplet>& out,
                const std::array<std::array<double, 4>, 4>& block, int bond,
                const Lattice& lat) {
  const int length = lat.length();
  const int hi_shift = length - 1 - (bond - lat.l_minus);
  const std::uint32_t hi = 1u << hi_shift;
  const std::uint32_t lo = 1u << (hi_shift - 1);
  const std::size_t dim = lat.num_configs();
  for (std::size_t c = 0; c < dim; ++c) {
    const std::uint32_t bits = static_cast<std::uint32_t>(c);
    const int local = ((bits & hi) ? 2 : 0) | ((bits & lo) ? 1 : 0);
    for (int target = 0; target < 4; ++target) {
      const double v = block[target][local];
      if (v == 0.0) continue;
      std::uint32_t row = bits & ~(hi | lo);
      if (target & 2) row |= hi;
      if (target & 1) row |= lo;
      out.push_back({row, c, v});
    }
  }
}

SparseMatrix build_h(const Rates& rates, const Lattice& lat) {
  rates.validate();
  check_size(lat);
  std::vector<Triplet> trip;
  trip.reserve(lat.num_configs() * (lat.length() + 2));
  for (int k = lat.l_minus; k < lat.l_plus; ++k) {
    embed_bond(trip, bulk_block(rates), k, lat);
  }
  embed_site(trip, left_block(rates), lat.l_minus, lat);
  embed_site(trip, right_block(rates), lat.l_plus, lat);
  SparseMatrix h(lat.num_configs(), std::move(trip),
                 GeneratorKind::kHamiltonian);
  check_generator(h);
  return h;
}

double current_expectation(const std::vector<double>& mu, const Rates& rates,
                           const Lattice& lat, CurrentTag tag, int bond) {
  if (mu.size() != lat.num_configs()) {
    throw std::invalid_argument("measure length does not match the lattice");
  }
  if (tag == CurrentTag::kBulkBond &&
      (bond < lat.l_minus || bond >= lat.l_plus)) {
    throw std::invalid_argument("bulk bond index " + std::to_string(bond) +
                                " out of range");
  }
  const int length = lat.length();
  double acc = 0.0;
  for (std::size_t c = 0; c < mu.size(); ++c) {
    const std::uint32_t bits = static_cast<std::uint32_t>(c);
    double j = 0.0;
    switch (tag) {
      case CurrentTag::kBulkBond: {
        const int nk = occupation_bits(bits, length, bond - lat.l_minus);
        const int nk1 = occupation_bits(bits, length, bond - lat.l_minus + 1);
        j = rates.r * nk * (1 - nk1) - rates.ell * (1 - nk) * nk1;
        break;
      }
      case CurrentTag::kLeftBoundary: {
        const int n = occupation_bits(bits, length, 0);
        j = rates.alpha * (1 - n) - rates.gamma * n;
        break;
      }
      case CurrentTag::kRightBoundary: {
        const int n = occupation_bits(bits, length, length - 1);
        j = rates.beta * n - rates.delta * (1 - n);
        break;
      }
    }
    acc += mu[c] * j;
  }
  return acc;
}

}  // namespace shocklab
