#include "shocklab/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "shocklab/parallel.hpp"

namespace shocklab {

SparseMatrix::SparseMatrix(std::size_t dim, std::vector<Triplet> triplets,
                           GeneratorKind kind)
    : dim_(dim), kind_(kind) {
  for (const Triplet& t : triplets) {
    if (t.row >= dim || t.col >= dim) {
      throw std::invalid_argument("triplet index out of range");
    }
  }
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  row_ptr_.assign(dim + 1, 0);
  cols_.reserve(triplets.size());
  values_.reserve(triplets.size());
  for (std::size_t i = 0; i < triplets.size();) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < triplets.size() && triplets[j].row == triplets[i].row &&
           triplets[j].col == triplets[i].col) {
      sum += triplets[j].value;
      ++j;
    }
    cols_.push_back(triplets[i].col);
    values_.push_back(sum);
    ++row_ptr_[triplets[i].row + 1];
    i = j;
  }
  for (std::size_t r = 0; r < dim; ++r) row_ptr_[r + 1] += row_ptr_[r];
}

std::vector<double> SparseMatrix::apply(const std::vector<double>& x) const {
  if (x.size() != dim_) {
    throw std::invalid_argument("matvec dimension mismatch: " +
                                std::to_string(x.size()) + " vs " +
                                std::to_string(dim_));
  }
  std::vector<double> y(dim_, 0.0);
  auto row_product = [&](std::size_t r) {
    double acc = 0.0;
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      acc += values_[k] * x[cols_[k]];
    }
    y[r] = acc;
  };
  if (dim_ >= 8192) {
    parallel_for(dim_, hardware_threads(), row_product);
  } else {
    for (std::size_t r = 0; r < dim_; ++r) row_product(r);
  }
  return y;
}

std::vector<double> SparseMatrix::apply_transpose(
    const std::vector<double>& x) const {
  if (x.size() != dim_) {
    throw std::invalid_argument("matvec dimension mismatch");
  }
  std::vector<double> y(dim_, 0.0);
  for (std::size_t r = 0; r < dim_; ++r) {
    const double xr = x[r];
    if (xr == 0.0) continue;
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      y[cols_[k]] += values_[k] * xr;
    }
  }
  return y;
}

double SparseMatrix::entry(std::size_t row, std::size_t col) const {
  for (std::size_t k = row_ptr_[row]; k < row_ptr_[row + 1]; ++k) {
    if (cols_[k] == col) return values_[k];
  }
  return 0.0;
}

double SparseMatrix::max_abs_diagonal() const {
  double m = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    m = std::max(m, std::abs(entry(r, r)));
  }
  return m;
}

std::vector<double> SparseMatrix::row_sums() const {
  std::vector<double> s(dim_, 0.0);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      s[r] += values_[k];
    }
  }
  return s;
}

std::vector<double> SparseMatrix::column_sums() const {
  std::vector<double> s(dim_, 0.0);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      s[cols_[k]] += values_[k];
    }
  }
  return s;
}

double SparseMatrix::convention_residual() const {
  const std::vector<double> sums =
      kind_ == GeneratorKind::kIntensity ? row_sums() : column_sums();
  double m = 0.0;
  for (double s : sums) m = std::max(m, std::abs(s));
  return m;
}

double SparseMatrix::min_offdiagonal() const {
  double m = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      if (cols_[k] != r) m = std::min(m, values_[k]);
    }
  }
  return m;
}

std::vector<std::vector<double>> SparseMatrix::to_dense() const {
  std::vector<std::vector<double>> d(dim_, std::vector<double>(dim_, 0.0));
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      d[r][cols_[k]] += values_[k];
    }
  }
  return d;
}

SparseMatrix SparseMatrix::transposed() const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      t.push_back({cols_[k], r, values_[k]});
    }
  }
  return SparseMatrix(dim_, std::move(t), kind_);
}

SparseMatrix SparseMatrix::negated_transpose(GeneratorKind kind) const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      t.push_back({cols_[k], r, -values_[k]});
    }
  }
  return SparseMatrix(dim_, std::move(t), kind);
}

void check_generator(const SparseMatrix& m, double tol) {
  const double res = m.convention_residual();
  if (res > tol) {
    throw std::invalid_argument(
        (m.kind() == GeneratorKind::kIntensity
             ? std::string("intensity matrix row sums off by ")
             : std::string("Hamiltonian column sums off by ")) +
        std::to_string(res));
  }
  if (m.kind() == GeneratorKind::kIntensity && m.min_offdiagonal() < -tol) {
    throw std::invalid_argument("negative off-diagonal rate " +
                                std::to_string(m.min_offdiagonal()));
  }
}

}  // namespace shocklab
