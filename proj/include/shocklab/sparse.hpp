#ifndef SHOCKLAB_SPARSE_HPP
#define SHOCKLAB_SPARSE_HPP

#include <cstddef>
#include <vector>

namespace shocklab {

// Convention of a square sparse generator.
//   kIntensity:   rows sum to zero, off-diagonal entries >= 0 (matrix W or Q)
//   kHamiltonian: columns sum to zero (matrix H = -W^T or G = -Q^T)
enum class GeneratorKind { kIntensity, kHamiltonian };

struct Triplet {
  std::size_t row;
  std::size_t col;
  double value;
};

// Square sparse matrix in CSR layout.  Duplicate triplets are summed when
// the matrix is compressed.  Immutable after construction.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t dim, std::vector<Triplet> triplets,
               GeneratorKind kind = GeneratorKind::kIntensity);

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return values_.size(); }
  GeneratorKind kind() const { return kind_; }

  // y = A x (rows are independent; parallelized for large dimensions)
  std::vector<double> apply(const std::vector<double>& x) const;
  // y = A^T x
  std::vector<double> apply_transpose(const std::vector<double>& x) const;

  double entry(std::size_t row, std::size_t col) const;
  double max_abs_diagonal() const;
  std::vector<double> row_sums() const;
  std::vector<double> column_sums() const;

  // Largest |row sum| (intensity) or |column sum| (Hamiltonian), plus the
  // most negative off-diagonal entry for intensity matrices.  Used by the
  // generator-convention checks.
  double convention_residual() const;
  double min_offdiagonal() const;

  std::vector<std::vector<double>> to_dense() const;
  SparseMatrix transposed() const;
  SparseMatrix negated_transpose(GeneratorKind kind) const;

  const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::size_t>& cols() const { return cols_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t dim_ = 0;
  GeneratorKind kind_ = GeneratorKind::kIntensity;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> cols_;
  std::vector<double> values_;
};

// Throws std::invalid_argument when the stated convention is violated
// beyond tol (1e-13 by default, per the generator contracts).
void check_generator(const SparseMatrix& m, double tol = 1e-13);

}  // namespace shocklab

#endif
