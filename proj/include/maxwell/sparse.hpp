#ifndef MAXWELL_SPARSE_HPP
#define MAXWELL_SPARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxwell {

/// CSR matrix with sorted, duplicate-free column indices per row.
/// Instantiated for double (assembled operators) and long long
/// (integer-exact incidence algebra).
template <typename T>
class Csr {
 public:
  Csr() = default;
  Csr(int rows, int cols) : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

  struct Triplet {
    int row;
    int col;
    T value;
  };

  /// Builds from (row, col, value) entries; duplicates are summed and
  /// exact zeros dropped.
  static Csr from_triplets(int rows, int cols, std::vector<Triplet> entries);

  static Csr identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nnz() const { return static_cast<int>(col_idx_.size()); }

  const std::vector<int>& row_ptr() const { return row_ptr_; }
  const std::vector<int>& col_idx() const { return col_idx_; }
  const std::vector<T>& values() const { return values_; }
  std::vector<T>& values() { return values_; }

  std::vector<T> apply(const std::vector<T>& x) const;

  /// y += alpha * A^T x without forming the transpose.
  void apply_transpose_add(const std::vector<T>& x, T alpha,
                           std::vector<T>& y) const;

  Csr transposed() const;

  T coeff(int row, int col) const;

  template <typename U>
  Csr<U> cast() const {
    Csr<U> out;
    out.rows_ = rows_;
    out.cols_ = cols_;
    out.row_ptr_ = row_ptr_;
    out.col_idx_ = col_idx_;
    out.values_.reserve(values_.size());
    for (const T& v : values_) out.values_.push_back(static_cast<U>(v));
    return out;
  }

  /// Structural validity: monotone row_ptr, sorted in-range columns.
  bool structurally_valid() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> row_ptr_{0};
  std::vector<int> col_idx_;
  std::vector<T> values_;

  template <typename U>
  friend class Csr;

  template <typename U>
  friend Csr<U> spgemm(const Csr<U>&, const Csr<U>&);
  template <typename U>
  friend Csr<U> add_scaled(const Csr<U>&, U, const Csr<U>&, U);
};

using SparseMatrix = Csr<double>;
using IntMatrix = Csr<long long>;

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <typename T>
std::vector<T> spmv(const Csr<T>& a, const std::vector<T>& x) {
  return a.apply(x);
}

template <typename T>
Csr<T> transpose(const Csr<T>& a) {
  return a.transposed();
}

/// Sparse product A*B; duplicates compressed, exact zeros dropped.
template <typename T>
Csr<T> spgemm(const Csr<T>& a, const Csr<T>& b);

/// alpha*A + beta*B.
template <typename T>
Csr<T> add_scaled(const Csr<T>& a, T alpha, const Csr<T>& b, T beta);

SparseMatrix diagonal_matrix(const std::vector<double>& d);

// Dense vector helpers used throughout the solvers.
double dot(const std::vector<double>& x, const std::vector<double>& y);
double norm2(const std::vector<double>& x);
double norm_inf(const std::vector<double>& x);
void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y);
void scale(double alpha, std::vector<double>& x);

// Matrix Market coordinate real general, 1-based indices.
void write_matrix_market(const std::string& path, const SparseMatrix& a);
SparseMatrix read_matrix_market(const std::string& path);

}  // namespace maxwell

#endif  // MAXWELL_SPARSE_HPP
