#include "maxwell/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace maxwell {

template <typename T>
Csr<T> Csr<T>::from_triplets(int rows, int cols, std::vector<Triplet> entries) {
  for (const Triplet& t : entries) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
      throw ShapeError("triplet index out of range");
  }
  std::sort(entries.begin(), entries.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  Csr out(rows, cols);
  out.col_idx_.reserve(entries.size());
  out.values_.reserve(entries.size());
  std::size_t i = 0;
  for (int r = 0; r < rows; ++r) {
    while (i < entries.size() && entries[i].row == r) {
      int c = entries[i].col;
      T v{};
      while (i < entries.size() && entries[i].row == r && entries[i].col == c) {
        v += entries[i].value;
        ++i;
      }
      if (v != T{}) {
        out.col_idx_.push_back(c);
        out.values_.push_back(v);
      }
    }
    out.row_ptr_[r + 1] = static_cast<int>(out.col_idx_.size());
  }
  return out;
}

template <typename T>
Csr<T> Csr<T>::identity(int n) {
  Csr out(n, n);
  out.col_idx_.resize(n);
  out.values_.assign(n, T{1});
  for (int i = 0; i < n; ++i) {
    out.col_idx_[i] = i;
    out.row_ptr_[i + 1] = i + 1;
  }
  return out;
}

template <typename T>
std::vector<T> Csr<T>::apply(const std::vector<T>& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw ShapeError("spmv: vector length does not match matrix columns");
  std::vector<T> y(rows_, T{});
  for (int r = 0; r < rows_; ++r) {
    T acc{};
    for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      acc += values_[k] * x[col_idx_[k]];
    y[r] = acc;
  }
  return y;
}

template <typename T>
void Csr<T>::apply_transpose_add(const std::vector<T>& x, T alpha,
                                 std::vector<T>& y) const {
  if (static_cast<int>(x.size()) != rows_ ||
      static_cast<int>(y.size()) != cols_)
    throw ShapeError("apply_transpose_add: shape mismatch");
  for (int r = 0; r < rows_; ++r) {
    const T xr = alpha * x[r];
    if (xr == T{}) continue;
    for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      y[col_idx_[k]] += values_[k] * xr;
  }
}

template <typename T>
Csr<T> Csr<T>::transposed() const {
  Csr out(cols_, rows_);
  std::vector<int> count(cols_, 0);
  for (int c : col_idx_) ++count[c];
  for (int c = 0; c < cols_; ++c) out.row_ptr_[c + 1] = out.row_ptr_[c] + count[c];
  out.col_idx_.resize(nnz());
  out.values_.resize(nnz());
  std::vector<int> next(out.row_ptr_.begin(), out.row_ptr_.end() - 1);
  for (int r = 0; r < rows_; ++r) {
    for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      int pos = next[col_idx_[k]]++;
      out.col_idx_[pos] = r;
      out.values_[pos] = values_[k];
    }
  }
  return out;
}

template <typename T>
T Csr<T>::coeff(int row, int col) const {
  for (int k = row_ptr_[row]; k < row_ptr_[row + 1]; ++k)
    if (col_idx_[k] == col) return values_[k];
  return T{};
}

template <typename T>
bool Csr<T>::structurally_valid() const {
  if (static_cast<int>(row_ptr_.size()) != rows_ + 1) return false;
  if (row_ptr_.front() != 0 || row_ptr_.back() != nnz()) return false;
  for (int r = 0; r < rows_; ++r) {
    if (row_ptr_[r] > row_ptr_[r + 1]) return false;
    for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      if (col_idx_[k] < 0 || col_idx_[k] >= cols_) return false;
      if (k > row_ptr_[r] && col_idx_[k - 1] >= col_idx_[k]) return false;
    }
  }
  return true;
}

template <typename T>
Csr<T> spgemm(const Csr<T>& a, const Csr<T>& b) {
  if (a.cols() != b.rows())
    throw ShapeError("spgemm: inner dimensions do not match");
  Csr<T> out(a.rows(), b.cols());
  std::vector<T> acc(b.cols(), T{});
  std::vector<int> marker(b.cols(), -1);
  std::vector<int> cols_in_row;
  for (int r = 0; r < a.rows(); ++r) {
    cols_in_row.clear();
    for (int ka = a.row_ptr_[r]; ka < a.row_ptr_[r + 1]; ++ka) {
      const int ac = a.col_idx_[ka];
      const T av = a.values_[ka];
      for (int kb = b.row_ptr_[ac]; kb < b.row_ptr_[ac + 1]; ++kb) {
        const int bc = b.col_idx_[kb];
        if (marker[bc] != r) {
          marker[bc] = r;
          acc[bc] = T{};
          cols_in_row.push_back(bc);
        }
        acc[bc] += av * b.values_[kb];
      }
    }
    std::sort(cols_in_row.begin(), cols_in_row.end());
    for (int c : cols_in_row) {
      if (acc[c] != T{}) {
        out.col_idx_.push_back(c);
        out.values_.push_back(acc[c]);
      }
    }
    out.row_ptr_[r + 1] = static_cast<int>(out.col_idx_.size());
  }
  return out;
}

template <typename T>
Csr<T> add_scaled(const Csr<T>& a, T alpha, const Csr<T>& b, T beta) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("add_scaled: shape mismatch");
  Csr<T> out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    int ka = a.row_ptr_[r], kb = b.row_ptr_[r];
    const int ea = a.row_ptr_[r + 1], eb = b.row_ptr_[r + 1];
    while (ka < ea || kb < eb) {
      int c;
      T v{};
      if (kb >= eb || (ka < ea && a.col_idx_[ka] < b.col_idx_[kb])) {
        c = a.col_idx_[ka];
        v = alpha * a.values_[ka++];
      } else if (ka >= ea || b.col_idx_[kb] < a.col_idx_[ka]) {
        c = b.col_idx_[kb];
        v = beta * b.values_[kb++];
      } else {
        c = a.col_idx_[ka];
        v = alpha * a.values_[ka++] + beta * b.values_[kb++];
      }
      if (v != T{}) {
        out.col_idx_.push_back(c);
        out.values_.push_back(v);
      }
    }
    out.row_ptr_[r + 1] = static_cast<int>(out.col_idx_.size());
  }
  return out;
}

template class Csr<double>;
template class Csr<long long>;
template Csr<double> Csr<long long>::cast<double>() const;
template Csr<double> spgemm(const Csr<double>&, const Csr<double>&);
template Csr<long long> spgemm(const Csr<long long>&, const Csr<long long>&);
template Csr<double> add_scaled(const Csr<double>&, double, const Csr<double>&,
                                double);
template Csr<long long> add_scaled(const Csr<long long>&, long long,
                                   const Csr<long long>&, long long);

SparseMatrix diagonal_matrix(const std::vector<double>& d) {
  std::vector<SparseMatrix::Triplet> trip;
  trip.reserve(d.size());
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    trip.push_back({i, i, d[i]});
  return SparseMatrix::from_triplets(static_cast<int>(d.size()),
                                     static_cast<int>(d.size()),
                                     std::move(trip));
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm2(const std::vector<double>& x) { return std::sqrt(dot(x, x)); }

double norm_inf(const std::vector<double>& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(double alpha, std::vector<double>& x) {
  for (double& v : x) v *= alpha;
}

void write_matrix_market(const std::string& path, const SparseMatrix& a) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << a.rows() << " " << a.cols() << " " << a.nnz() << "\n";
  char buf[64];
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = a.row_ptr()[r]; k < a.row_ptr()[r + 1]; ++k) {
      std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", r + 1,
                    a.col_idx()[k] + 1, a.values()[k]);
      out << buf;
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

SparseMatrix read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) ||
      line.rfind("%%MatrixMarket matrix coordinate real general", 0) != 0)
    throw std::runtime_error(path + ": not a coordinate real general file");
  do {
    if (!std::getline(in, line))
      throw std::runtime_error(path + ": missing size line");
  } while (!line.empty() && line[0] == '%');
  std::istringstream sz(line);
  int rows, cols, nnz;
  if (!(sz >> rows >> cols >> nnz))
    throw std::runtime_error(path + ": bad size line");
  std::vector<SparseMatrix::Triplet> trip;
  trip.reserve(nnz);
  for (int i = 0; i < nnz; ++i) {
    int r, c;
    double v;
    if (!(in >> r >> c >> v))
      throw std::runtime_error(path + ": truncated entry list");
    trip.push_back({r - 1, c - 1, v});
  }
  return SparseMatrix::from_triplets(rows, cols, std::move(trip));
}

}  // namespace maxwell
