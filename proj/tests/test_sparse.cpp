#include <cstdio>
#include <random>

#include "doctest.h"
#include "maxwell/sparse.hpp"
#include "test_support.hpp"

using maxwell::IntMatrix;
using maxwell::SparseMatrix;
using testsupport::to_dense;

namespace {

SparseMatrix random_sparse(int rows, int cols, double density,
                           std::mt19937& rng) {
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<SparseMatrix::Triplet> trips;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (coin(rng) < density) trips.push_back({r, c, val(rng)});
  return SparseMatrix::from_triplets(rows, cols, std::move(trips));
}

}  // namespace

TEST_SUITE("sparse") {

TEST_CASE("from_triplets sums duplicates and drops zeros") {
  SparseMatrix a = SparseMatrix::from_triplets(
      2, 2, {{0, 0, 1.5}, {0, 0, 2.5}, {1, 1, 3.0}, {1, 1, -3.0}, {1, 0, 0.0}});
  CHECK(a.nnz() == 1);
  CHECK(a.coeff(0, 0) == 4.0);
  CHECK(a.coeff(1, 1) == 0.0);
  CHECK(a.structurally_valid());
}

TEST_CASE("identity and coeff") {
  SparseMatrix i = SparseMatrix::identity(4);
  CHECK(i.nnz() == 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(i.coeff(r, c) == (r == c ? 1.0 : 0.0));
}

TEST_CASE("spmv matches dense oracle on random 50x50") {
  std::mt19937 rng(7);
  SparseMatrix a = random_sparse(50, 50, 0.2, rng);
  std::vector<double> x = testsupport::random_vector(50, rng);
  std::vector<double> y = maxwell::spmv(a, x);
  Eigen::VectorXd xe = Eigen::Map<Eigen::VectorXd>(x.data(), 50);
  Eigen::VectorXd ye = to_dense(a) * xe;
  for (int r = 0; r < 50; ++r)
    CHECK(std::abs(y[r] - ye(r)) <= 1e-14 * (1.0 + std::abs(ye(r))));
}

TEST_CASE("apply_transpose_add matches dense oracle") {
  std::mt19937 rng(8);
  SparseMatrix a = random_sparse(30, 40, 0.15, rng);
  std::vector<double> x = testsupport::random_vector(30, rng);
  std::vector<double> y = testsupport::random_vector(40, rng);
  Eigen::VectorXd ye = Eigen::Map<Eigen::VectorXd>(y.data(), 40) +
                       0.7 * to_dense(a).transpose() *
                           Eigen::Map<Eigen::VectorXd>(x.data(), 30);
  a.apply_transpose_add(x, 0.7, y);
  for (int r = 0; r < 40; ++r) CHECK(y[r] == doctest::Approx(ye(r)).epsilon(1e-13));
}

TEST_CASE("double transpose is bitwise identity") {
  std::mt19937 rng(9);
  SparseMatrix a = random_sparse(20, 35, 0.2, rng);
  SparseMatrix att = maxwell::transpose(maxwell::transpose(a));
  REQUIRE(att.nnz() == a.nnz());
  CHECK(att.row_ptr() == a.row_ptr());
  CHECK(att.col_idx() == a.col_idx());
  CHECK(att.values() == a.values());
}

TEST_CASE("spgemm matches dense oracle") {
  std::mt19937 rng(10);
  SparseMatrix a = random_sparse(18, 25, 0.3, rng);
  SparseMatrix b = random_sparse(25, 12, 0.3, rng);
  Eigen::MatrixXd prod = to_dense(a) * to_dense(b);
  Eigen::MatrixXd got = to_dense(maxwell::spgemm(a, b));
  CHECK((got - prod).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("add_scaled matches dense oracle") {
  std::mt19937 rng(11);
  SparseMatrix a = random_sparse(15, 15, 0.3, rng);
  SparseMatrix b = random_sparse(15, 15, 0.3, rng);
  Eigen::MatrixXd want = 2.5 * to_dense(a) - 0.5 * to_dense(b);
  Eigen::MatrixXd got = to_dense(maxwell::add_scaled(a, 2.5, b, -0.5));
  CHECK((got - want).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("shape mismatches raise ShapeError") {
  SparseMatrix a(3, 4), b(5, 2);
  CHECK_THROWS_AS((void)maxwell::spgemm(a, b), maxwell::ShapeError);
  CHECK_THROWS_AS((void)maxwell::add_scaled(a, 1.0, b, 1.0),
                  maxwell::ShapeError);
  CHECK_THROWS_AS((void)a.apply(std::vector<double>(3, 0.0)),
                  maxwell::ShapeError);
}

TEST_CASE("integer-mode algebra is exact") {
  IntMatrix a = IntMatrix::from_triplets(2, 2, {{0, 0, 3}, {0, 1, -2},
                                                {1, 0, 1}, {1, 1, 1}});
  IntMatrix b = IntMatrix::from_triplets(2, 2, {{0, 0, 2}, {0, 1, 4},
                                                {1, 0, 3}, {1, 1, 6}});
  IntMatrix ab = maxwell::spgemm(a, b);
  CHECK(ab.coeff(0, 0) == 0);  // 3*2 - 2*3, exact cancellation drops entry
  CHECK(ab.coeff(0, 1) == 0);
  CHECK(ab.coeff(1, 0) == 5);
  CHECK(ab.coeff(1, 1) == 10);
  CHECK(ab.nnz() == 2);
}

TEST_CASE("matrix market roundtrip") {
  std::mt19937 rng(12);
  SparseMatrix a = random_sparse(9, 13, 0.25, rng);
  const std::string path = "/tmp/test_mm.mtx";
  maxwell::write_matrix_market(path, a);
  SparseMatrix b = maxwell::read_matrix_market(path);
  REQUIRE(b.rows() == a.rows());
  REQUIRE(b.cols() == a.cols());
  REQUIRE(b.nnz() == a.nnz());
  CHECK(b.col_idx() == a.col_idx());
  CHECK(b.values() == a.values());  // %.17g is bit-exact for doubles
  std::remove(path.c_str());
}

TEST_CASE("diagonal_matrix and vector helpers") {
  SparseMatrix d = maxwell::diagonal_matrix({2.0, 3.0});
  std::vector<double> y = d.apply({1.0, -1.0});
  CHECK(y[0] == 2.0);
  CHECK(y[1] == -3.0);
  std::vector<double> v{3.0, -4.0};
  CHECK(maxwell::norm2(v) == doctest::Approx(5.0));
  CHECK(maxwell::norm_inf(v) == 4.0);
  CHECK(maxwell::dot(v, v) == doctest::Approx(25.0));
  maxwell::axpy(2.0, {1.0, 1.0}, v);
  CHECK(v[0] == 5.0);
  maxwell::scale(0.5, v);
  CHECK(v[0] == 2.5);
}

}  // TEST_SUITE
