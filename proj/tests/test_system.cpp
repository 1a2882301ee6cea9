#include <random>

#include "doctest.h"
#include "maxwell/system.hpp"
#include "test_support.hpp"

using namespace maxwell;
using testsupport::to_dense;

TEST_SUITE("system") {

TEST_CASE("block vector helpers") {
  BlockVector x(2, 3, 1);
  x.B = {1.0, 2.0};
  x.E = {0.0, -1.0, 2.0};
  x.p = {3.0};
  CHECK(x.size() == 6);
  CHECK(dot(x, x) == doctest::Approx(1 + 4 + 1 + 4 + 9));
  CHECK(norm2(x) == doctest::Approx(std::sqrt(19.0)));
  BlockVector y = x;
  axpy(-1.0, x, y);
  CHECK(norm2(y) == 0.0);
  scale(2.0, x);
  CHECK(x.p[0] == 6.0);
}

TEST_CASE("column structure of the operator") {
  testsupport::Fixture fx(testsupport::box_spec(2));
  const double tau = 0.1;
  SystemOperator op = build_system(tau, fx.forms, fx.inc, false);

  std::mt19937 rng(31);
  BlockVector x = op.zero_vector();
  x.B = testsupport::random_vector(op.b_size(), rng);
  BlockVector y = op.apply(x);

  std::vector<double> want_b = fx.forms.Mb.apply(x.B);
  scale(2.0 / tau, want_b);
  std::vector<double> want_e(op.e_size(), 0.0);
  spgemm(fx.forms.Mb, fx.inc.Kd).apply_transpose_add(x.B, -1.0, want_e);
  for (int i = 0; i < op.b_size(); ++i)
    CHECK(y.B[i] == doctest::Approx(want_b[i]).epsilon(1e-13));
  for (int i = 0; i < op.e_size(); ++i)
    CHECK(y.E[i] == doctest::Approx(want_e[i]).epsilon(1e-13));
  CHECK(norm2(BlockVector{0, 0, op.p_size()}) == 0.0);
  CHECK(norm_inf(y.p) == 0.0);
}

TEST_CASE("aux differs from plain only by Dt M0 D on the B block") {
  testsupport::Fixture fx(testsupport::box_spec(2));
  const double tau = 0.2;
  SystemOperator plain = build_system(tau, fx.forms, fx.inc, false);
  SystemOperator aux = build_system(tau, fx.forms, fx.inc, true);
  SparseMatrix dtm0d =
      spgemm(transpose(fx.inc.Dd), spgemm(fx.forms.M0, fx.inc.Dd));

  std::mt19937 rng(32);
  for (int trial = 0; trial < 5; ++trial) {
    BlockVector x = testsupport::random_block(plain, rng);
    BlockVector ya = aux.apply(x);
    BlockVector yp = plain.apply(x);
    std::vector<double> extra = dtm0d.apply(x.B);
    for (int i = 0; i < plain.b_size(); ++i)
      CHECK(ya.B[i] - yp.B[i] == doctest::Approx(extra[i]).epsilon(1e-12));
    axpy(-1.0, yp.E, ya.E);
    axpy(-1.0, yp.p, ya.p);
    CHECK(norm_inf(ya.E) == 0.0);
    CHECK(norm_inf(ya.p) == 0.0);
  }
}

TEST_CASE("dense reconstruction matches blockwise assembly on n=1") {
  testsupport::Fixture fx(testsupport::box_spec(1));
  const double tau = 0.1;
  SystemOperator op = build_system(tau, fx.forms, fx.inc, false);
  const int nb = op.b_size(), ne = op.e_size(), np = op.p_size();

  Eigen::MatrixXd want = Eigen::MatrixXd::Zero(nb + ne + np, nb + ne + np);
  Eigen::MatrixXd Mb = to_dense(fx.forms.Mb), Me = to_dense(fx.forms.Me),
                  Mp = to_dense(fx.forms.Mp), Z = to_dense(fx.forms.Z),
                  K = testsupport::to_dense_int(fx.inc.K),
                  G = testsupport::to_dense_int(fx.inc.G);
  want.block(0, 0, nb, nb) = (2.0 / tau) * Mb;
  want.block(0, nb, nb, ne) = Mb * K;
  want.block(nb, 0, ne, nb) = -(Mb * K).transpose();
  want.block(nb, nb, ne, ne) = (2.0 / tau) * Me + Z;
  want.block(nb, nb + ne, ne, np) = Me * G;
  want.block(nb + ne, nb, np, ne) = -(Me * G).transpose();
  want.block(nb + ne, nb + ne, np, np) = (2.0 / tau) * Mp;

  Eigen::MatrixXd got = testsupport::operator_dense(op);
  double scale_ref = want.cwiseAbs().maxCoeff();
  CHECK((got - want).cwiseAbs().maxCoeff() <= 1e-12 * scale_ref);
}

TEST_CASE("quadratic form: skew blocks cancel") {
  testsupport::Fixture fx(testsupport::box_spec(2));
  const double tau = 0.05;
  SystemOperator op = build_system(tau, fx.forms, fx.inc, false);
  std::mt19937 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    BlockVector x = testsupport::random_block(op, rng);
    double lhs = dot(x, op.apply(x));
    double rhs = (2.0 / tau) * (dot(x.B, fx.forms.Mb.apply(x.B)) +
                                dot(x.E, fx.forms.Me.apply(x.E)) +
                                dot(x.p, fx.forms.Mp.apply(x.p))) +
                 dot(x.E, fx.forms.Z.apply(x.E));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }
}

TEST_CASE("build_system rejects nonpositive tau") {
  testsupport::Fixture fx(testsupport::box_spec(1));
  CHECK_THROWS((void)build_system(0.0, fx.forms, fx.inc, false));
}

}  // TEST_SUITE
