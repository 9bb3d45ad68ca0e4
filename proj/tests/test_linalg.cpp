#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cascade/errors.hpp"
#include "cascade/linalg.hpp"

#include <cmath>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

using namespace cascade;

TEST_CASE("exponential of diagonal, nilpotent and rotation generators") {
  Eigen::MatrixXd D = Eigen::Vector3d(-1.0, 0.5, -40.0).asDiagonal();
  const Eigen::MatrixXd E = matrix_exponential(D);
  CHECK(E(0, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(E(1, 1) == doctest::Approx(std::exp(0.5)).epsilon(1e-14));
  CHECK(E(2, 2) == doctest::Approx(std::exp(-40.0)).epsilon(1e-12));

  Eigen::MatrixXd N(2, 2);
  N << 0, 3, 0, 0;
  const Eigen::MatrixXd EN = matrix_exponential(N);
  CHECK(EN(0, 1) == doctest::Approx(3.0));
  CHECK(EN(0, 0) == doctest::Approx(1.0));

  const double th = 25.0;
  Eigen::MatrixXd R(2, 2);
  R << 0, -th, th, 0;
  const Eigen::MatrixXd ER = matrix_exponential(R);
  CHECK(std::abs(ER(0, 0) - std::cos(th)) < 1e-12);
  CHECK(std::abs(ER(1, 0) - std::sin(th)) < 1e-12);
}

TEST_CASE("exponential agrees with Eigen's MatrixFunctions on random matrices (property)") {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 15;
    const double scale = std::pow(10.0, -3.0 + 4.0 * (trial % 7) / 6.0);
    Eigen::MatrixXd M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M(i, j) = scale * nd(rng);
    const Eigen::MatrixXd ref = M.exp();
    const Eigen::MatrixXd got = matrix_exponential(M);
    CHECK((got - ref).norm() <= 1e-12 * std::max(1.0, ref.norm()));
  }
}

TEST_CASE("exp(M) exp(-M) = I") {
  Eigen::MatrixXd M = Eigen::MatrixXd::Random(15, 15) * 3.0;
  const Eigen::MatrixXd P = matrix_exponential(M) * matrix_exponential(-M);
  CHECK((P - Eigen::MatrixXd::Identity(15, 15)).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("refined solve") {
  Eigen::MatrixXd A(3, 3);
  A << 4, 1, 0, 1, 3, 1, 0, 1, 2;
  Eigen::VectorXd x(3);
  x << 1, -2, 3;
  const SolveResult r = refined_solve(A, A * x);
  CHECK((r.x - x).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(r.rcond > 0.1);

  Eigen::MatrixXd S(2, 2);
  S << 1, 1, 1, 1;
  CHECK_THROWS_AS(refined_solve(S, Eigen::Vector2d(1, 1)), SingularGenerator);
}
