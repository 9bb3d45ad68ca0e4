#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cascade/errors.hpp"
#include "cascade/model.hpp"
#include "cascade/validation.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

using namespace cascade;

namespace {

std::vector<double> sorted_real_parts(const Mat15& A) {
  const Eigen::VectorXcd ev = Eigen::EigenSolver<Mat15>(A, false).eigenvalues();
  std::vector<double> re;
  for (const auto& e : ev) re.push_back(e.real());
  std::sort(re.begin(), re.end());
  return re;
}

}  // namespace

TEST_CASE("presets") {
  const SystemParams p = SystemParams::preset(GammaPreset::physical);
  CHECK(p.gamma2 == doctest::Approx(6.0 / (2 * std::numbers::pi)));
  CHECK(p.gamma4 == doctest::Approx(0.97 / (2 * std::numbers::pi)));
  CHECK(p.gamma23 == p.gamma3);
  CHECK(p.gamma34 == p.gamma4);
  CHECK(p.gamma24 == 0.0);
  const SystemParams u = SystemParams::preset(GammaPreset::unit);
  CHECK(u.gamma2 == 1.0);
  CHECK(u.gamma4 == 0.16);
  const SystemParams f = fig2_params(GammaPreset::unit);
  CHECK(f.omega1 == 4.0);
  CHECK(f.omega_rf == 20.0);
  CHECK(f.omega3 == 4.0);
  CHECK(fig4_params(10.0).omega_rf == 10.0);
  CHECK(gamma_preset_from_string("unit") == GammaPreset::unit);
  CHECK_THROWS_AS(gamma_preset_from_string("bogus"), InvalidArgument);
}

TEST_CASE("parameter validation") {
  SystemParams p = SystemParams::preset(GammaPreset::unit);
  p.gamma2 = 0.0;
  CHECK_THROWS_AS(build_generator(p), InvalidParams);
  p = SystemParams::preset(GammaPreset::unit);
  p.omega1 = -1.0;
  CHECK_THROWS_AS(build_generator(p), InvalidParams);
  p.omega1 = std::nan("");
  CHECK_THROWS_AS(build_generator(p), InvalidParams);
  p.omega1 = 1.0;
  p.delta1 = -3.0;
  CHECK_NOTHROW(build_generator(p));
}

TEST_CASE("prepare_state") {
  for (int level = 1; level <= 4; ++level) {
    const StateVector x = prepare_state(level);
    for (int j = 1; j <= 4; ++j) CHECK(x.population(j) == (j == level ? 1.0 : 0.0));
  }
  CHECK_THROWS_AS(prepare_state(0), InvalidLevel);
  CHECK_THROWS_AS(prepare_state(5), InvalidLevel);
}

TEST_CASE("density matrix round trip") {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = 0.4;
  rho(1, 1) = 0.3;
  rho(2, 2) = 0.2;
  rho(3, 3) = 0.1;
  rho(0, 2) = {0.05, -0.02};
  rho(2, 0) = std::conj(rho(0, 2));
  rho(1, 3) = {0.01, 0.03};
  rho(3, 1) = std::conj(rho(1, 3));
  const StateVector x = DensityMatrix(rho).to_state();
  CHECK(x.population(1) == doctest::Approx(0.4));
  CHECK(std::abs(x.element(1, 3) - rho(0, 2)) < 1e-15);
  CHECK(std::abs(x.element(4, 2) - rho(3, 1)) < 1e-15);
  CHECK((x.to_density().matrix() - rho).cwiseAbs().maxCoeff() < 1e-15);

  Eigen::Matrix4cd bad = rho;
  bad(0, 2) = 1.0;
  CHECK_THROWS_AS(DensityMatrix{bad}, InvalidArgument);
  bad = rho;
  bad(0, 0) = 0.5;
  CHECK_THROWS_AS(DensityMatrix{bad}, InvalidArgument);
}

TEST_CASE("undriven spectrum: populations decay at Gamma, coherences at half sums") {
  SystemParams p = SystemParams::from_gammas(1.0, 2.0, 0.5);
  p.delta1 = 0.3;
  const std::vector<double> re = sorted_real_parts(build_generator(p).A);
  // rho22, rho33, rho44: -G2, -G3, -G4; coherences (each twice):
  // 12: -G2/2, 23: -(G2+G3)/2, 34: -(G3+G4)/2, 13: -G3/2, 14: -G4/2, 24: -(G2+G4)/2
  std::vector<double> expected = {-1.0, -2.0, -0.5, -0.5, -0.5, -1.5, -1.5, -1.25, -1.25,
                                  -1.0, -1.0, -0.25, -0.25, -0.75, -0.75};
  std::sort(expected.begin(), expected.end());
  for (int k = 0; k < kDim; ++k) CHECK(re[k] == doctest::Approx(expected[k]).epsilon(1e-12));
}

TEST_CASE("two-level steady state matches the Bloch-equation value") {
  for (double omega : {0.3, 1.0, 4.0}) {
    const double G = 1.3;
    const AffineGenerator gen = build_generator(SystemParams::from_gammas(G, 1.0, 1.0).with_drives(omega, 0, 0));
    Eigen::Matrix<double, kDim, 1> x = gen.A.partialPivLu().solve(-gen.b);
    CHECK(x[kP22] == doctest::Approx(4 * omega * omega / (G * G + 8 * omega * omega)).epsilon(1e-12));
    CHECK(x[kIm12] == doctest::Approx(2 * omega * (1 - 2 * x[kP22]) / G).epsilon(1e-12));
  }
}

TEST_CASE("generator preserves Hermiticity and trace (property)") {
  for (int k = 0; k < 50; ++k) {
    SystemParams p = random_params(99, k);
    p.delta1 = 0.1 * k - 2.0;
    p.delta3 = 0.05 * k;
    const AffineGenerator gen = build_generator(p);
    for (double re : sorted_real_parts(gen.A)) CHECK(re <= 1e-10);
    // With only |2> populated, everything leaving it goes to |1>.
    Vec15 x = prepare_state(2).vec();
    const Vec15 dx = gen.rhs(x);
    CHECK(dx[kP22] + dx[kP33] + dx[kP44] == doctest::Approx(-p.gamma2));
  }
}

TEST_CASE("printed branching is unstable") {
  const AffineGenerator gen = build_generator(SystemParams::printed_branching(GammaPreset::physical).with_drives(4, 20, 4));
  CHECK(sorted_real_parts(gen.A).back() > 0.0);
}

TEST_CASE("coherence slots") {
  CHECK(coherence_slot(1, 2) == kRe12);
  CHECK(coherence_slot(2, 4) == kRe24);
  CHECK_THROWS_AS(coherence_slot(2, 1), InvalidArgument);
}
