#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cascade/dynamics.hpp"
#include "cascade/errors.hpp"
#include "cascade/validation.hpp"

#include <cmath>

using namespace cascade;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = a + (b - a) * k / (n - 1);
  return v;
}

}  // namespace

TEST_CASE("free cascade decay from |4>") {
  const double G2 = 1.0, G3 = 2.0, G4 = 0.5;
  const AffineGenerator gen = build_generator(SystemParams::from_gammas(G2, G3, G4));
  const auto ts = linspace(0.0, 6.0, 25);
  for (Backend b : {Backend::expm, Backend::rk}) {
    const Trajectory tr = evolve(gen, prepare_state(4), ts, b);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const double t = ts[k];
      const double p4 = std::exp(-G4 * t);
      const double p3 = G4 / (G3 - G4) * (std::exp(-G4 * t) - std::exp(-G3 * t));
      const double p2 = G3 * G4 *
                        (std::exp(-G4 * t) / ((G3 - G4) * (G2 - G4)) + std::exp(-G3 * t) / ((G4 - G3) * (G2 - G3)) +
                         std::exp(-G2 * t) / ((G4 - G2) * (G3 - G2)));
      CHECK(std::abs(tr.states[k].population(4) - p4) < 1e-9);
      CHECK(std::abs(tr.states[k].population(3) - p3) < 1e-9);
      CHECK(std::abs(tr.states[k].population(2) - p2) < 1e-9);
    }
  }
}

TEST_CASE("free coherence decays at half the level width") {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = rho(1, 1) = 0.5;
  rho(0, 1) = rho(1, 0) = 0.5;
  SystemParams p = SystemParams::from_gammas(1.2, 1.0, 1.0);
  p.delta1 = 0.7;
  const Trajectory tr = evolve(build_generator(p), DensityMatrix(rho).to_state(), {0.0, 1.0, 2.5});
  for (std::size_t k = 0; k < 3; ++k) {
    const double t = tr.times[k];
    const auto expected = 0.5 * std::exp(std::complex<double>(-0.6, -0.7) * t);
    CHECK(std::abs(tr.states[k].element(1, 2) - expected) < 1e-12);
  }
}

TEST_CASE("steady state is a fixed point and the long-time limit") {
  for (int k = 0; k < 10; ++k) {
    const AffineGenerator gen = build_generator(random_params(7, k));
    const StateVector ss = steady_state(gen);
    CHECK(gen.rhs(ss.vec()).cwiseAbs().maxCoeff() < 1e-12);
    const double T = 60.0 / gen.params.min_gamma();
    const Trajectory tr = evolve(gen, prepare_state(1 + k % 4), {T});
    CHECK((tr.states[0].vec() - ss.vec()).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(ss.to_density().matrix().trace().real() == doctest::Approx(1.0));
  }
}

TEST_CASE("backends agree with each other and the long-double reference (property)") {
  const auto ts = linspace(0.0, 10.0, 21);
  for (int k = 0; k < 8; ++k) {
    const AffineGenerator gen = build_generator(random_params(11, k));
    const StateVector x0 = prepare_state(1 + k % 4);
    const Trajectory a = evolve(gen, x0, ts, Backend::expm);
    const Trajectory b = evolve(gen, x0, ts, Backend::rk);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      CHECK((a.states[i].vec() - b.states[i].vec()).cwiseAbs().maxCoeff() < 1e-8);
      CHECK((a.states[i].vec() - brute_force_evolve(gen, x0, ts[i]).vec()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("populations stay in [0, 1] and trace is conserved (property)") {
  for (int k = 0; k < 10; ++k) {
    const AffineGenerator gen = build_generator(random_params(5, k));
    const Trajectory tr = evolve(gen, prepare_state(1 + k % 4), linspace(0.0, 8.0, 81));
    for (const StateVector& x : tr.states) {
      double sum = 0.0;
      for (int level = 1; level <= 4; ++level) {
        CHECK(x.population(level) >= -1e-10);
        CHECK(x.population(level) <= 1.0 + 1e-10);
        sum += x.population(level);
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
      const Eigen::Matrix4cd rho = x.to_density().matrix();
      const Eigen::Vector4d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(rho).eigenvalues();
      CHECK(ev.minCoeff() > -1e-9);
    }
  }
}

TEST_CASE("time grid checks") {
  const AffineGenerator gen = build_generator(fig2_params());
  CHECK_THROWS_AS(evolve(gen, prepare_state(1), {1.0, 0.5}), InvalidArgument);
  CHECK_THROWS_AS(evolve(gen, prepare_state(1), {-1.0, 0.5}), InvalidArgument);
  const Trajectory tr = evolve(gen, prepare_state(3), {0.0});
  CHECK(tr.states[0].population(3) == 1.0);
}

TEST_CASE("backend names") {
  CHECK(backend_from_string("rk") == Backend::rk);
  CHECK(to_string(Backend::expm) == "expm");
  CHECK_THROWS_AS(backend_from_string("euler"), InvalidArgument);
}
