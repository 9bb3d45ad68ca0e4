#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cascade/correlations.hpp"
#include "cascade/errors.hpp"
#include "cascade/validation.hpp"

#include <algorithm>
#include <cmath>

using namespace cascade;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = a + (b - a) * k / (n - 1);
  return v;
}

CorrelationSeries synthetic(const std::vector<double>& taus, double (*f)(double)) {
  CorrelationSeries s;
  s.taus = taus;
  for (double t : taus) s.values.push_back(f(t));
  return s;
}

}  // namespace

TEST_CASE("mode pairs") {
  for (const char* ok : {"11", "33", "31", "21", "32"}) CHECK_NOTHROW(ModePair::parse(ok).validate());
  CHECK_THROWS_AS(ModePair::parse("44").validate(), InvalidArgument);
  CHECK_THROWS_AS(ModePair::parse("3"), InvalidArgument);
  const ModePair p = ModePair::parse("31");
  CHECK(p.init_level() == 3);
  CHECK(p.observed_level() == 2);
  CHECK(p.label() == "31");
}

TEST_CASE("tau grids") {
  for (GridSpacing sp : {GridSpacing::linear, GridSpacing::log_linear}) {
    const auto g = make_tau_grid(7.0, 200, sp);
    CHECK(g.size() == 200);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == doctest::Approx(7.0));
    CHECK(std::adjacent_find(g.begin(), g.end(), std::greater_equal<>()) == g.end());
  }
  const auto d = default_tau_grid(SystemParams::preset(GammaPreset::unit));
  CHECK(d.size() == 2000);
  CHECK(d.back() == doctest::Approx(10.0 / 0.16));
  CHECK_THROWS_AS(make_tau_grid(-1.0, 10), InvalidArgument);
  CHECK(spacing_from_string("linear") == GridSpacing::linear);
}

TEST_CASE("single-drive g11 is the resonance-fluorescence result") {
  const double G = 1.0, omega = 2.0;
  const AffineGenerator gen = build_generator(SystemParams::from_gammas(G, 1.0, 1.0).with_drives(omega, 0, 0));
  const auto taus = linspace(0.0, 8.0, 81);
  const CorrelationSeries s = g2(gen, {1, 1}, taus);
  const double mu = std::sqrt(4 * omega * omega - G * G / 16);
  for (std::size_t k = 0; k < taus.size(); ++k) {
    const double t = taus[k];
    const double expected = 1 - std::exp(-0.75 * G * t) * (std::cos(mu * t) + 0.75 * G / mu * std::sin(mu * t));
    CHECK(std::abs(s.values[k] - expected) < 1e-10);
  }
  CHECK(s.norm == doctest::Approx(4 * omega * omega / (G * G + 8 * omega * omega)));
}

TEST_CASE("g31 vanishes at zero delay and every g2 tends to one (property)") {
  for (int k = 0; k < 25; ++k) {
    const AffineGenerator gen = build_generator(random_params(3, k));
    const double T = 50.0 / gen.params.min_gamma();
    const CorrelationSeries s31 = g2(gen, {3, 1}, make_tau_grid(10.0 / gen.params.min_gamma(), 300));
    CHECK(s31.values.front() == 0.0);
    CHECK(*std::max_element(s31.values.begin(), s31.values.end()) > 0.0);
    for (const char* pair : {"11", "33", "31", "21", "32"}) {
      const CorrelationSeries s = g2(gen, ModePair::parse(pair), {0.0, T});
      CHECK(std::abs(s.values.back() - 1.0) < 1e-6);
      CHECK(s.values.front() >= -1e-12);
    }
  }
}

TEST_CASE("auto-correlations antibunch, adjacent pairs bunch on the Fig. 2 preset") {
  const AffineGenerator gen = build_generator(fig2_params());
  CHECK(std::abs(g2(gen, {1, 1}, {0.0}).values[0]) < 1e-14);
  CHECK(std::abs(g2(gen, {3, 3}, {0.0}).values[0]) < 1e-14);
  CHECK(g2(gen, {2, 1}, {0.0}).values[0] > 0.05);
  CHECK(g2(gen, {3, 2}, {0.0}).values[0] > 0.05);
}

TEST_CASE("backends give the same correlator") {
  const AffineGenerator gen = build_generator(fig2_params());
  const auto taus = linspace(0.0, 3.0, 31);
  const auto a = g2(gen, {3, 1}, taus, Backend::expm).values;
  const auto b = g2(gen, {3, 1}, taus, Backend::rk).values;
  for (std::size_t k = 0; k < taus.size(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-6);
}

TEST_CASE("zero drive has no correlations") {
  const AffineGenerator gen = build_generator(SystemParams::preset(GammaPreset::unit));
  CHECK_THROWS_AS(g2(gen, {3, 1}, {0.0, 1.0}), ZeroSteadyState);
}

TEST_CASE("Cauchy-Schwarz ratio") {
  CorrelationSeries g31, g11, g33;
  g31.taus = g11.taus = g33.taus = {0.0, 1.0, 2.0};
  g31.values = {0.0, 2.0, 1.0};
  g11.values = {0.0, 0.5, 1.0};
  g33.values = {0.0, 2.0, 1.0};
  const CSRatioResult r = cs_ratio(g31, g11, g33);
  CHECK(r.R[0] == 0.0);
  CHECK(r.R[1] == doctest::Approx(4.0));
  CHECK(r.R[2] == doctest::Approx(1.0));
  CHECK(r.r_max == doctest::Approx(4.0));
  CHECK(r.tau_at_max == 1.0);

  const CSRatioResult lit = cs_ratio(g31, g11, g33, CsDefinition::literal);
  CHECK(lit.R[1] == doctest::Approx(4.0 / (0.5 * 1e-12)));

  CorrelationSeries other = g11;
  other.taus = {0.0, 1.0, 3.0};
  CHECK_THROWS_AS(cs_ratio(g31, other, g33), GridMismatch);
  CHECK(cs_definition_from_string("literal") == CsDefinition::literal);
}

TEST_CASE("R_max exceeds the classical bound and grows with Omega_rf") {
  double prev = 0.0;
  for (double orf : {4.0, 10.0, 20.0}) {
    const SystemParams p = fig4_params(orf);
    const AffineGenerator gen = build_generator(p);
    const auto taus = default_tau_grid(p);
    const CSRatioResult r = cs_ratio(g2(gen, {3, 1}, taus), g2(gen, {1, 1}, taus), g2(gen, {3, 3}, taus));
    CHECK(r.r_max > 1e2);
    CHECK(r.r_max > prev);
    prev = r.r_max;
  }
}

TEST_CASE("tau_delay on a known peak") {
  const auto taus = linspace(0.0, 5.0, 51);
  const double td = tau_delay(synthetic(taus, [](double t) { return t * std::exp(-t); }));
  CHECK(td == doctest::Approx(1.0).epsilon(2e-3));
  const double tq = tau_delay(synthetic(taus, [](double t) { return -(t - 1.23) * (t - 1.23); }));
  CHECK(tq == doctest::Approx(1.23).epsilon(1e-12));
  CHECK_THROWS_AS(tau_delay(synthetic(taus, [](double t) { return std::exp(-t); })), NoPeak);
}

TEST_CASE("adaptive tau_d matches a dense-grid peak") {
  const AffineGenerator gen = build_generator(fig2_params());
  const double td = tau_delay_adaptive(gen);
  const CorrelationSeries dense = g2(gen, {3, 1}, linspace(0.0, 0.5, 5001));
  CHECK(td == doctest::Approx(tau_delay(dense)).epsilon(1e-5));
}

TEST_CASE("delay scans") {
  const auto grid = linspace(4.0, 20.0, 5);
  const DelayScan s = scan_tau_d(SystemParams::preset(GammaPreset::physical).with_drives(4, 4, 4), SweptField::omega_rf, grid);
  CHECK(s.field_values == grid);
  CHECK(s.tau_d.size() == grid.size());
  for (std::size_t k = 1; k < grid.size(); ++k) CHECK(s.tau_d[k] < s.tau_d[k - 1]);
  for (const auto& e : s.errors) CHECK(e.empty());

  const DelayScan again = scan_tau_d(SystemParams::preset(GammaPreset::physical).with_drives(4, 4, 4), SweptField::omega_rf, grid);
  CHECK(again.tau_d == s.tau_d);

  CHECK(with_field(SystemParams{}, SweptField::omega3, 7.0).omega3 == 7.0);
  CHECK(swept_field_from_string("omega2") == SweptField::omega_rf);
  CHECK_THROWS_AS(scan_tau_d(SystemParams{}, SweptField::omega1, {3.0, 2.0}), InvalidArgument);
}
