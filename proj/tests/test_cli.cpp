#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cascade/cli.hpp"
#include "cascade/errors.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cascade;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_text(const std::string& cmd, const std::string& config, CliFlags flags = {}) {
  std::ostringstream out, err;
  const int code = run(cmd, parse_config(config), flags, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<double> fields(const std::string& line) {
  std::vector<double> v;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) v.push_back(std::stod(f));
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* kFig2 = "[system]\nomega1 = 4\nomega_rf = 20\nomega3 = 4\n";

}  // namespace

TEST_CASE("config defaults") {
  const RunConfig c = parse_config("[system]\nomega1 = 1.5  # comment\n");
  CHECK(c.system.omega1 == 1.5);
  CHECK(c.system.omega_rf == 0.0);
  CHECK(c.tau_max == 10.0);
  CHECK(c.tau_points == 2000);
  CHECK(c.spacing == GridSpacing::log_linear);
  CHECK(c.precision == 9);
  CHECK(c.backend == Backend::expm);
  CHECK(c.cs_definition == CsDefinition::equal_time);
  CHECK(c.path.empty());
  CHECK(c.preset == GammaPreset::physical);
}

TEST_CASE("Fig. 2 config equals the documented preset") {
  CHECK(parse_config(kFig2).system == fig2_params(GammaPreset::physical));
  CHECK(parse_config(std::string("[system]\npreset = unit\n") + (kFig2 + 9)).system == fig2_params(GammaPreset::unit));
}

TEST_CASE("config grammar") {
  const RunConfig c = parse_config(
      "# header\n\n[system]\ndelta2 = 1\ndelta_rf = 2\nomega2 = 3\ngamma3 = 2\n"
      "[grid]\ntau_max = 4\ntau_points = 16\nspacing = linear\n"
      "[output]\npath = out.csv\nprecision = 12\n"
      "[options]\nbackend = rk\ncs_definition = literal\n");
  CHECK(c.system.delta2 == 2.0);
  CHECK(c.system.omega_rf == 3.0);
  CHECK(c.system.gamma3 == 2.0);
  CHECK(c.system.gamma23 == 2.0);
  CHECK(c.tau_points == 16);
  CHECK(c.path == "out.csv");
  CHECK(c.precision == 12);
  CHECK(c.backend == Backend::rk);
  CHECK(c.cs_definition == CsDefinition::literal);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config("[system]\ngamma2 = -1\n"), RangeError);
  try {
    parse_config("[system]\ngamma2 = -1\n");
  } catch (const RangeError& e) {
    CHECK(std::string(e.what()).find("gamma2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("[system]\nomega9 = 1\n"), UnknownKey);
  CHECK_THROWS_AS(parse_config("[nonsense]\n"), UnknownKey);
  CHECK_THROWS_AS(parse_config("[system]\nOmega1 = 1\n"), UnknownKey);
  CHECK_THROWS_AS(parse_config("[grid]\ntau_points = 8\n"), RangeError);
  CHECK_THROWS_AS(parse_config("[output]\nprecision = 20\n"), RangeError);
  CHECK_THROWS_AS(parse_config("[grid]\ntau_max = 0\n"), RangeError);
  try {
    parse_config("[system]\n\nomega1 4\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  CHECK_THROWS_AS(parse_config("omega1 = 4\n"), ParseError);
  CHECK_THROWS_AS(parse_config("[system]\nomega1 = four\n"), ParseError);
  CHECK_THROWS_AS(parse_config("[options]\nbackend = euler\n"), ParseError);
}

TEST_CASE("steady with zero drives") {
  const Result r = run_text("steady", "[system]\n");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0][0] == '#');
  CHECK(ls[1].rfind("rho11,rho22,rho33,rho44,", 0) == 0);
  CHECK(fields(ls[2])[0] == 1.0);
}

TEST_CASE("g2 --pair 31 on the Fig. 2 config starts at zero") {
  CliFlags f;
  f.pair = "31";
  const Result r = run_text("g2", std::string(kFig2) + "[grid]\ntau_points = 50\n", f);
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls[1] == "tau,g31");
  CHECK(ls.size() == 52);
  const auto first = fields(ls[2]);
  CHECK(first[0] == 0.0);
  CHECK(first[1] == 0.0);
}

TEST_CASE("printed values re-parse within the precision bound") {
  for (int p : {6, 9, 17}) {
    const std::string cfg = std::string(kFig2) + "[grid]\ntau_max = 3\ntau_points = 40\nspacing = linear\n[output]\nprecision = " +
                            std::to_string(p) + "\n";
    const Result r = run_text("g2", cfg);
    const auto series = g2(build_generator(fig2_params()), {3, 1}, make_tau_grid(3.0, 40, GridSpacing::linear));
    const auto ls = lines(r.out);
    for (std::size_t k = 0; k < series.values.size(); ++k) {
      const auto v = fields(ls[k + 2]);
      CHECK(std::abs(v[0] - series.taus[k]) <= std::pow(10.0, 1 - p) * std::abs(series.taus[k]));
      CHECK(std::abs(v[1] - series.values[k]) <= std::pow(10.0, 1 - p) * std::abs(series.values[k]));
    }
  }
}

TEST_CASE("cs summary agrees with the library value") {
  const std::string cfg = "[system]\nomega1 = 4\nomega_rf = 20\nomega3 = 4\n[grid]\ntau_max = 64.8\n";
  const Result r = run_text("cs", cfg);
  CHECK(r.code == 0);
  const RunConfig c = parse_config(cfg);
  const AffineGenerator gen = build_generator(c.system);
  const auto taus = c.tau_grid();
  const CSRatioResult ref = cs_ratio(g2(gen, {3, 1}, taus), g2(gen, {1, 1}, taus), g2(gen, {3, 3}, taus));
  const auto ls = lines(r.out);
  const std::string summary = ls.back();
  CHECK(summary.rfind("r_max=" + format_number(ref.r_max, 9) + " tau_at_max=", 0) == 0);
  CHECK(ref.r_max >= 1e3);
  CHECK(ref.r_max <= 1e7);
  CHECK(ls[1] == "tau,g31,g11,g33,R");
}

TEST_CASE("evolve, taud-scan and roots") {
  CliFlags f;
  f.init = 3;
  Result r = run_text("evolve", std::string(kFig2) + "[grid]\ntau_points = 16\n", f);
  CHECK(r.code == 0);
  CHECK(lines(r.out)[1].rfind("t,rho11", 0) == 0);
  CHECK(fields(lines(r.out)[2])[3] == 1.0);

  f.points = 3;
  r = run_text("taud-scan", "[system]\nomega1 = 4\nomega_rf = 4\nomega3 = 4\n", f);
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  CHECK(ls[1] == "field,sweep_name,tau_d");
  CHECK(ls.size() == 5);
  CHECK(ls[2].find(",omega_rf,") != std::string::npos);

  f.regime = "weak";
  r = run_text("roots", "[system]\nomega1 = 4\nomega_rf = 0.2\nomega3 = 4\n", f);
  CHECK(r.code == 0);
  ls = lines(r.out);
  CHECK(ls[1] == "name,re_numeric,im_numeric,re_printed,im_printed,mismatch");
  CHECK(ls[2].rfind("abar3,", 0) == 0);
}

TEST_CASE("exit codes") {
  CliFlags f;
  f.pair = "44";
  CHECK(run_text("g2", kFig2, f).code == 2);
  f = {};
  f.init = 9;
  CHECK(run_text("evolve", kFig2, f).code == 2);
  CHECK(run_text("frobnicate", kFig2).code == 2);
  const Result zero = run_text("g2", "[system]\n");
  CHECK(zero.code == 1);
  CHECK(zero.err.find("error:") == 0);
  CHECK(lines(zero.err).size() == 1);
  CHECK(run_text("roots", "[system]\ndelta1 = 1\nomega_rf = 20\n").code == 1);
}

TEST_CASE("figures are byte-deterministic") {
  const fs::path dir = fs::temp_directory_path() / "cascade_test_figures";
  fs::remove_all(dir);
  const std::string cfg = "[grid]\ntau_max = 3\ntau_points = 100\n[output]\npath = " + (dir / "a").string() + "\n";
  const std::string cfg2 = "[grid]\ntau_max = 3\ntau_points = 100\n[output]\npath = " + (dir / "b").string() + "\n";
  CHECK(run_text("figures", cfg).code == 0);
  CHECK(run_text("figures", cfg2).code == 0);
  for (const char* name : {"fig2.csv", "fig3.csv", "fig4.csv"}) {
    const std::string a = slurp(dir / "a" / name);
    CHECK_FALSE(a.empty());
    CHECK(a == slurp(dir / "b" / name));
  }
  CHECK(lines(slurp(dir / "a" / "fig2.csv"))[1] == "tau,g31,g32,g21");
  CHECK(lines(slurp(dir / "a" / "fig3.csv"))[1] == "field,sweep_name,tau_d");
  CHECK(lines(slurp(dir / "a" / "fig3.csv")).size() == 2 + 27);
  const auto fig4 = lines(slurp(dir / "a" / "fig4.csv"));
  CHECK(fig4[1] == "omega_rf,tau,g11,g33,g31,R");
  CHECK(fig4.size() == 2 + 300);
  fs::remove_all(dir);
}
