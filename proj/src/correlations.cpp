#include "cascade/correlations.hpp"

#include "cascade/errors.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

namespace cascade {

void ModePair::validate() const {
  const int code = 10 * i + j;
  if (code != 11 && code != 33 && code != 31 && code != 21 && code != 32)
    throw InvalidArgument("mode pair must be one of 11, 33, 31, 21, 32");
}

ModePair ModePair::parse(const std::string& s) {
  if (s.size() != 2 || s[0] < '0' || s[0] > '9' || s[1] < '0' || s[1] > '9')
    throw InvalidArgument("mode pair must be two digits, e.g. 31");
  ModePair p{s[0] - '0', s[1] - '0'};
  p.validate();
  return p;
}

std::string to_string(GridSpacing s) { return s == GridSpacing::linear ? "linear" : "log_linear"; }

GridSpacing spacing_from_string(const std::string& s) {
  if (s == "linear") return GridSpacing::linear;
  if (s == "log_linear") return GridSpacing::log_linear;
  throw InvalidArgument("unknown spacing '" + s + "'");
}

std::vector<double> make_tau_grid(double tau_max, int points, GridSpacing spacing) {
  if (!(tau_max > 0.0) || points < 3) throw InvalidArgument("tau grid needs tau_max > 0 and >= 3 points");
  std::vector<double> g(points);
  if (spacing == GridSpacing::linear) {
    for (int k = 0; k < points; ++k) g[k] = tau_max * k / (points - 1);
    return g;
  }
  const int n_log = std::max(1, points / 4);
  const int n_lin = points - 1 - n_log;
  const double t_switch = tau_max / 100.0;
  const double t_first = tau_max * 1e-6;
  g[0] = 0.0;
  for (int k = 0; k < n_log; ++k)
    g[1 + k] = t_first * std::pow(t_switch / t_first, static_cast<double>(k) / n_log);
  for (int k = 0; k < n_lin; ++k) g[1 + n_log + k] = t_switch + (tau_max - t_switch) * k / (n_lin - 1);
  return g;
}

std::vector<double> default_tau_grid(const SystemParams& p) {
  return make_tau_grid(10.0 / p.min_gamma(), 2000, GridSpacing::log_linear);
}

CorrelationSeries g2(const AffineGenerator& gen, ModePair pair, const std::vector<double>& taus, Backend backend) {
  pair.validate();
  const StateVector ss = steady_state(gen);
  const int level = pair.observed_level();
  const double norm = ss.population(level);
  if (!(norm >= 1e-12))
    throw ZeroSteadyState("g2(" + pair.label() + "): steady-state population of level " + std::to_string(level) +
                          " is " + std::to_string(norm));
  const Trajectory tr = evolve(gen, prepare_state(pair.init_level()), taus, backend);
  CorrelationSeries out;
  out.pair = pair;
  out.taus = taus;
  out.norm = norm;
  out.values.reserve(taus.size());
  for (const auto& s : tr.states) out.values.push_back(s.population(level) / norm);
  return out;
}

std::string to_string(CsDefinition d) { return d == CsDefinition::literal ? "literal" : "equal_time"; }

CsDefinition cs_definition_from_string(const std::string& s) {
  if (s == "equal_time") return CsDefinition::equal_time;
  if (s == "literal") return CsDefinition::literal;
  throw InvalidArgument("unknown cs_definition '" + s + "'");
}

CSRatioResult cs_ratio(const CorrelationSeries& g31, const CorrelationSeries& g11, const CorrelationSeries& g33,
                       CsDefinition definition) {
  if (g31.taus != g11.taus || g31.taus != g33.taus) throw GridMismatch("cs_ratio: series use different tau grids");
  if (g31.taus.empty()) throw GridMismatch("cs_ratio: empty series");
  CSRatioResult r;
  r.definition = definition;
  r.taus = g31.taus;
  r.R.resize(r.taus.size());
  const double g33_zero = std::max(g33.values.front(), 1e-12);
  for (std::size_t k = 0; k < r.taus.size(); ++k) {
    double den;
    if (definition == CsDefinition::equal_time) {
      den = (g33.values[k] < 1e-12 || g11.values[k] < 1e-12) ? 0.0 : g33.values[k] * g11.values[k];
    } else {
      den = g11.values[k] < 1e-12 ? 0.0 : g33_zero * g11.values[k];
    }
    r.R[k] = den > 0.0 ? std::max(0.0, g31.values[k] * g31.values[k] / den) : 0.0;
  }
  const auto it = std::max_element(r.R.begin(), r.R.end());
  r.r_max = *it;
  r.tau_at_max = r.taus[it - r.R.begin()];
  return r;
}

namespace {

// Vertex of the parabola through three points with arbitrary spacing.
double parabola_vertex(double x0, double y0, double x1, double y1, double x2, double y2) {
  const double d01 = (y1 - y0) / (x1 - x0);
  const double d12 = (y2 - y1) / (x2 - x1);
  const double a = (d12 - d01) / (x2 - x0);
  if (!(a < 0.0)) return x1;
  const double v = 0.5 * (x0 + x1) - d01 / (2.0 * a);
  return std::clamp(v, x0, x2);
}

std::size_t first_peak_index(const std::vector<double>& v) {
  for (std::size_t k = 1; k + 1 < v.size(); ++k)
    if (v[k] >= v[k - 1] && v[k] > v[k + 1]) return k;
  return 0;
}

}  // namespace

double tau_delay(const CorrelationSeries& s) {
  if (s.values.size() < 3 || s.values.size() != s.taus.size()) throw NoPeak("tau_delay: need >= 3 points");
  const std::size_t k = first_peak_index(s.values);
  if (k == 0) throw NoPeak("tau_delay: no interior local maximum on the grid");
  return parabola_vertex(s.taus[k - 1], s.values[k - 1], s.taus[k], s.values[k], s.taus[k + 1], s.values[k + 1]);
}

double tau_delay_adaptive(const AffineGenerator& gen) {
  const SystemParams& p = gen.params;
  const double scale = std::max({p.omega1, p.omega_rf, p.omega3, p.min_gamma()});
  const double tau_limit = 10.0 / p.min_gamma();
  constexpr int kCoarse = 400;
  double tau_max = std::min(4.0 / scale, tau_limit);
  for (;;) {
    const auto coarse_grid = make_tau_grid(tau_max, kCoarse, GridSpacing::linear);
    const CorrelationSeries coarse = g2(gen, {3, 1}, coarse_grid);
    const std::size_t k = first_peak_index(coarse.values);
    if (k != 0) {
      const double h = coarse_grid[1] - coarse_grid[0];
      const double lo = coarse_grid[k - 1];
      std::vector<double> fine(21);
      for (int m = 0; m <= 20; ++m) fine[m] = lo + m * h / 10.0;
      CorrelationSeries fs = g2(gen, {3, 1}, fine);
      // The fine window cannot start at tau = 0, so the first interior peak
      // of the window is the refined one.
      return tau_delay(fs);
    }
    if (tau_max >= tau_limit) throw NoPeak("g31 has no interior maximum up to tau = " + std::to_string(tau_limit));
    tau_max = std::min(2.0 * tau_max, tau_limit);
  }
}

std::string to_string(SweptField f) {
  switch (f) {
    case SweptField::omega1: return "omega1";
    case SweptField::omega_rf: return "omega_rf";
    case SweptField::omega3: return "omega3";
  }
  return "";
}

SweptField swept_field_from_string(const std::string& s) {
  if (s == "omega1") return SweptField::omega1;
  if (s == "omega_rf" || s == "omega2") return SweptField::omega_rf;
  if (s == "omega3") return SweptField::omega3;
  throw InvalidArgument("unknown swept field '" + s + "'");
}

SystemParams with_field(SystemParams p, SweptField f, double value) {
  switch (f) {
    case SweptField::omega1: p.omega1 = value; break;
    case SweptField::omega_rf: p.omega_rf = value; break;
    case SweptField::omega3: p.omega3 = value; break;
  }
  return p;
}

DelayScan scan_tau_d(const SystemParams& base, SweptField swept, const std::vector<double>& grid) {
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] > 0.0)) throw InvalidArgument("scan_tau_d: field values must be > 0");
    if (k > 0 && !(grid[k] > grid[k - 1])) throw InvalidArgument("scan_tau_d: grid must be ascending");
  }
  struct Point {
    double tau = std::numeric_limits<double>::quiet_NaN();
    std::string error;
  };
  std::vector<std::future<Point>> jobs;
  jobs.reserve(grid.size());
  for (double v : grid) {
    jobs.push_back(std::async(std::launch::async, [&base, swept, v] {
      Point pt;
      try {
        pt.tau = tau_delay_adaptive(build_generator(with_field(base, swept, v)));
      } catch (const Error& e) {
        pt.error = e.what();
      }
      return pt;
    }));
  }
  DelayScan scan;
  scan.swept_field = swept;
  scan.field_values = grid;
  for (auto& j : jobs) {
    Point pt = j.get();
    scan.tau_d.push_back(pt.tau);
    scan.errors.push_back(pt.error);
  }
  return scan;
}

}  // namespace cascade
