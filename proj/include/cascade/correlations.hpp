#pragma once

#include "cascade/dynamics.hpp"

#include <string>
#include <vector>

namespace cascade {

// Mode i is the |i+1> -> |i> emission. (i, j): first photon in mode i,
// second photon in mode j.
struct ModePair {
  int i = 3;
  int j = 1;

  // Throws InvalidArgument unless the pair is one of 11, 33, 31, 21, 32.
  void validate() const;
  int init_level() const { return i; }
  int observed_level() const { return j + 1; }
  std::string label() const { return std::to_string(i) + std::to_string(j); }
  static ModePair parse(const std::string& s);
  bool operator==(const ModePair&) const = default;
};

struct CorrelationSeries {
  ModePair pair;
  std::vector<double> taus;
  std::vector<double> values;
  double norm = 0.0;  // steady-state population in the denominator
};

enum class GridSpacing { log_linear, linear };
std::string to_string(GridSpacing s);
GridSpacing spacing_from_string(const std::string& s);

// Ascending grid starting at 0. log_linear puts a quarter of the points on a
// logarithmic ramp up to tau_max/100 and the rest on a uniform grid.
std::vector<double> make_tau_grid(double tau_max, int points, GridSpacing spacing = GridSpacing::log_linear);
std::vector<double> default_tau_grid(const SystemParams& p);

CorrelationSeries g2(const AffineGenerator& gen, ModePair pair, const std::vector<double>& taus,
                     Backend backend = Backend::expm);

enum class CsDefinition { equal_time, literal };
std::string to_string(CsDefinition d);
CsDefinition cs_definition_from_string(const std::string& s);

struct CSRatioResult {
  std::vector<double> taus;
  std::vector<double> R;
  double r_max = 0.0;
  double tau_at_max = 0.0;
  CsDefinition definition = CsDefinition::equal_time;
};

CSRatioResult cs_ratio(const CorrelationSeries& g31, const CorrelationSeries& g11, const CorrelationSeries& g33,
                       CsDefinition definition = CsDefinition::equal_time);

// First interior local maximum with a three-point parabolic refinement.
double tau_delay(const CorrelationSeries& series);

// tau_d of g31 on an adaptive grid: a coarse pass locates the first peak and a
// ten times finer pass around it refines the value.
double tau_delay_adaptive(const AffineGenerator& gen);

enum class SweptField { omega1, omega_rf, omega3 };
std::string to_string(SweptField f);
SweptField swept_field_from_string(const std::string& s);
SystemParams with_field(SystemParams p, SweptField f, double value);

struct DelayScan {
  SweptField swept_field = SweptField::omega_rf;
  std::vector<double> field_values;
  std::vector<double> tau_d;        // NaN where the point failed
  std::vector<std::string> errors;  // empty where the point succeeded
};

// Grid points are evaluated concurrently; results are in input order.
DelayScan scan_tau_d(const SystemParams& base, SweptField swept, const std::vector<double>& grid);

}  // namespace cascade
