#pragma once

#include "cascade/correlations.hpp"

#include <string>

namespace cascade {

struct RunConfig {
  GammaPreset preset = GammaPreset::physical;
  SystemParams system = SystemParams::preset(GammaPreset::physical);

  double tau_max = 10.0;
  int tau_points = 2000;
  GridSpacing spacing = GridSpacing::log_linear;

  std::string path;  // empty: standard output
  int precision = 9;

  Backend backend = Backend::expm;
  CsDefinition cs_definition = CsDefinition::equal_time;

  std::vector<double> tau_grid() const { return make_tau_grid(tau_max, tau_points, spacing); }
};

// `key = value` lines under [system], [grid], [output], [options]; `#` starts
// a comment. Decay rates not given explicitly come from the preset, and the
// branching ratios follow the decay rates unless set.
// Throws ParseError, UnknownKey, RangeError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace cascade
