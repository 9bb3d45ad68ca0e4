#pragma once

#include "cascade/config.hpp"

#include <iosfwd>
#include <string>

namespace cascade {

struct CliFlags {
  int init = 1;                 // evolve: initial level
  std::string pair = "31";      // g2
  std::string sweep = "omega_rf";  // taud-scan
  double from = 4.0;
  double to = 20.0;
  int points = 9;
  std::string regime = "strong";  // roots
};

// Runs one subcommand. CSV goes to cfg.path (a directory for `figures`) or to
// `out` when the path is empty; diagnostics go to `err`.
// Returns 0 on success, 1 on computation error or failed validation, 2 on
// configuration or flag errors.
int run(const std::string& subcommand, const RunConfig& cfg, const CliFlags& flags, std::ostream& out,
        std::ostream& err);

// Formats a value with `precision` significant digits, C locale.
std::string format_number(double v, int precision);

}  // namespace cascade
