#pragma once

#include "cascade/model.hpp"

#include <vector>

namespace cascade {

enum class Backend { expm, rk };

std::string to_string(Backend b);
Backend backend_from_string(const std::string& s);

struct Trajectory {
  std::vector<double> times;
  std::vector<StateVector> states;
};

// Solves A x = -b; throws SingularGenerator for condition estimates > 1e14.
StateVector steady_state(const AffineGenerator& gen);

// times must be ascending with times[0] >= 0 (the integration starts at t = 0
// from x0; the first grid point may be later).
Trajectory evolve(const AffineGenerator& gen, const StateVector& x0, const std::vector<double>& times,
                  Backend backend = Backend::expm);

}  // namespace cascade
