#pragma once

#include "cascade/perturbation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cascade {

enum class CheckStatus { pass, fail, info };
std::string to_string(CheckStatus s);

struct Check {
  std::string id;         // "C1".."C10" for acceptance criteria, "I-..." for info entries
  std::string name;
  CheckStatus status = CheckStatus::info;
  double value = 0.0;     // measured quantity
  double tolerance = 0.0; // threshold it is compared with
  std::string reference;  // the claim being checked
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;

  bool passed() const;  // no check has status fail
  const Check* find(const std::string& id) const;
  std::string to_text() const;
  std::string to_csv(int precision = 9) const;
};

struct ValidationOptions {
  GammaPreset gammas = GammaPreset::physical;
  int random_sets = 200;  // antibunching sweep
  int oracle_sets = 20;   // backend triangle
  std::uint64_t seed = 1234567;
};

// Reference e^{At} x0 + particular part, via a Taylor series of the augmented
// generator [[A, b], [0, 0]] with binary scaling, in long double.
StateVector brute_force_evolve(const AffineGenerator& gen, const StateVector& x0, double t);

// Random zero-detuning parameter set with Omega in [0.1, 30], Gamma in [0.1, 3].
SystemParams random_params(std::uint64_t seed, int index);

// One check per acceptance criterion.
Check check_antibunching(const ValidationOptions& o);
Check check_bunching(const ValidationOptions& o);
Check check_cs_violation(const ValidationOptions& o);
Check check_delay_trend(const ValidationOptions& o);
Check check_weak_field_closed_form(const ValidationOptions& o);
Check check_perturbative_agreement(const ValidationOptions& o);
Check check_coefficient_identities(const ValidationOptions& o);
Check check_oracle_triangle(const ValidationOptions& o);
Check check_dissipativity(const ValidationOptions& o);
// Recomputes the figure data twice and compares bit for bit; `elapsed`
// is the wall time already spent by the suite.
Check check_determinism(const ValidationOptions& o, double elapsed_seconds);

// Printed-formula discrepancies and other diagnostics, all status info.
std::vector<Check> info_checks(const ValidationOptions& o);

ValidationReport run_validation(const ValidationOptions& o = {});

// Parameter sets used by the checks.
SystemParams weak_field_params();                              // Omega = 0.05, Gamma2 = 1, Gamma3 = 2
SystemParams perturbative_params(GammaPreset g);                // Omega1 = Omega3 = 0.2, Omega_rf = 20
SystemParams weak_rf_params(GammaPreset g);                     // Omega1 = Omega3 = 4, Omega_rf = 0.2

}  // namespace cascade
