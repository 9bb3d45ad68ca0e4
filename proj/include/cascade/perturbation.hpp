#pragma once

#include "cascade/correlations.hpp"
#include "cascade/rational.hpp"
#include "cascade/talbot.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace cascade {

// StrongRf: Omega_rf kept to all orders, Omega1 and Omega3 are the
// perturbation. WeakRf: Omega1 and Omega3 to all orders, Omega_rf perturbs.
enum class Regime { StrongRf, WeakRf };
std::string to_string(Regime r);
Regime regime_from_string(const std::string& s);

enum class Observable { rho22, rho33, rho44 };
std::string to_string(Observable o);
int state_index(Observable o);
int level_of(Observable o);

// Order at which analytic correlators are truncated. Second order is not
// enough for the strong-rf |1> -> |4> path, which first reaches rho44 at
// fourth order.
constexpr int kAnalyticOrder = 4;
constexpr int kMaxOrder = 8;

// A = base + perturbation, b = base_source + perturbation_source.
struct SplitGenerator {
  Mat15 base;
  Mat15 perturbation;
  Vec15 base_source;
  Vec15 perturbation_source;
};

// Throws NonzeroDetuning.
SplitGenerator split_generator(const SystemParams& params, Regime regime);

// psi_1..psi_9 = rho12, rho23, rho34, rho13, rho14, rho24, rho22, rho33, rho44.
using PsiVector = std::array<std::complex<double>, 9>;

struct LaplaceSolution {
  std::vector<PsiVector> by_order;  // index k holds the k-th order terms
  PsiVector total;
};

// Solves the order-by-order Laplace-domain hierarchy at one complex s:
// (s - A0) X0 = x(0) + b0/s, (s - A0) X1 = A1 X0 + b1/s, (s - A0) Xk = A1 X(k-1).
// Throws NonzeroDetuning, NearPole (condition of s - A0 above 1e12).
LaplaceSolution laplace_solve(const SystemParams& params, Regime regime, int init, std::complex<double> s,
                              int order = 2);

// Order-by-order steady state (the s -> 0 limit of s X(s)) summed to `order`.
StateVector perturbative_steady_state(const SystemParams& params, Regime regime, int order = 2);

// The Laplace transform of one population summed to `order`, assembled
// exactly as a rational function from the block structure of A0.
RationalFunction hierarchy_rational(const SystemParams& params, Regime regime, int init, Observable obs,
                                    int order = 2);

// The printed Laplace-space solutions. Catalogue: StrongRf |3>: rho22, rho33;
// |2>: rho22; |1>: rho22. WeakRf |3>: rho22, rho33, rho44; |2>: rho22; |1>: rho22.
// Throws NotCatalogued, NonzeroDetuning.
RationalFunction appendix_rational(const SystemParams& params, Regime regime, int init, Observable obs);

struct AppendixEntry {
  Regime regime;
  int init;
  Observable obs;
};
const std::vector<AppendixEntry>& appendix_catalogue();

struct RootEntry {
  std::string name;                   // alpha1 ... or abar3 ...
  std::complex<double> numeric;       // companion-matrix root
  std::complex<double> closed_form;   // printed formula
  double mismatch = 0.0;              // distance from closed_form to the nearest root of the same factor
};

struct RootSet {
  Regime regime = Regime::StrongRf;
  std::vector<RootEntry> roots;
  // StrongRf: d2, d3, d4. WeakRf: d2p (as printed), d3p, d4p.
  std::map<std::string, Polynomial> denominators;
  std::complex<double> phi, phi1, phi2, phi3, cubic_aux;
};

RootSet root_set(const SystemParams& params, Regime regime);

// Exponential sum of g_ij normalized so its constant term is 1.
ExponentialSum analytic_g2_sum(const SystemParams& params, Regime regime, ModePair pair,
                               int order = kAnalyticOrder);

CorrelationSeries analytic_g2(const SystemParams& params, Regime regime, ModePair pair,
                              const std::vector<double>& taus, int order = kAnalyticOrder);

// Same correlator by Talbot inversion of laplace_solve, normalized by the
// perturbative steady state.
CorrelationSeries talbot_g2(const SystemParams& params, Regime regime, ModePair pair,
                            const std::vector<double>& taus, int order = kAnalyticOrder);

// |sum of the power-0 coefficients| of a sum normalized to 1 + sum a_i e^{p_i t},
// i.e. its value at t = 0.
double coefficient_identities(const ExponentialSum& es);

// Contour parameters that enclose every pole of a rational function.
TalbotContour contour_for(const RationalFunction& rf, double t);

}  // namespace cascade
