#include "cascade/dynamics.hpp"

#include "cascade/errors.hpp"
#include "cascade/linalg.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>

namespace cascade {

std::string to_string(Backend b) { return b == Backend::expm ? "expm" : "rk"; }

Backend backend_from_string(const std::string& s) {
  if (s == "expm") return Backend::expm;
  if (s == "rk") return Backend::rk;
  throw InvalidArgument("unknown backend '" + s + "'");
}

StateVector steady_state(const AffineGenerator& gen) {
  const SolveResult r = refined_solve(gen.A, -gen.b);
  return StateVector(Vec15(r.x));
}

namespace {

void check_times(const std::vector<double>& times) {
  if (times.empty()) throw InvalidArgument("evolve: empty time grid");
  if (!(times.front() >= 0.0)) throw InvalidArgument("evolve: times must start at t >= 0");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (!(times[k] > times[k - 1])) throw InvalidArgument("evolve: times must be strictly increasing");
}

Trajectory evolve_expm(const AffineGenerator& gen, const StateVector& x0, const std::vector<double>& times) {
  const Vec15 xp = steady_state(gen).vec();
  Trajectory tr;
  tr.times = times;
  tr.states.reserve(times.size());

  Vec15 y = x0.vec() - xp;
  double t_prev = 0.0;
  double cached_dt = -1.0;
  Mat15 E;
  for (double t : times) {
    const double dt = t - t_prev;
    if (dt > 0.0) {
      if (dt != cached_dt) {
        E = matrix_exponential(gen.A * dt);
        cached_dt = dt;
      }
      y = E * y;
    }
    tr.states.emplace_back(Vec15(y + xp));
    t_prev = t;
  }
  return tr;
}

using OdeState = std::array<double, kDim>;

Trajectory evolve_rk(const AffineGenerator& gen, const StateVector& x0, const std::vector<double>& times) {
  namespace ode = boost::numeric::odeint;
  auto sys = [&gen](const OdeState& x, OdeState& dx, double) {
    Eigen::Map<const Vec15> xv(x.data());
    Eigen::Map<Vec15> dv(dx.data());
    dv.noalias() = gen.A * xv + gen.b;
  };

  OdeState x;
  Eigen::Map<Vec15>(x.data()) = x0.vec();

  std::vector<double> grid;
  grid.reserve(times.size() + 1);
  const bool prepend = times.front() > 0.0;
  if (prepend) grid.push_back(0.0);
  grid.insert(grid.end(), times.begin(), times.end());

  Trajectory tr;
  tr.times = times;
  tr.states.reserve(times.size());
  std::size_t seen = 0;
  auto observer = [&](const OdeState& s, double) {
    if (!(prepend && seen == 0)) tr.states.emplace_back(Vec15(Eigen::Map<const Vec15>(s.data())));
    ++seen;
  };

  if (grid.size() == 1) {
    observer(x, 0.0);
    return tr;
  }
  const double rate = std::max(1.0, gen.A.cwiseAbs().rowwise().sum().maxCoeff());
  try {
    auto stepper = ode::make_dense_output(1e-12, 1e-10, ode::runge_kutta_dopri5<OdeState>());
    ode::integrate_times(stepper, sys, x, grid.begin(), grid.end(), 1e-3 / rate, observer,
                         ode::max_step_checker(10000000));
  } catch (const std::exception& e) {
    throw StepFailure(std::string("adaptive integrator failed: ") + e.what());
  }
  if (tr.states.size() != times.size()) throw StepFailure("adaptive integrator stopped early");
  return tr;
}

}  // namespace

Trajectory evolve(const AffineGenerator& gen, const StateVector& x0, const std::vector<double>& times,
                  Backend backend) {
  check_times(times);
  return backend == Backend::expm ? evolve_expm(gen, x0, times) : evolve_rk(gen, x0, times);
}

}  // namespace cascade
