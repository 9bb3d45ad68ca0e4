#include "cascade/talbot.hpp"

#include "cascade/errors.hpp"

#include <cmath>
#include <numbers>

namespace cascade {

using cplx = std::complex<double>;

double talbot_invert(const LaplaceFn& F, double t, int nodes) {
  if (!(t > 0.0)) throw InvalidArgument("talbot_invert: t must be > 0");
  if (nodes < 2) throw InvalidArgument("talbot_invert: need at least 2 nodes");
  const double pi = std::numbers::pi;
  const int M = nodes;
  const double r = 2.0 * M / (5.0 * t);
  double acc = 0.5 * (std::exp(r * t) * F(cplx(r, 0.0))).real();
  for (int k = 1; k < M; ++k) {
    const double theta = k * pi / M;
    const double cot = 1.0 / std::tan(theta);
    const cplx s = r * theta * cplx(cot, 1.0);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    acc += (std::exp(t * s) * F(s) * cplx(1.0, sigma)).real();
  }
  return r / M * acc;
}

TalbotContour TalbotContour::enclosing(double t, double max_real, double max_imag) {
  if (!(t > 0.0)) throw InvalidArgument("talbot contour: t must be > 0");
  const double pi = std::numbers::pi;
  TalbotContour c;
  c.mu = 1.0 / t;
  c.sigma = std::max(max_real, 0.0) + c.mu;
  c.nu = std::max(1.0, 1.1 * std::abs(max_imag) / (c.mu * pi / 2.0));
  c.nodes = 64 + static_cast<int>(std::ceil(5.0 * std::abs(max_imag) * t));
  return c;
}

double talbot_invert(const LaplaceFn& F, double t, const TalbotContour& c) {
  if (!(t > 0.0)) throw InvalidArgument("talbot_invert: t must be > 0");
  const double pi = std::numbers::pi;
  const double h = pi / c.nodes;
  double acc = 0.0;
  for (int k = 0; k < c.nodes; ++k) {
    const double theta = (k + 0.5) * h;
    const double cot = 1.0 / std::tan(theta);
    const double sn = std::sin(theta);
    const cplx s(c.sigma + c.mu * theta * cot, c.mu * c.nu * theta);
    const cplx ds(c.mu * (cot - theta / (sn * sn)), c.mu * c.nu);
    const cplx z = s * t;
    if (z.real() < -700.0) continue;
    acc += (std::exp(z) * F(s) * ds).imag();
  }
  return acc * h / pi;
}

}  // namespace cascade
