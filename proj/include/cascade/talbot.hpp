#pragma once

#include <complex>
#include <functional>

namespace cascade {

using LaplaceFn = std::function<std::complex<double>(std::complex<double>)>;

// Fixed Talbot rule (contour radius 2M/(5t)). Good to ~1e-10 for transforms
// whose poles sit near the real axis; degrades for strongly oscillatory ones.
double talbot_invert(const LaplaceFn& F, double t, int nodes = 32);

// Talbot contour s(theta) = sigma + mu (theta cot theta + i nu theta) opened
// wide enough to enclose poles with Re <= max_real and |Im| <= max_imag.
struct TalbotContour {
  double sigma = 0.0;
  double mu = 1.0;
  double nu = 1.0;
  int nodes = 64;

  static TalbotContour enclosing(double t, double max_real, double max_imag);
};

double talbot_invert(const LaplaceFn& F, double t, const TalbotContour& contour);

}  // namespace cascade
