#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>

namespace cascade {

constexpr int kDim = 15;
using Vec15 = Eigen::Matrix<double, kDim, 1>;
using Mat15 = Eigen::Matrix<double, kDim, kDim>;
using cplx = std::complex<double>;

// Component layout of the reduced state vector. Each coherence rho_ij (i<j)
// occupies two slots (real, imaginary); rho11 is implicit.
enum Index : int {
  kRe12 = 0, kIm12, kRe23, kIm23, kRe34, kIm34,
  kRe13, kIm13, kRe14, kIm14, kRe24, kIm24,
  kP22, kP33, kP44
};

// Real-slot index of the stored coherence rho_ij, i<j, levels 1..4.
int coherence_slot(int i, int j);

enum class GammaPreset { physical, unit };

// All rates in units of gamma = 2 pi MHz.
struct SystemParams {
  double omega1 = 0.0;
  double omega_rf = 0.0;
  double omega3 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double delta3 = 0.0;
  double gamma2 = 1.0;
  double gamma3 = 1.0;
  double gamma4 = 0.16;
  double gamma23 = 1.0;  // feed |3> -> |2>
  double gamma34 = 0.16; // feed |4> -> |3>
  double gamma24 = 0.0;  // feed |4> -> |2>

  // Throws InvalidParams.
  void validate() const;
  bool zero_detuning() const { return delta1 == 0.0 && delta2 == 0.0 && delta3 == 0.0; }
  double min_gamma() const;

  // Decay rates with branching set to the full cascade (gamma23 = Gamma3,
  // gamma34 = Gamma4) and all drives off.
  static SystemParams from_gammas(double g2, double g3, double g4);
  static SystemParams preset(GammaPreset p);
  // Same decay rates but gamma23 = gamma34 = 1, gamma24 = 0 taken literally.
  static SystemParams printed_branching(GammaPreset p);

  SystemParams with_drives(double o1, double orf, double o3) const;

  bool operator==(const SystemParams&) const = default;
};

std::string to_string(GammaPreset p);
GammaPreset gamma_preset_from_string(const std::string& s);

// Named drive sets used throughout the figures.
SystemParams fig2_params(GammaPreset p = GammaPreset::physical);
SystemParams fig4_params(double omega_rf, GammaPreset p = GammaPreset::physical);

class DensityMatrix;

class StateVector {
 public:
  StateVector() : x_(Vec15::Zero()) {}
  explicit StateVector(const Vec15& x) : x_(x) {}

  const Vec15& vec() const { return x_; }
  Vec15& vec() { return x_; }
  double operator[](int k) const { return x_[k]; }

  // Population of level 1..4 (rho11 reconstructed from the trace).
  double population(int level) const;
  // rho_ij for any i, j in 1..4.
  cplx element(int i, int j) const;

  DensityMatrix to_density() const;

 private:
  Vec15 x_;
};

class DensityMatrix {
 public:
  // Throws InvalidArgument if not Hermitian or not unit trace within 1e-12.
  explicit DensityMatrix(const Eigen::Matrix4cd& rho);
  const Eigen::Matrix4cd& matrix() const { return rho_; }
  StateVector to_state() const;

 private:
  Eigen::Matrix4cd rho_;
};

struct AffineGenerator {
  Mat15 A;
  Vec15 b;
  SystemParams params;

  Vec15 rhs(const Vec15& x) const { return A * x + b; }
};

AffineGenerator build_generator(const SystemParams& params);

// |level><level|; throws InvalidLevel unless level is 1..4.
StateVector prepare_state(int level);

}  // namespace cascade
