#include "cascade/model.hpp"

#include "cascade/errors.hpp"

#include <cmath>
#include <numbers>

namespace cascade {

int coherence_slot(int i, int j) {
  if (i == 1 && j == 2) return kRe12;
  if (i == 2 && j == 3) return kRe23;
  if (i == 3 && j == 4) return kRe34;
  if (i == 1 && j == 3) return kRe13;
  if (i == 1 && j == 4) return kRe14;
  if (i == 2 && j == 4) return kRe24;
  throw InvalidArgument("no stored coherence rho" + std::to_string(i) + std::to_string(j));
}

void SystemParams::validate() const {
  auto check_nonneg = [](double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) throw InvalidParams(std::string(name) + " must be finite and >= 0");
  };
  check_nonneg(omega1, "omega1");
  check_nonneg(omega_rf, "omega_rf");
  check_nonneg(omega3, "omega3");
  check_nonneg(gamma23, "gamma23");
  check_nonneg(gamma34, "gamma34");
  check_nonneg(gamma24, "gamma24");
  for (auto [v, name] : {std::pair{gamma2, "gamma2"}, {gamma3, "gamma3"}, {gamma4, "gamma4"}})
    if (!std::isfinite(v) || v <= 0.0) throw InvalidParams(std::string(name) + " must be > 0");
  for (auto [v, name] : {std::pair{delta1, "delta1"}, {delta2, "delta2"}, {delta3, "delta3"}})
    if (!std::isfinite(v)) throw InvalidParams(std::string(name) + " must be finite");
}

double SystemParams::min_gamma() const { return std::min({gamma2, gamma3, gamma4}); }

SystemParams SystemParams::from_gammas(double g2, double g3, double g4) {
  SystemParams p;
  p.gamma2 = g2;
  p.gamma3 = g3;
  p.gamma4 = g4;
  p.gamma23 = g3;
  p.gamma34 = g4;
  p.gamma24 = 0.0;
  return p;
}

SystemParams SystemParams::preset(GammaPreset g) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  switch (g) {
    case GammaPreset::physical: return from_gammas(6.0 / two_pi, 6.0 / two_pi, 0.97 / two_pi);
    case GammaPreset::unit: return from_gammas(1.0, 1.0, 0.16);
  }
  throw InvalidArgument("unknown gamma preset");
}

SystemParams SystemParams::printed_branching(GammaPreset g) {
  SystemParams p = preset(g);
  p.gamma23 = 1.0;
  p.gamma34 = 1.0;
  p.gamma24 = 0.0;
  return p;
}

SystemParams SystemParams::with_drives(double o1, double orf, double o3) const {
  SystemParams p = *this;
  p.omega1 = o1;
  p.omega_rf = orf;
  p.omega3 = o3;
  return p;
}

std::string to_string(GammaPreset p) { return p == GammaPreset::physical ? "physical" : "unit"; }

GammaPreset gamma_preset_from_string(const std::string& s) {
  if (s == "physical") return GammaPreset::physical;
  if (s == "unit") return GammaPreset::unit;
  throw InvalidArgument("unknown gamma preset '" + s + "'");
}

SystemParams fig2_params(GammaPreset p) { return SystemParams::preset(p).with_drives(4.0, 20.0, 4.0); }

SystemParams fig4_params(double omega_rf, GammaPreset p) {
  return SystemParams::preset(p).with_drives(4.0, omega_rf, 4.0);
}

double StateVector::population(int level) const {
  switch (level) {
    case 1: return 1.0 - x_[kP22] - x_[kP33] - x_[kP44];
    case 2: return x_[kP22];
    case 3: return x_[kP33];
    case 4: return x_[kP44];
  }
  throw InvalidLevel("level must be 1..4");
}

cplx StateVector::element(int i, int j) const {
  if (i < 1 || i > 4 || j < 1 || j > 4) throw InvalidLevel("level must be 1..4");
  if (i == j) return population(i);
  if (i < j) {
    int k = coherence_slot(i, j);
    return {x_[k], x_[k + 1]};
  }
  return std::conj(element(j, i));
}

DensityMatrix StateVector::to_density() const {
  Eigen::Matrix4cd rho;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) rho(i - 1, j - 1) = element(i, j);
  return DensityMatrix(rho);
}

DensityMatrix::DensityMatrix(const Eigen::Matrix4cd& rho) : rho_(rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw InvalidArgument("density matrix is not Hermitian");
  if (std::abs(rho.trace() - cplx(1.0)) > 1e-12) throw InvalidArgument("density matrix trace != 1");
}

StateVector DensityMatrix::to_state() const {
  Vec15 x = Vec15::Zero();
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      int k = coherence_slot(i, j);
      x[k] = rho_(i - 1, j - 1).real();
      x[k + 1] = rho_(i - 1, j - 1).imag();
    }
  x[kP22] = rho_(1, 1).real();
  x[kP33] = rho_(2, 2).real();
  x[kP44] = rho_(3, 3).real();
  return StateVector(x);
}

namespace {

// rho_kl written as an affine complex form w.x + w0 in the reduced coordinates.
struct Affine {
  Eigen::Matrix<cplx, kDim, 1> w = Eigen::Matrix<cplx, kDim, 1>::Zero();
  cplx w0 = 0.0;
};

Affine element_form(int k, int l) {
  Affine f;
  const cplx I(0.0, 1.0);
  if (k == l) {
    if (k == 1) {
      f.w0 = 1.0;
      f.w[kP22] = f.w[kP33] = f.w[kP44] = -1.0;
    } else {
      f.w[kP22 + (k - 2)] = 1.0;
    }
  } else if (k < l) {
    int s = coherence_slot(k, l);
    f.w[s] = 1.0;
    f.w[s + 1] = I;
  } else {
    int s = coherence_slot(l, k);
    f.w[s] = 1.0;
    f.w[s + 1] = -I;
  }
  return f;
}

// Accumulates one complex equation d(rho)/dt = sum c * rho_kl.
struct Equation {
  Affine acc;
  Equation& add(cplx c, int k, int l) {
    Affine f = element_form(k, l);
    acc.w += c * f.w;
    acc.w0 += c * f.w0;
    return *this;
  }
};

}  // namespace

AffineGenerator build_generator(const SystemParams& p) {
  p.validate();
  const cplx I(0.0, 1.0);
  const double O1 = p.omega1, Orf = p.omega_rf, O3 = p.omega3;
  const double D1 = p.delta1, D2 = p.delta2, D3 = p.delta3;
  const double G2 = p.gamma2, G3 = p.gamma3, G4 = p.gamma4;

  AffineGenerator g;
  g.A.setZero();
  g.b.setZero();
  g.params = p;

  auto put_complex = [&](int slot, const Equation& e) {
    for (int m = 0; m < kDim; ++m) {
      g.A(slot, m) = e.acc.w[m].real();
      g.A(slot + 1, m) = e.acc.w[m].imag();
    }
    g.b[slot] = e.acc.w0.real();
    g.b[slot + 1] = e.acc.w0.imag();
  };
  auto put_real = [&](int slot, const Equation& e) {
    for (int m = 0; m < kDim; ++m) g.A(slot, m) = e.acc.w[m].real();
    g.b[slot] = e.acc.w0.real();
  };

  Equation r12;
  r12.add(-I * D1 - G2 / 2, 1, 2).add(-I * O1, 2, 2).add(I * O1, 1, 1).add(I * Orf, 1, 3);
  put_complex(kRe12, r12);

  Equation r23;
  r23.add(-I * D2 - (G2 + G3) / 2, 2, 3).add(-I * O1, 1, 3)
     .add(-I * Orf, 3, 3).add(I * Orf, 2, 2).add(I * O3, 2, 4);
  put_complex(kRe23, r23);

  Equation r34;
  r34.add(-I * D3 - (G3 + G4) / 2, 3, 4).add(-I * Orf, 2, 4).add(-I * O3, 4, 4).add(I * O3, 3, 3);
  put_complex(kRe34, r34);

  Equation r13;
  r13.add(-I * (D1 + D2) - G3 / 2, 1, 3).add(-I * O1, 2, 3).add(I * Orf, 1, 2).add(I * O3, 1, 4);
  put_complex(kRe13, r13);

  Equation r14;
  r14.add(-I * (D1 + D2 + D3) - G4 / 2, 1, 4).add(-I * O1, 2, 4).add(I * O3, 1, 3);
  put_complex(kRe14, r14);

  Equation r24;
  r24.add(-I * (D2 + D3) - (G2 + G4) / 2, 2, 4).add(-I * O1, 1, 4)
     .add(-I * Orf, 3, 4).add(I * O3, 2, 3);
  put_complex(kRe24, r24);

  Equation p22;
  p22.add(-G2, 2, 2).add(I * O1, 2, 1).add(-I * O1, 1, 2)
     .add(I * Orf, 2, 3).add(-I * Orf, 3, 2).add(p.gamma23, 3, 3).add(p.gamma24, 4, 4);
  put_real(kP22, p22);

  Equation p33;
  p33.add(-G3, 3, 3).add(I * O3, 3, 4).add(-I * O3, 4, 3)
     .add(-I * Orf, 2, 3).add(I * Orf, 3, 2).add(p.gamma34, 4, 4);
  put_real(kP33, p33);

  Equation p44;
  p44.add(-G4, 4, 4).add(-I * O3, 3, 4).add(I * O3, 4, 3);
  put_real(kP44, p44);

  return g;
}

StateVector prepare_state(int level) {
  if (level < 1 || level > 4) throw InvalidLevel("prepare_state: level must be 1..4, got " + std::to_string(level));
  Vec15 x = Vec15::Zero();
  if (level > 1) x[kP22 + level - 2] = 1.0;
  return StateVector(x);
}

}  // namespace cascade
