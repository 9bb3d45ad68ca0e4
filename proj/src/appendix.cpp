#include "cascade/errors.hpp"
#include "cascade/perturbation.hpp"

namespace cascade {

using cplx = std::complex<double>;
using RF = RationalFunction;

const std::vector<AppendixEntry>& appendix_catalogue() {
  static const std::vector<AppendixEntry> entries = {
      {Regime::StrongRf, 3, Observable::rho22}, {Regime::StrongRf, 3, Observable::rho33},
      {Regime::StrongRf, 2, Observable::rho22}, {Regime::StrongRf, 1, Observable::rho22},
      {Regime::WeakRf, 3, Observable::rho22},   {Regime::WeakRf, 3, Observable::rho33},
      {Regime::WeakRf, 3, Observable::rho44},   {Regime::WeakRf, 2, Observable::rho22},
      {Regime::WeakRf, 1, Observable::rho22},
  };
  return entries;
}

namespace {

RF poly(std::initializer_list<cplx> c) { return RF::polynomial(Polynomial(c)); }

// The expressions below follow the printed forms term by term, including
// the factors that look dimensionally inconsistent; they are kept verbatim
// so their discrepancies can be measured rather than guessed away.

RF strong_entry(const SystemParams& p, int init, Observable obs) {
  const RootSet rs = root_set(p, Regime::StrongRf);
  const double G2 = p.gamma2 / 2, G3 = p.gamma3 / 2, G4 = p.gamma4 / 2;
  const double O1 = p.omega1, O2 = p.omega_rf, O3 = p.omega3;
  const double O1s = O1 * O1, O2s = O2 * O2, O3s = O3 * O3;
  const RF one = RF::constant(1.0);
  const RF inv_s = RF::inverse("s", s_poly());
  const RF inv_d2 = RF::inverse("d2", rs.denominators.at("d2"));
  const RF inv_d3 = RF::inverse("d3", rs.denominators.at("d3"));
  const RF inv_d4 = RF::inverse("d4", rs.denominators.at("d4"));
  const RF inv_sG4 = RF::inverse("s+G4", Polynomial({G4, 1.0}));

  if (init == 3 && obs == Observable::rho22) {
    const RF lead = poly({G2 + G3 + 2 * O2s, 1.0});
    const RF dress = one + 2 * O3s * inv_d4 * inv_sG4 * poly({1.0 - G4, -1.0}) * poly({G2 + G4, 1.0});
    return inv_d3 * (lead * dress + 2 * O2s * O3s * inv_d4 * poly({1.0 - G3, -1.0}));
  }
  if (init == 3 && obs == Observable::rho33) {
    const RF lead = poly({G2 * G2 + G2 * G3 + 2 * O2s, G3 + 2 * G2, 1.0});
    const RF dress = one + 2 * O3s * inv_d4 * inv_sG4 * poly({G2 + G4, 1.0}) * poly({1.0 - G4, -1.0});
    return inv_d3 * (lead * dress + inv_d4 * 2 * O2s * O3s * poly({G2, 1.0}));
  }
  if (init == 2 && obs == Observable::rho22) {
    const RF first = poly({G3 * G3 + G2 * G3 + 2 * O2s, G2 + 2 * G3, 1.0});
    const RF inner = poly({G3 * G3 + 2 * O1s + G3 * O2s, G2 + 2 * G3, 1.0});
    const RF second = inv_s * inv_d2 * (2 * O1s * O2s * poly({-1.0, 1.0}) - 2 * O1s * poly({G3, 1.0}) * inner);
    return inv_d3 * (first + second);
  }
  if (init == 1 && obs == Observable::rho22) {
    const RF bracket = poly({O2s}) + poly({G3, 1.0}) * (poly({G3 + G2, 1.0}) * poly({G3, 1.0}) + poly({O2s}));
    return 2 * O1s * inv_s * inv_d2 * inv_d3 * bracket;
  }
  throw NotCatalogued("strong-rf |" + std::to_string(init) + "> " + to_string(obs) + " is not catalogued");
}

RF weak_entry(const SystemParams& p, int init, Observable obs) {
  const RootSet rs = root_set(p, Regime::WeakRf);
  const double G2 = p.gamma2 / 2, G3 = p.gamma3 / 2, G4 = p.gamma4 / 2;
  const double O1 = p.omega1, O2 = p.omega_rf, O3 = p.omega3;
  const double O1s = O1 * O1, O3s = O3 * O3;
  const RF one = RF::constant(1.0);
  const RF inv_s = RF::inverse("s", s_poly());
  const RF inv_d2p = RF::inverse("d2p", rs.denominators.at("d2p"));
  const RF inv_d3p = RF::inverse("d3p", rs.denominators.at("d3p"));
  const RF inv_d4p = RF::inverse("d4p", rs.denominators.at("d4p"));
  const RF inv_sG2 = RF::inverse("s+G2", Polynomial({G2, 1.0}));

  const RF C1 = -O1 * O2 * inv_d4p * (poly({G4, 1.0}) * poly({G4 + G2, 1.0}) + poly({O1s - O3s}));
  const RF C2 = -O2 * inv_d4p *
                (poly({G4, 1.0}) * poly({G3, 1.0}) * poly({G4 + G2, 1.0}) + O3s * poly({G2 + G4, 1.0}) +
                 O1s * poly({G3, 1.0}));
  const RF C3 = O2 * O3 * inv_d4p * (-(poly({G3, 1.0}) * poly({G4, 1.0})) + poly({O1s - O3s}));
  // s^2 + G4^2 + G3 (s + G4) + 2 G4 s + 2 O3^2
  const RF quad = poly({G4 * G4 + G3 * G4 + 2 * O3s, G3 + 2 * G4, 1.0});
  // G2^2 + s (s - 2 O1^2) + 2 G2 (s - O1^2), printed grouping
  const RF lead22 = poly({G2 * G2 - 2 * G2 * O1s, 2 * G2 - 2 * O1s, 1.0});

  if (init == 3 && obs == Observable::rho22) {
    const RF tail = (one + 2 * O2 * C2) * quad + 2 * O2 * O3 * C3 * poly({G4 - 1.0, 1.0});
    return inv_d2p * (2 * O1s * inv_s + 2 * O1 * O2 * C1 - 2 * O2 * poly({G2, 1.0}) * C2 +
                      4 * O1s * inv_d3p * (poly({-O3s}) + O2 * O3 * (poly({G3, 1.0}) * C3 - 2 * O3 * C2)) +
                      inv_sG2 * inv_d3p * lead22 * tail);
  }
  if (init == 3 && obs == Observable::rho33) {
    return inv_d3p * ((one + 2 * O2 * C2) * quad + 2 * O2 * O3 * C3 * poly({2 * G4 + 1.0, 1.0}));
  }
  if (init == 3 && obs == Observable::rho44) {
    return 2 * O3 * inv_d3p * (O3 * (one + 2 * O2 * C2) - O2 * C3 * poly({G4, 1.0}));
  }
  if (init == 2 && obs == Observable::rho22) {
    // Literal grouping: G2^2 + s (s - 2 O1^2) + 2 G2 (s - O1^2) * (...)
    const RF inner = 2 * O2 * C2 * quad + 2 * O2 * O3 * C3 * poly({G4 - 1.0, 1.0});
    const RF last = poly({G2 * G2}) + poly({0.0, -2 * O1s, 1.0}) + 2 * G2 * poly({-O1s, 1.0}) * inner;
    return inv_d2p * (2 * O1s * inv_s + 2 * O1 * O2 * C1 - poly({G2, 1.0}) * (one - 2 * O2 * C2) +
                      4 * O1s * O2 * O2 * O3s * inv_d3p * (poly({G3, 1.0}) * C3 - 2 * O3 * C2) +
                      inv_sG2 * inv_d3p * last);
  }
  if (init == 1 && obs == Observable::rho22) {
    return 2 * O1s * inv_s * inv_d2p;
  }
  throw NotCatalogued("weak-rf |" + std::to_string(init) + "> " + to_string(obs) + " is not catalogued");
}

}  // namespace

RationalFunction appendix_rational(const SystemParams& params, Regime regime, int init, Observable obs) {
  if (!params.zero_detuning()) throw NonzeroDetuning("the printed Laplace-space solutions assume zero detunings");
  RF rf = regime == Regime::StrongRf ? strong_entry(params, init, obs) : weak_entry(params, init, obs);
  rf.set_provenance("closed form " + to_string(regime) + " |" + std::to_string(init) + "> " + to_string(obs));
  return rf;
}

}  // namespace cascade
