#include "block_algebra.hpp"
#include "cascade/errors.hpp"
#include "cascade/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cascade {

using cplx = std::complex<double>;

namespace {

Polynomial block_poly(const Mat15& A0, const std::vector<int>& idx) {
  return detail::faddeev_leverrier(detail::submatrix(A0, idx)).charpoly;
}

// Real roots first, then by decreasing imaginary part.
std::vector<cplx> ordered_roots(const Polynomial& p) {
  std::vector<cplx> r = p.roots();
  const double scale = std::max(1.0, p.norm());
  for (cplx& v : r)
    if (std::abs(v.imag()) < 1e-10 * scale) v = v.real();
  std::stable_sort(r.begin(), r.end(), [](cplx a, cplx b) {
    const bool ra = a.imag() == 0.0, rb = b.imag() == 0.0;
    if (ra != rb) return ra;
    if (a.imag() != b.imag()) return a.imag() > b.imag();
    return a.real() > b.real();
  });
  return r;
}

// The printed cubic-root formulas in terms of a rate sum G and a Rabi frequency W.
struct PrintedCubic {
  cplx aux;
  cplx r3, r4, r5;
};

PrintedCubic printed_cubic(double G, double W) {
  const double W2 = W * W;
  PrintedCubic c;
  const cplx inner = 3.0 * W2 * G + std::sqrt(cplx(324.0 * G * G * W2 * W2 + 6912.0 * W2 * W2 * W2)) / 6.0;
  c.aux = std::cbrt(3.0) * std::pow(inner, 1.0 / 3.0);
  const cplx I(0.0, 1.0);
  const double s3 = std::sqrt(3.0);
  const cplx lead = -2.0 / (3.0 * c.aux) * G;
  c.r3 = lead - 4.0 * W2 + c.aux / 3.0;
  c.r4 = lead + 12.0 * (1.0 + I * s3) * W2 - (1.0 - I * s3) / c.aux;
  c.r5 = lead + 12.0 * (1.0 - I * s3) * W2 - (1.0 + I * s3) / c.aux;
  return c;
}

void add_roots(RootSet& rs, const std::string& prefix, int first, const Polynomial& poly,
               const std::vector<cplx>& printed) {
  const std::vector<cplx> num = ordered_roots(poly);
  for (std::size_t k = 0; k < num.size(); ++k) {
    RootEntry e;
    e.name = prefix + std::to_string(first + static_cast<int>(k));
    e.numeric = num[k];
    e.closed_form = k < printed.size() ? printed[k] : cplx(std::nan(""), std::nan(""));
    double best = std::numeric_limits<double>::infinity();
    for (const cplx& r : num) best = std::min(best, std::abs(r - e.closed_form));
    e.mismatch = best;
    rs.roots.push_back(e);
  }
}

}  // namespace

RootSet root_set(const SystemParams& p, Regime regime) {
  const SplitGenerator sg = split_generator(p, regime);
  const double G2 = p.gamma2 / 2, G3 = p.gamma3 / 2, G4 = p.gamma4 / 2;
  const cplx I(0.0, 1.0);
  RootSet rs;
  rs.regime = regime;
  if (regime == Regime::StrongRf) {
    const double W = p.omega_rf;
    rs.denominators["d2"] = block_poly(sg.base, {kRe12, kIm13});
    rs.denominators["d3"] = block_poly(sg.base, {kP22, kP33, kIm23});
    rs.denominators["d4"] = block_poly(sg.base, {kRe34, kIm24});
    rs.phi = std::sqrt(cplx(4 * W * W - (G2 - G3) * (G2 - G3)));
    const PrintedCubic c = printed_cubic(G2 + G3, W);
    rs.cubic_aux = c.aux;
    add_roots(rs, "alpha", 1, rs.denominators["d2"], {-G2 - G3 + I * rs.phi, -G2 - G3 - I * rs.phi});
    add_roots(rs, "alpha", 3, rs.denominators["d3"], {c.r3, c.r4, c.r5});
  } else {
    const double O1 = p.omega1, O3 = p.omega3;
    rs.denominators["d2p"] = Polynomial({G2 * G2 + 4 * O1 * O1, 2 * G2, 1.0});
    rs.denominators["d3p"] = block_poly(sg.base, {kP33, kP44, kIm34});
    rs.denominators["d4p"] = block_poly(sg.base, {kRe23, kIm13, kRe14, kIm24});
    rs.phi1 = std::sqrt(cplx(4 * O1 * O1 - G2 * G2));
    rs.phi2 = std::sqrt(cplx(4 * O3 * O3 - (G3 - G4) * (G3 - G4)));
    rs.phi3 = 4 * (O1 * O1 + O3 * O3) - (G2 * G2 + G3 * G3 + G4 * G4 - 2 * G3 * G4);
    const PrintedCubic c = printed_cubic(G3 + G4, O3);
    rs.cubic_aux = c.aux;
    add_roots(rs, "abar", 3, rs.denominators["d3p"], {c.r3, c.r4, c.r5});
    const double sum = G2 + G3 + G4;
    const cplx a67 = std::sqrt(rs.phi3 + 2.0 * rs.phi1 * rs.phi2);
    const cplx a89 = std::sqrt(rs.phi3 - 2.0 * rs.phi1 * rs.phi2);
    add_roots(rs, "abar", 6, rs.denominators["d4p"], {-sum - a67, -sum + a67, -sum - I * a89, -sum + I * a89});
  }
  return rs;
}

}  // namespace cascade
