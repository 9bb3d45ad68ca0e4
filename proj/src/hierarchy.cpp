#include "cascade/perturbation.hpp"

#include "block_algebra.hpp"
#include "cascade/errors.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>

namespace cascade {

using cplx = std::complex<double>;

namespace detail {

Resolvent faddeev_leverrier(const Eigen::MatrixXd& B) {
  const int n = static_cast<int>(B.rows());
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  std::vector<Eigen::MatrixXd> M(n + 1);
  M[0] = Eigen::MatrixXd::Zero(n, n);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    M[k] = B * M[k - 1] + c[n - k + 1] * I;
    c[n - k] = -(B * M[k]).trace() / k;
  }
  Resolvent r;
  std::vector<cplx> cc(c.begin(), c.end());
  r.charpoly = Polynomial(cc);
  r.adjugate.assign(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<cplx> a(n, 0.0);
      for (int k = 1; k <= n; ++k) a[n - k] = M[k](i, j);
      r.adjugate[i][j] = Polynomial(a);
    }
  return r;
}

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& A, const std::vector<int>& idx) {
  const int n = static_cast<int>(idx.size());
  Eigen::MatrixXd B(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) B(i, j) = A(idx[i], idx[j]);
  return B;
}

std::vector<std::vector<int>> coupled_blocks(const Eigen::MatrixXd& A) {
  const int n = static_cast<int>(A.rows());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && A(i, j) != 0.0) parent[find(i)] = find(j);
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[r]].push_back(i);
  }
  return blocks;
}

}  // namespace detail

std::string to_string(Regime r) { return r == Regime::StrongRf ? "strong" : "weak"; }

Regime regime_from_string(const std::string& s) {
  if (s == "strong" || s == "StrongRf") return Regime::StrongRf;
  if (s == "weak" || s == "WeakRf") return Regime::WeakRf;
  throw InvalidArgument("unknown regime '" + s + "'");
}

std::string to_string(Observable o) {
  switch (o) {
    case Observable::rho22: return "rho22";
    case Observable::rho33: return "rho33";
    case Observable::rho44: return "rho44";
  }
  return "";
}

int state_index(Observable o) { return kP22 + static_cast<int>(o); }
int level_of(Observable o) { return 2 + static_cast<int>(o); }

namespace {

Observable observable_for_level(int level) {
  if (level < 2 || level > 4) throw InvalidLevel("observable level must be 2..4");
  return static_cast<Observable>(level - 2);
}

// The hierarchy operators for one parameter set and regime.
struct Hierarchy {
  SplitGenerator sg;
  Vec15 x0;

  Hierarchy(const SystemParams& p, Regime regime, int init)
      : sg(split_generator(p, regime)), x0(prepare_state(init).vec()) {}

  // Order-k vectors X_0..X_order at complex s.
  std::vector<Eigen::VectorXcd> solve(cplx s, int order) const {
    if (order < 0 || order > kMaxOrder) throw InvalidArgument("hierarchy order must be 0.." + std::to_string(kMaxOrder));
    Eigen::MatrixXcd M = -sg.base.cast<cplx>();
    M.diagonal().array() += s;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
    if (!(lu.rcond() > 1e-12)) throw NearPole("s is too close to a pole of the unperturbed system");
    const Eigen::MatrixXcd A1 = sg.perturbation.cast<cplx>();
    std::vector<Eigen::VectorXcd> X;
    X.push_back(lu.solve(Eigen::VectorXcd(x0.cast<cplx>() + sg.base_source.cast<cplx>() / s)));
    for (int k = 1; k <= order; ++k) {
      Eigen::VectorXcd rhs = A1 * X.back();
      if (k == 1) rhs += sg.perturbation_source.cast<cplx>() / s;
      X.push_back(lu.solve(rhs));
    }
    return X;
  }
};

PsiVector to_psi(const Eigen::VectorXcd& X) {
  const cplx I(0.0, 1.0);
  PsiVector psi;
  const int slots[6] = {kRe12, kRe23, kRe34, kRe13, kRe14, kRe24};
  for (int k = 0; k < 6; ++k) psi[k] = X[slots[k]] + I * X[slots[k] + 1];
  psi[6] = X[kP22];
  psi[7] = X[kP33];
  psi[8] = X[kP44];
  return psi;
}

}  // namespace

SplitGenerator split_generator(const SystemParams& p, Regime regime) {
  if (!p.zero_detuning()) throw NonzeroDetuning("the perturbative hierarchy assumes zero detunings");
  const AffineGenerator full = build_generator(p);
  const AffineGenerator base = regime == Regime::StrongRf ? build_generator(p.with_drives(0.0, p.omega_rf, 0.0))
                                                          : build_generator(p.with_drives(p.omega1, 0.0, p.omega3));
  SplitGenerator sg;
  sg.base = base.A;
  sg.perturbation = full.A - base.A;
  sg.base_source = base.b;
  sg.perturbation_source = full.b - base.b;
  return sg;
}

LaplaceSolution laplace_solve(const SystemParams& params, Regime regime, int init, cplx s, int order) {
  const Hierarchy h(params, regime, init);
  const auto X = h.solve(s, order);
  LaplaceSolution out;
  out.total.fill(0.0);
  for (const auto& x : X) {
    out.by_order.push_back(to_psi(x));
    for (int i = 0; i < 9; ++i) out.total[i] += out.by_order.back()[i];
  }
  return out;
}

StateVector perturbative_steady_state(const SystemParams& params, Regime regime, int order) {
  if (order < 0 || order > kMaxOrder) throw InvalidArgument("hierarchy order must be 0.." + std::to_string(kMaxOrder));
  const SplitGenerator sg = split_generator(params, regime);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(Eigen::MatrixXd(sg.base));
  if (!(lu.rcond() > 1e-14)) throw SingularGenerator("unperturbed generator is singular");
  Eigen::VectorXd y = lu.solve(Eigen::VectorXd(-sg.base_source));
  Eigen::VectorXd total = y;
  for (int k = 1; k <= order; ++k) {
    Eigen::VectorXd rhs = -(sg.perturbation * y);
    if (k == 1) rhs -= sg.perturbation_source;
    y = lu.solve(rhs);
    total += y;
  }
  return StateVector(Vec15(total));
}

RationalFunction hierarchy_rational(const SystemParams& params, Regime regime, int init, Observable obs, int order) {
  if (order < 0 || order > kMaxOrder) throw InvalidArgument("hierarchy order must be 0.." + std::to_string(kMaxOrder));
  const Hierarchy h(params, regime, init);
  const Eigen::MatrixXd A0 = h.sg.base;
  const Eigen::MatrixXd& A1 = h.sg.perturbation;

  struct Block {
    std::vector<int> idx;
    detail::Resolvent res;
    std::string name;
  };
  std::vector<Block> blocks;
  std::vector<std::pair<std::string, Polynomial>> distinct;
  for (auto& idx : detail::coupled_blocks(A0)) {
    Block b{idx, detail::faddeev_leverrier(detail::submatrix(A0, idx)), ""};
    for (const auto& [name, poly] : distinct) {
      const double scale = std::max(poly.norm(), b.res.charpoly.norm());
      if (poly.degree() == b.res.charpoly.degree() && (poly - b.res.charpoly).norm() <= 1e-14 * scale) {
        b.name = name;
        b.res.charpoly = poly;
        break;
      }
    }
    if (b.name.empty()) {
      b.name = "q" + std::to_string(distinct.size() + 1);
      distinct.emplace_back(b.name, b.res.charpoly);
    }
    blocks.push_back(std::move(b));
  }

  using Vec = std::array<RationalFunction, kDim>;
  const RationalFunction inv_s = RationalFunction::inverse("s", s_poly());

  auto resolvent = [&](const Vec& v) {
    Vec out;
    for (const Block& b : blocks) {
      const int n = static_cast<int>(b.idx.size());
      for (int i = 0; i < n; ++i) {
        RationalFunction acc;
        for (int j = 0; j < n; ++j)
          if (!v[b.idx[j]].is_zero() && !b.res.adjugate[i][j].is_zero()) acc += v[b.idx[j]] * b.res.adjugate[i][j];
        out[b.idx[i]] = acc.is_zero() ? acc : acc.divided_by(b.name, b.res.charpoly);
      }
    }
    return out;
  };
  auto couple = [&](const Vec& v) {
    Vec out;
    for (int j = 0; j < kDim; ++j)
      for (int l = 0; l < kDim; ++l)
        if (A1(j, l) != 0.0 && !v[l].is_zero()) out[j] += v[l] * cplx(A1(j, l));
    return out;
  };

  Vec src;
  for (int j = 0; j < kDim; ++j) {
    if (h.x0[j] != 0.0) src[j] += RationalFunction::constant(h.x0[j]);
    if (h.sg.base_source[j] != 0.0) src[j] += inv_s * cplx(h.sg.base_source[j]);
  }
  Vec X = resolvent(src);
  const int target = state_index(obs);
  RationalFunction total = X[target];
  for (int k = 1; k <= order; ++k) {
    Vec rhs = couple(X);
    if (k == 1)
      for (int j = 0; j < kDim; ++j)
        if (h.sg.perturbation_source[j] != 0.0) rhs[j] += inv_s * cplx(h.sg.perturbation_source[j]);
    X = resolvent(rhs);
    total += X[target];
  }
  total.set_provenance("hierarchy " + to_string(regime) + " |" + std::to_string(init) + "> " + to_string(obs) +
                       " order " + std::to_string(order));
  return total;
}

ExponentialSum analytic_g2_sum(const SystemParams& params, Regime regime, ModePair pair, int order) {
  pair.validate();
  const RationalFunction rf =
      hierarchy_rational(params, regime, pair.init_level(), observable_for_level(pair.observed_level()), order);
  const ExponentialSum es = invert_rational(rf);
  const cplx norm = es.constant_term();
  if (!(std::abs(norm) >= 1e-14))
    throw ZeroSteadyState("analytic g2(" + pair.label() + "): perturbative steady state vanishes at order " +
                          std::to_string(order));
  if (!(es.max_rate_real() < 0.0)) throw InvalidArgument("analytic g2: hierarchy has a non-decaying mode");
  return es.scaled(1.0 / norm);
}

CorrelationSeries analytic_g2(const SystemParams& params, Regime regime, ModePair pair,
                              const std::vector<double>& taus, int order) {
  const ExponentialSum es = analytic_g2_sum(params, regime, pair, order);
  CorrelationSeries out;
  out.pair = pair;
  out.taus = taus;
  out.norm = perturbative_steady_state(params, regime, order).population(pair.observed_level());
  for (double t : taus) out.values.push_back(es(t));
  return out;
}

CorrelationSeries talbot_g2(const SystemParams& params, Regime regime, ModePair pair, const std::vector<double>& taus,
                            int order) {
  pair.validate();
  const Hierarchy h(params, regime, pair.init_level());
  const int target = state_index(observable_for_level(pair.observed_level()));
  const double norm = perturbative_steady_state(params, regime, order).vec()[target];
  if (!(std::abs(norm) >= 1e-14)) throw ZeroSteadyState("talbot g2: perturbative steady state vanishes");

  const Eigen::VectorXcd ev = Eigen::EigenSolver<Mat15>(h.sg.base, false).eigenvalues();
  double max_real = 0.0, max_imag = 0.0;
  for (const cplx& e : ev) {
    max_real = std::max(max_real, e.real());
    max_imag = std::max(max_imag, std::abs(e.imag()));
  }
  auto F = [&](cplx s) {
    cplx acc = 0.0;
    for (const auto& x : h.solve(s, order)) acc += x[target];
    return acc;
  };
  CorrelationSeries out;
  out.pair = pair;
  out.taus = taus;
  out.norm = norm;
  for (double t : taus) {
    const double v = t > 0.0 ? talbot_invert(F, t, TalbotContour::enclosing(t, max_real, max_imag)) : h.x0[target];
    out.values.push_back(v / norm);
  }
  return out;
}

double coefficient_identities(const ExponentialSum& es) { return std::abs(es.evaluate_complex(0.0)); }

TalbotContour contour_for(const RationalFunction& rf, double t) {
  double max_real = 0.0, max_imag = 0.0;
  for (const auto& f : rf.factors())
    for (const cplx& r : f.poly.roots()) {
      max_real = std::max(max_real, r.real());
      max_imag = std::max(max_imag, std::abs(r.imag()));
    }
  return TalbotContour::enclosing(t, max_real, max_imag);
}

}  // namespace cascade
