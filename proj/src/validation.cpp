#include "cascade/validation.hpp"

#include "cascade/errors.hpp"

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace cascade {

using cplx = std::complex<double>;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::info: return "info";
  }
  return "";
}

bool ValidationReport::passed() const {
  for (const Check& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

const Check* ValidationReport::find(const std::string& id) const {
  for (const Check& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

std::string fmt_g(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  for (const Check& c : checks) {
    os << "[" << to_string(c.status) << "] " << c.id << " " << c.name << ": value=" << fmt_g(c.value, 6)
       << " tol=" << fmt_g(c.tolerance, 6);
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  int n_fail = 0, n_pass = 0;
  for (const Check& c : checks) {
    n_fail += c.status == CheckStatus::fail;
    n_pass += c.status == CheckStatus::pass;
  }
  os << n_pass << " passed, " << n_fail << " failed, " << checks.size() - n_pass - n_fail << " info\n";
  return os.str();
}

std::string ValidationReport::to_csv(int precision) const {
  std::ostringstream os;
  os << "id,name,status,value,tolerance,reference,detail\n";
  for (const Check& c : checks)
    os << csv_field(c.id) << ',' << csv_field(c.name) << ',' << to_string(c.status) << ','
       << fmt_g(c.value, precision) << ',' << fmt_g(c.tolerance, precision) << ',' << csv_field(c.reference) << ','
       << csv_field(c.detail) << '\n';
  return os.str();
}

StateVector brute_force_evolve(const AffineGenerator& gen, const StateVector& x0, double t) {
  if (!(t >= 0.0)) throw InvalidArgument("brute_force_evolve: t must be >= 0");
  if (t == 0.0) return x0;
  using LMat = Eigen::Matrix<long double, kDim + 1, kDim + 1>;
  LMat M = LMat::Zero();
  M.topLeftCorner<kDim, kDim>() = gen.A.cast<long double>() * static_cast<long double>(t);
  M.topRightCorner<kDim, 1>() = gen.b.cast<long double>() * static_cast<long double>(t);

  const long double norm = M.cwiseAbs().colwise().sum().maxCoeff();
  int j = 0;
  while (std::ldexp(norm, -j) > 0.25L) ++j;
  M /= std::ldexp(1.0L, j);

  LMat E = LMat::Identity();
  LMat term = LMat::Identity();
  for (int k = 1; k < 60; ++k) {
    term = term * M / static_cast<long double>(k);
    E += term;
    if (term.cwiseAbs().maxCoeff() < 1e-30L) break;
  }
  for (int k = 0; k < j; ++k) E = E * E;

  Eigen::Matrix<long double, kDim + 1, 1> y;
  y.head<kDim>() = x0.vec().cast<long double>();
  y[kDim] = 1.0L;
  const auto r = (E * y).eval();
  return StateVector(Vec15(r.head<kDim>().cast<double>()));
}

SystemParams random_params(std::uint64_t seed, int index) {
  std::mt19937_64 rng(seed + 7919ULL * static_cast<std::uint64_t>(index));
  std::uniform_real_distribution<double> om(0.1, 30.0), ga(0.1, 3.0);
  const double g2 = ga(rng), g3 = ga(rng), g4 = ga(rng);
  SystemParams p = SystemParams::from_gammas(g2, g3, g4);
  p.omega1 = om(rng);
  p.omega_rf = om(rng);
  p.omega3 = om(rng);
  return p;
}

SystemParams weak_field_params() { return SystemParams::from_gammas(1.0, 2.0, 0.16).with_drives(0.05, 0.05, 0.05); }

SystemParams perturbative_params(GammaPreset g) { return SystemParams::preset(g).with_drives(0.2, 20.0, 0.2); }

SystemParams weak_rf_params(GammaPreset g) { return SystemParams::preset(g).with_drives(4.0, 0.2, 4.0); }

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Check make(std::string id, std::string name, std::string ref) {
  Check c;
  c.id = std::move(id);
  c.name = std::move(name);
  c.reference = std::move(ref);
  return c;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = a + (b - a) * k / (n - 1);
  return v;
}

double sup_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// sup |a - b| / sup |b|
double rel_sup_error(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d / sup_abs(b);
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "; " : "") + parts[k];
  return s;
}

double g31_peak_ratio(const SystemParams& p) {
  const AffineGenerator gen = build_generator(p);
  const CorrelationSeries s = g2(gen, {3, 1}, make_tau_grid(10.0 / p.min_gamma(), 400));
  return s.values.front() / sup_abs(s.values);
}

}  // namespace

Check check_antibunching(const ValidationOptions& o) {
  Check c = make("C1", "antibunching g31(0) / max g31", "g31(0) = 0");
  const auto t0 = Clock::now();
  double worst = g31_peak_ratio(fig2_params(o.gammas));
  for (int k = 0; k < o.random_sets; ++k) worst = std::max(worst, g31_peak_ratio(random_params(o.seed, k)));
  const double elapsed = seconds_since(t0);
  c.value = worst;
  c.tolerance = 1e-8;
  c.status = worst < 1e-8 && elapsed < 30.0 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "Fig. 2 preset + " + std::to_string(o.random_sets) + " random sets in " + fmt_g(elapsed, 3) + " s";
  return c;
}

Check check_bunching(const ValidationOptions& o) {
  Check c = make("C2", "bunching min(g21(0), g32(0))", "adjacent pairs bunch");
  const AffineGenerator gen = build_generator(fig2_params(o.gammas));
  const double g21 = g2(gen, {2, 1}, {0.0}).values[0];
  const double g32 = g2(gen, {3, 2}, {0.0}).values[0];
  c.value = std::min(g21, g32);
  c.tolerance = 0.05;
  c.status = c.value > 0.05 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "g21(0)=" + fmt_g(g21, 6) + " g32(0)=" + fmt_g(g32, 6);
  return c;
}

Check check_cs_violation(const ValidationOptions&) {
  Check c = make("C3", "Cauchy-Schwarz R_max (min over presets)", "R_max of order 1e3-1e6, growing with Omega_rf");
  bool ok = true;
  double worst = std::numeric_limits<double>::infinity();
  std::vector<std::string> parts;
  for (GammaPreset g : {GammaPreset::physical, GammaPreset::unit}) {
    double prev = 0.0;
    for (double orf : {4.0, 10.0, 20.0}) {
      const SystemParams p = fig4_params(orf, g);
      const AffineGenerator gen = build_generator(p);
      const auto taus = default_tau_grid(p);
      const CSRatioResult r = cs_ratio(g2(gen, {3, 1}, taus), g2(gen, {1, 1}, taus), g2(gen, {3, 3}, taus));
      ok = ok && r.r_max >= 1e2 && r.r_max <= 1e7 && r.r_max > prev;
      prev = r.r_max;
      worst = std::min(worst, r.r_max);
      parts.push_back(to_string(g) + " rf=" + fmt_g(orf, 3) + ": " + fmt_g(r.r_max, 4));
    }
  }
  c.value = worst;
  c.tolerance = 1e2;
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  c.detail = join(parts);
  return c;
}

Check check_delay_trend(const ValidationOptions& o) {
  Check c = make("C4", "tau_d trend (Omega1 / Omega_rf total-variation ratio)", "Fig. 3");
  const auto grid = linspace(4.0, 20.0, 9);
  const SystemParams base = SystemParams::preset(o.gammas);
  const DelayScan rf = scan_tau_d(base.with_drives(4.0, 4.0, 4.0), SweptField::omega_rf, grid);
  const DelayScan o3 = scan_tau_d(base.with_drives(4.0, 4.0, 4.0), SweptField::omega3, grid);
  const DelayScan o1 = scan_tau_d(base.with_drives(4.0, 12.0, 4.0), SweptField::omega1, grid);
  auto decreasing = [](const DelayScan& s) {
    for (std::size_t k = 0; k < s.tau_d.size(); ++k) {
      if (!std::isfinite(s.tau_d[k])) return false;
      if (k > 0 && !(s.tau_d[k] < s.tau_d[k - 1])) return false;
    }
    return true;
  };
  auto variation = [](const DelayScan& s) {
    double v = 0.0;
    for (std::size_t k = 1; k < s.tau_d.size(); ++k) v += std::abs(s.tau_d[k] - s.tau_d[k - 1]);
    return v;
  };
  const double tv1 = variation(o1), tvrf = variation(rf);
  const bool ok = decreasing(rf) && decreasing(o3) && std::isfinite(tv1) && tv1 < tvrf;
  c.value = tv1 / tvrf;
  c.tolerance = 1.0;
  c.status = ok ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "rf: " + fmt_g(rf.tau_d.front(), 4) + " -> " + fmt_g(rf.tau_d.back(), 4) + (decreasing(rf) ? " strictly decreasing" : " NOT decreasing") +
             "; omega3: " + fmt_g(o3.tau_d.front(), 4) + " -> " + fmt_g(o3.tau_d.back(), 4) +
             (decreasing(o3) ? " strictly decreasing" : " NOT decreasing") + "; TV omega1=" + fmt_g(tv1, 4) +
             " TV rf=" + fmt_g(tvrf, 4);
  return c;
}

Check check_weak_field_closed_form(const ValidationOptions&) {
  Check c = make("C5", "weak-field g31 vs printed closed form (peak-normalized sup diff)",
                 "g31 = 2/(G3-G2)(exp(-G2 t/2) - exp(-G3 t/2))");
  const SystemParams p = weak_field_params();
  const auto taus = linspace(0.0, 4.0, 801);
  const CorrelationSeries ex = g2(build_generator(p), {3, 1}, taus);
  std::vector<double> closed(taus.size()), full(taus.size());
  for (std::size_t k = 0; k < taus.size(); ++k) {
    closed[k] = std::exp(-p.gamma2 * taus[k] / 2) - std::exp(-p.gamma3 * taus[k] / 2);
    full[k] = std::exp(-p.gamma2 * taus[k]) - std::exp(-p.gamma3 * taus[k]);
  }
  auto peak_normalized_diff = [](const std::vector<double>& a, const std::vector<double>& b) {
    const double ma = sup_abs(a), mb = sup_abs(b);
    double d = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] / ma - b[k] / mb));
    return d;
  };
  c.value = peak_normalized_diff(ex.values, closed);
  c.tolerance = 0.02;
  c.status = c.value <= 0.02 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "same comparison against exp(-G2 t) - exp(-G3 t): " + fmt_g(peak_normalized_diff(ex.values, full), 4);
  return c;
}

Check check_perturbative_agreement(const ValidationOptions& o) {
  Check c = make("C6", "strong-rf analytic g33, g31 vs exact (relative sup error)", "strong-rf perturbative solution");
  const SystemParams p = perturbative_params(o.gammas);
  const AffineGenerator gen = build_generator(p);
  const auto dense = linspace(0.1, 5.0, 491);
  const auto sparse = linspace(0.1, 5.0, 50);
  double worst = 0.0;
  std::vector<std::string> parts;
  for (ModePair pair : {ModePair{3, 3}, ModePair{3, 1}}) {
    const double e_res = rel_sup_error(analytic_g2(p, Regime::StrongRf, pair, dense).values, g2(gen, pair, dense).values);
    const double e_tal = rel_sup_error(talbot_g2(p, Regime::StrongRf, pair, sparse).values, g2(gen, pair, sparse).values);
    worst = std::max({worst, e_res, e_tal});
    parts.push_back("g" + pair.label() + " residue " + fmt_g(e_res, 3) + " talbot " + fmt_g(e_tal, 3));
  }
  c.value = worst;
  c.tolerance = 0.05;
  c.status = worst <= 0.05 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = join(parts) + "; order " + std::to_string(kAnalyticOrder);
  return c;
}

Check check_coefficient_identities(const ValidationOptions& o) {
  Check c = make("C7", "coefficient identities |1 + sum a|, |1 + sum b|, |1 + sum c|", "a_N + sum a_i = 0");
  const SystemParams p = perturbative_params(o.gammas);
  double worst = 0.0;
  std::vector<std::string> parts;
  for (ModePair pair : {ModePair{1, 1}, ModePair{3, 1}, ModePair{3, 3}}) {
    const double r = coefficient_identities(analytic_g2_sum(p, Regime::StrongRf, pair));
    worst = std::max(worst, r);
    parts.push_back("g" + pair.label() + ": " + fmt_g(r, 3));
  }
  c.value = worst;
  c.tolerance = 1e-8;
  c.status = worst < 1e-8 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = join(parts);
  return c;
}

Check check_oracle_triangle(const ValidationOptions& o) {
  Check c = make("C8", "oracle triangle (backends abs sup; inversion engines relative)", "numerical oracles");
  const auto taus = linspace(0.0, 10.0, 41);
  double backend = 0.0;
  for (int k = 0; k < o.oracle_sets; ++k) {
    const SystemParams p = random_params(o.seed ^ 0x5bd1e995ULL, k);
    const AffineGenerator gen = build_generator(p);
    const StateVector x0 = prepare_state(1 + k % 4);
    const Trajectory te = evolve(gen, x0, taus, Backend::expm);
    const Trajectory tr = evolve(gen, x0, taus, Backend::rk);
    for (std::size_t i = 0; i < taus.size(); ++i) {
      const Vec15 xb = brute_force_evolve(gen, x0, taus[i]).vec();
      backend = std::max({backend, (te.states[i].vec() - tr.states[i].vec()).cwiseAbs().maxCoeff(),
                          (te.states[i].vec() - xb).cwiseAbs().maxCoeff(),
                          (tr.states[i].vec() - xb).cwiseAbs().maxCoeff()});
    }
  }
  double inversion = 0.0;
  const auto times = linspace(0.05, 10.0, 20);
  for (const AppendixEntry& e : appendix_catalogue()) {
    const SystemParams p = e.regime == Regime::StrongRf ? perturbative_params(o.gammas) : weak_rf_params(o.gammas);
    const RationalFunction rf = appendix_rational(p, e.regime, e.init, e.obs);
    const ExponentialSum es = invert_rational(rf);
    std::vector<double> a, b;
    for (double t : times) {
      a.push_back(es(t));
      b.push_back(talbot_invert(rf, t, contour_for(rf, t)));
    }
    inversion = std::max(inversion, rel_sup_error(b, a));
  }
  c.value = std::max(backend / 1e-7, inversion / 1e-8);
  c.tolerance = 1.0;
  c.status = backend < 1e-7 && inversion < 1e-8 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "rk/expm/brute max abs " + fmt_g(backend, 3) + " (tol 1e-7); residue/talbot max rel " +
             fmt_g(inversion, 3) + " (tol 1e-8) over " + std::to_string(appendix_catalogue().size()) + " entries";
  return c;
}

Check check_dissipativity(const ValidationOptions& o) {
  Check c = make("C9", "dissipativity and g2 -> 1", "master equation; g2 normalization");
  std::vector<SystemParams> sets = {fig2_params(GammaPreset::physical), fig2_params(GammaPreset::unit),
                                    perturbative_params(o.gammas), weak_rf_params(o.gammas), weak_field_params()};
  for (GammaPreset g : {GammaPreset::physical, GammaPreset::unit})
    for (double orf : {4.0, 10.0, 20.0}) sets.push_back(fig4_params(orf, g));
  for (int k = 0; k < 20; ++k) sets.push_back(random_params(o.seed, k));

  double max_re = -std::numeric_limits<double>::infinity();
  double max_dev = 0.0;
  for (const SystemParams& p : sets) {
    const AffineGenerator gen = build_generator(p);
    const Eigen::VectorXcd ev = Eigen::EigenSolver<Mat15>(gen.A, false).eigenvalues();
    for (const cplx& e : ev) max_re = std::max(max_re, e.real());
    const double T = 50.0 / p.min_gamma();
    for (ModePair pair : {ModePair{1, 1}, ModePair{3, 3}, ModePair{3, 1}, ModePair{2, 1}, ModePair{3, 2}}) {
      const CorrelationSeries s = g2(gen, pair, {0.0, T});
      max_dev = std::max(max_dev, std::abs(s.values.back() - 1.0));
    }
  }
  c.value = max_dev;
  c.tolerance = 1e-4;
  c.status = max_re <= 1e-10 && max_dev < 1e-4 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = "max Re(eig) " + fmt_g(max_re, 4) + " over " + std::to_string(sets.size()) + " sets; max |g - 1| at 50/min(G) " +
             fmt_g(max_dev, 3);
  return c;
}

Check check_determinism(const ValidationOptions& o, double elapsed_seconds) {
  Check c = make("C10", "determinism and runtime (s)", "reproducibility");
  auto compute = [&] {
    const SystemParams p = fig2_params(o.gammas);
    const AffineGenerator gen = build_generator(p);
    const auto taus = make_tau_grid(2.0, 400, GridSpacing::linear);
    std::vector<double> all;
    for (ModePair pair : {ModePair{3, 1}, ModePair{3, 2}, ModePair{2, 1}}) {
      const auto v = g2(gen, pair, taus).values;
      all.insert(all.end(), v.begin(), v.end());
    }
    const DelayScan s = scan_tau_d(SystemParams::preset(o.gammas).with_drives(4, 4, 4), SweptField::omega_rf,
                                   {4.0, 12.0, 20.0});
    all.insert(all.end(), s.tau_d.begin(), s.tau_d.end());
    return all;
  };
  const auto t0 = Clock::now();
  const bool same = compute() == compute();
  const double total = elapsed_seconds + seconds_since(t0);
  c.value = total;
  c.tolerance = 60.0;
  c.status = same && total < 60.0 ? CheckStatus::pass : CheckStatus::fail;
  c.detail = std::string(same ? "repeat runs bit-identical" : "repeat runs DIFFER") + ", suite time " + fmt_g(total, 3) + " s";
  return c;
}

std::vector<Check> info_checks(const ValidationOptions& o) {
  std::vector<Check> out;

  // Printed root formulas against companion-matrix roots.
  for (Regime r : {Regime::StrongRf, Regime::WeakRf}) {
    const SystemParams p = r == Regime::StrongRf ? fig2_params(o.gammas) : weak_rf_params(o.gammas);
    const RootSet rs = root_set(p, r);
    for (const RootEntry& e : rs.roots) {
      Check c = make("I-root-" + to_string(r) + "-" + e.name, "printed root formula vs numerical root", "closed-form roots");
      c.value = e.mismatch;
      c.tolerance = 1e-8 * std::max(1.0, std::abs(e.numeric));
      c.detail = "numeric " + fmt_g(e.numeric.real(), 6) + (e.numeric.imag() < 0 ? "" : "+") + fmt_g(e.numeric.imag(), 6) +
                 "i, printed " + fmt_g(e.closed_form.real(), 6) + (e.closed_form.imag() < 0 ? "" : "+") +
                 fmt_g(e.closed_form.imag(), 6) + "i";
      out.push_back(c);
    }
  }

  // Initial-value theorem and agreement with the model-derived hierarchy for
  // each printed Laplace-space solution.
  for (const AppendixEntry& e : appendix_catalogue()) {
    const SystemParams p = e.regime == Regime::StrongRf ? perturbative_params(o.gammas) : weak_rf_params(o.gammas);
    const RationalFunction rf = appendix_rational(p, e.regime, e.init, e.obs);
    const std::string tag = to_string(e.regime) + "-" + std::to_string(e.init) + "-" + to_string(e.obs);
    const double expected = e.init == level_of(e.obs) ? 1.0 : 0.0;
    Check iv = make("I-initial-" + tag, "printed solution: lim s F(s) - initial population", "Laplace-space solution");
    iv.value = std::abs(rf.initial_value() - expected);
    iv.tolerance = 1e-10;
    out.push_back(iv);

    const RationalFunction ref = hierarchy_rational(p, e.regime, e.init, e.obs, kAnalyticOrder);
    const ExponentialSum a = invert_rational(rf), b = invert_rational(ref);
    std::vector<double> va, vb;
    for (double t : linspace(0.05, 10.0, 40)) {
      va.push_back(a(t));
      vb.push_back(b(t));
    }
    Check cmp = make("I-laplace-" + tag, "printed solution vs hierarchy (relative sup)", "Laplace-space solution");
    cmp.value = rel_sup_error(va, vb);
    cmp.tolerance = 0.05;
    out.push_back(cmp);
  }

  // Printed weak-field g11 against the inverted 2 O1^2 / (s d2p).
  {
    const SystemParams p = weak_rf_params(o.gammas);
    const double a = p.gamma2 / 2, w = 2 * p.omega1;
    const double d0 = 2 * p.omega1 * p.omega1 / (4 * p.omega1 * p.omega1 + a * a);
    const double d1 = a * d0 / (2 * p.omega1);
    const ExponentialSum es = invert_rational(appendix_rational(p, Regime::WeakRf, 1, Observable::rho22));
    const double norm = es.constant_term().real();
    double dev = 0.0;
    for (double t : linspace(0.0, 10.0, 101)) {
      const double printed = 1.0 - std::exp(-a * t) * (std::cos(w * t) - d1 * std::sin(w * t));
      dev = std::max(dev, std::abs(es(t) / norm - printed));
    }
    Check c = make("I-weak-g11-closed-form", "printed weak-rf g11 vs inverted 2 O1^2/(s d2p)", "weak-rf g11 closed form");
    c.value = dev;
    c.tolerance = 1e-8;
    c.detail = "d0=" + fmt_g(d0, 6) + " d1=" + fmt_g(d1, 6);
    out.push_back(c);
  }

  // Perturbative accuracy as Omega1 = Omega3 grows toward Omega_rf.
  {
    const auto taus = linspace(0.1, 5.0, 246);
    for (double ratio : {0.005, 0.01, 0.02, 0.05, 0.1}) {
      const SystemParams p = SystemParams::preset(o.gammas).with_drives(20.0 * ratio, 20.0, 20.0 * ratio);
      Check c = make("I-regime-" + fmt_g(ratio, 3), "strong-rf analytic g31 relative sup error, Omega/Omega_rf = " + fmt_g(ratio, 3),
                     "strong-rf regime");
      c.value = rel_sup_error(analytic_g2(p, Regime::StrongRf, {3, 1}, taus).values,
                              g2(build_generator(p), {3, 1}, taus).values);
      c.tolerance = 0.05;
      out.push_back(c);
    }
  }

  // Printed branching gamma23 = gamma34 = 1.
  {
    const AffineGenerator gen = build_generator(SystemParams::printed_branching(o.gammas).with_drives(4, 20, 4));
    const Eigen::VectorXcd ev = Eigen::EigenSolver<Mat15>(gen.A, false).eigenvalues();
    double mx = -1e300;
    for (const cplx& e : ev) mx = std::max(mx, e.real());
    Check c = make("I-printed-branching", "max Re(eig) with gamma23 = gamma34 = 1 taken literally", "decay branching");
    c.value = mx;
    c.tolerance = 0.0;
    c.detail = mx > 0 ? "unstable: population grows without bound" : "stable";
    out.push_back(c);
  }

  // Zero-drive preset: correlations undefined.
  {
    Check c = make("I-zero-drive", "g2 with all drives off", "g2 normalization");
    try {
      g2(build_generator(SystemParams::preset(o.gammas)), {3, 1}, {0.0, 1.0});
      c.detail = "unexpectedly defined";
    } catch (const ZeroSteadyState& e) {
      c.detail = std::string("ZeroSteadyState: ") + e.what();
    }
    out.push_back(c);
  }

  // Positivity along the Fig. 2 trajectories.
  {
    const AffineGenerator gen = build_generator(fig2_params(o.gammas));
    double worst = 0.0;
    for (int level = 1; level <= 4; ++level) {
      const Trajectory tr = evolve(gen, prepare_state(level), make_tau_grid(10.0, 400, GridSpacing::linear));
      for (const StateVector& x : tr.states)
        for (int i = 1; i <= 4; ++i)
          for (int j = i + 1; j <= 4; ++j)
            worst = std::max(worst, std::norm(x.element(i, j)) - x.population(i) * x.population(j));
    }
    Check c = make("I-positivity", "max(|rho_ij|^2 - rho_ii rho_jj) along Fig. 2 trajectories", "density-matrix bounds");
    c.value = worst;
    c.tolerance = 1e-9;
    c.detail = worst > 1e-9 ? "flagged" : "within bounds";
    out.push_back(c);
  }
  return out;
}

ValidationReport run_validation(const ValidationOptions& o) {
  const auto t0 = Clock::now();
  ValidationReport r;
  auto guarded = [&](const char* id, const char* name, auto&& fn) {
    try {
      r.checks.push_back(fn());
    } catch (const std::exception& e) {
      Check c = make(id, name, "");
      c.status = CheckStatus::fail;
      c.detail = std::string("error: ") + e.what();
      r.checks.push_back(c);
    }
  };
  guarded("C1", "antibunching", [&] { return check_antibunching(o); });
  guarded("C2", "bunching", [&] { return check_bunching(o); });
  guarded("C3", "Cauchy-Schwarz", [&] { return check_cs_violation(o); });
  guarded("C4", "tau_d trend", [&] { return check_delay_trend(o); });
  guarded("C5", "weak-field closed form", [&] { return check_weak_field_closed_form(o); });
  guarded("C6", "perturbative agreement", [&] { return check_perturbative_agreement(o); });
  guarded("C7", "coefficient identities", [&] { return check_coefficient_identities(o); });
  guarded("C8", "oracle triangle", [&] { return check_oracle_triangle(o); });
  guarded("C9", "dissipativity", [&] { return check_dissipativity(o); });
  try {
    for (Check& c : info_checks(o)) r.checks.push_back(std::move(c));
  } catch (const std::exception& e) {
    Check c = make("I-error", "info checks", "");
    c.detail = std::string("error: ") + e.what();
    r.checks.push_back(c);
  }
  guarded("C10", "determinism", [&] { return check_determinism(o, seconds_since(t0)); });
  return r;
}

}  // namespace cascade
