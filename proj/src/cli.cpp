#include "cascade/cli.hpp"

#include "cascade/errors.hpp"
#include "cascade/validation.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace cascade {

std::string format_number(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

namespace {

class Csv {
 public:
  Csv(const RunConfig& cfg, const std::string& header) : precision_(cfg.precision) {
    os_ << "# preset=" << to_string(cfg.preset) << "; rates and times in units of gamma = 2 pi MHz (t = gamma tau)\n";
    os_ << header << "\n";
  }

  Csv& row(const std::vector<double>& values) {
    for (std::size_t k = 0; k < values.size(); ++k) os_ << (k ? "," : "") << format_number(values[k], precision_);
    os_ << "\n";
    return *this;
  }
  Csv& raw_row(const std::string& s) {
    os_ << s << "\n";
    return *this;
  }
  std::string num(double v) const { return format_number(v, precision_); }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
  int precision_;
};

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open '" + path.string() + "' for writing");
  f << content;
  if (!f) throw Error("write to '" + path.string() + "' failed");
}

void emit(const RunConfig& cfg, const Csv& csv, std::ostream& out) {
  if (cfg.path.empty()) out << csv.str();
  else write_file(cfg.path, csv.str());
}

const char* kStateHeader =
    "rho11,rho22,rho33,rho44,re_rho12,im_rho12,re_rho23,im_rho23,re_rho34,im_rho34,"
    "re_rho13,im_rho13,re_rho14,im_rho14,re_rho24,im_rho24";

std::vector<double> state_row(const StateVector& x) {
  std::vector<double> r;
  for (int level = 1; level <= 4; ++level) r.push_back(x.population(level));
  for (int k = kRe12; k <= kIm24; ++k) r.push_back(x[k]);
  return r;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = n == 1 ? a : a + (b - a) * k / (n - 1);
  return v;
}

void add_scan_rows(Csv& csv, const DelayScan& s) {
  for (std::size_t k = 0; k < s.field_values.size(); ++k)
    csv.raw_row(csv.num(s.field_values[k]) + "," + to_string(s.swept_field) + "," + csv.num(s.tau_d[k]));
}

int cmd_steady(const RunConfig& cfg, std::ostream& out) {
  Csv csv(cfg, kStateHeader);
  csv.row(state_row(steady_state(build_generator(cfg.system))));
  emit(cfg, csv, out);
  return 0;
}

int cmd_evolve(const RunConfig& cfg, int init, std::ostream& out) {
  const Trajectory tr = evolve(build_generator(cfg.system), prepare_state(init), cfg.tau_grid(), cfg.backend);
  Csv csv(cfg, std::string("t,") + kStateHeader);
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    std::vector<double> r = state_row(tr.states[k]);
    r.insert(r.begin(), tr.times[k]);
    csv.row(r);
  }
  emit(cfg, csv, out);
  return 0;
}

int cmd_g2(const RunConfig& cfg, ModePair pair, std::ostream& out) {
  const CorrelationSeries s = g2(build_generator(cfg.system), pair, cfg.tau_grid(), cfg.backend);
  Csv csv(cfg, "tau,g" + pair.label());
  for (std::size_t k = 0; k < s.taus.size(); ++k) csv.row({s.taus[k], s.values[k]});
  emit(cfg, csv, out);
  return 0;
}

int cmd_cs(const RunConfig& cfg, std::ostream& out) {
  const AffineGenerator gen = build_generator(cfg.system);
  const auto taus = cfg.tau_grid();
  const CorrelationSeries g31 = g2(gen, {3, 1}, taus, cfg.backend);
  const CorrelationSeries g11 = g2(gen, {1, 1}, taus, cfg.backend);
  const CorrelationSeries g33 = g2(gen, {3, 3}, taus, cfg.backend);
  const CSRatioResult r = cs_ratio(g31, g11, g33, cfg.cs_definition);
  Csv csv(cfg, "tau,g31,g11,g33,R");
  for (std::size_t k = 0; k < taus.size(); ++k) csv.row({taus[k], g31.values[k], g11.values[k], g33.values[k], r.R[k]});
  emit(cfg, csv, out);
  out << "r_max=" << csv.num(r.r_max) << " tau_at_max=" << csv.num(r.tau_at_max)
      << " definition=" << to_string(r.definition) << "\n";
  return 0;
}

int cmd_scan(const RunConfig& cfg, const CliFlags& f, std::ostream& out, std::ostream& err) {
  const DelayScan s = scan_tau_d(cfg.system, swept_field_from_string(f.sweep), linspace(f.from, f.to, f.points));
  Csv csv(cfg, "field,sweep_name,tau_d");
  add_scan_rows(csv, s);
  emit(cfg, csv, out);
  for (std::size_t k = 0; k < s.errors.size(); ++k)
    if (!s.errors[k].empty()) err << "warning: " << to_string(s.swept_field) << "=" << csv.num(s.field_values[k]) << ": " << s.errors[k] << "\n";
  return 0;
}

int cmd_roots(const RunConfig& cfg, Regime regime, std::ostream& out) {
  const RootSet rs = root_set(cfg.system, regime);
  Csv csv(cfg, "name,re_numeric,im_numeric,re_printed,im_printed,mismatch");
  for (const RootEntry& e : rs.roots)
    csv.raw_row(e.name + "," + csv.num(e.numeric.real()) + "," + csv.num(e.numeric.imag()) + "," +
                csv.num(e.closed_form.real()) + "," + csv.num(e.closed_form.imag()) + "," + csv.num(e.mismatch));
  emit(cfg, csv, out);
  return 0;
}

int cmd_figures(const RunConfig& cfg, std::ostream& out) {
  const std::filesystem::path dir = cfg.path.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.path);
  std::filesystem::create_directories(dir);
  const auto taus = cfg.tau_grid();
  SystemParams rates = cfg.system.with_drives(0, 0, 0);
  rates.delta1 = rates.delta2 = rates.delta3 = 0.0;

  {
    const AffineGenerator gen = build_generator(rates.with_drives(4.0, 20.0, 4.0));
    const auto g31 = g2(gen, {3, 1}, taus, cfg.backend).values;
    const auto g32 = g2(gen, {3, 2}, taus, cfg.backend).values;
    const auto g21 = g2(gen, {2, 1}, taus, cfg.backend).values;
    Csv csv(cfg, "tau,g31,g32,g21");
    for (std::size_t k = 0; k < taus.size(); ++k) csv.row({taus[k], g31[k], g32[k], g21[k]});
    write_file(dir / "fig2.csv", csv.str());
  }
  {
    const auto grid = linspace(4.0, 20.0, 9);
    Csv csv(cfg, "field,sweep_name,tau_d");
    add_scan_rows(csv, scan_tau_d(rates.with_drives(4.0, 4.0, 4.0), SweptField::omega_rf, grid));
    add_scan_rows(csv, scan_tau_d(rates.with_drives(4.0, 4.0, 4.0), SweptField::omega3, grid));
    add_scan_rows(csv, scan_tau_d(rates.with_drives(4.0, 12.0, 4.0), SweptField::omega1, grid));
    write_file(dir / "fig3.csv", csv.str());
  }
  {
    Csv csv(cfg, "omega_rf,tau,g11,g33,g31,R");
    for (double orf : {4.0, 10.0, 20.0}) {
      const AffineGenerator gen = build_generator(rates.with_drives(4.0, orf, 4.0));
      const CorrelationSeries g11 = g2(gen, {1, 1}, taus, cfg.backend);
      const CorrelationSeries g33 = g2(gen, {3, 3}, taus, cfg.backend);
      const CorrelationSeries g31 = g2(gen, {3, 1}, taus, cfg.backend);
      const CSRatioResult r = cs_ratio(g31, g11, g33, cfg.cs_definition);
      for (std::size_t k = 0; k < taus.size(); ++k)
        csv.row({orf, taus[k], g11.values[k], g33.values[k], g31.values[k], r.R[k]});
    }
    write_file(dir / "fig4.csv", csv.str());
  }
  out << "wrote " << (dir / "fig2.csv").string() << ", " << (dir / "fig3.csv").string() << ", "
      << (dir / "fig4.csv").string() << "\n";
  return 0;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  ValidationOptions o;
  o.gammas = cfg.preset;
  const ValidationReport r = run_validation(o);
  if (!cfg.path.empty()) write_file(cfg.path, r.to_csv(cfg.precision));
  out << r.to_text();
  return r.passed() ? 0 : 1;
}

}  // namespace

int run(const std::string& subcommand, const RunConfig& cfg, const CliFlags& flags, std::ostream& out,
        std::ostream& err) {
  ModePair pair;
  Regime regime = Regime::StrongRf;
  try {
    if (subcommand == "g2") {
      pair = ModePair::parse(flags.pair);
      pair.validate();
    }
    if (subcommand == "evolve" && (flags.init < 1 || flags.init > 4))
      throw InvalidLevel("--init must be 1..4, got " + std::to_string(flags.init));
    if (subcommand == "taud-scan") {
      swept_field_from_string(flags.sweep);
      if (flags.points < 2) throw InvalidArgument("--points must be >= 2");
      if (!(flags.from > 0.0) || !(flags.to > flags.from)) throw InvalidArgument("--from/--to must satisfy 0 < from < to");
    }
    if (subcommand == "roots") regime = regime_from_string(flags.regime);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (subcommand == "steady") return cmd_steady(cfg, out);
    if (subcommand == "evolve") return cmd_evolve(cfg, flags.init, out);
    if (subcommand == "g2") return cmd_g2(cfg, pair, out);
    if (subcommand == "cs") return cmd_cs(cfg, out);
    if (subcommand == "taud-scan") return cmd_scan(cfg, flags, out, err);
    if (subcommand == "roots") return cmd_roots(cfg, regime, out);
    if (subcommand == "figures") return cmd_figures(cfg, out);
    if (subcommand == "validate") return cmd_validate(cfg, out);
    err << "error: unknown subcommand '" << subcommand << "'\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cascade
