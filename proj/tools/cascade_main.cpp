#include "cascade/cli.hpp"
#include "cascade/errors.hpp"

#include <CLI11.hpp>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Four-level cascade photon correlations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string output;
  cascade::CliFlags flags;
  app.add_option("-c,--config", config_path, "Configuration file");
  app.add_option("-o,--output", output, "Override [output] path");

  app.add_subcommand("steady", "Steady-state density matrix");
  app.add_subcommand("evolve", "Populations and coherences over the tau grid")
      ->add_option("--init", flags.init, "Initial level 1..4");
  app.add_subcommand("g2", "Normalized two-photon correlation")->add_option("--pair", flags.pair, "11, 33, 31, 21 or 32");
  app.add_subcommand("cs", "Cauchy-Schwarz ratio and its maximum");
  auto* scan = app.add_subcommand("taud-scan", "Photon delay time over a field sweep");
  scan->add_option("--sweep", flags.sweep, "omega1, omega_rf (omega2) or omega3");
  scan->add_option("--from", flags.from, "First field value");
  scan->add_option("--to", flags.to, "Last field value");
  scan->add_option("--points", flags.points, "Number of grid points");
  app.add_subcommand("roots", "Denominator roots, numeric and closed form")
      ->add_option("--regime", flags.regime, "strong or weak");
  app.add_subcommand("figures", "Data behind Figs. 2-4; output path is a directory");
  app.add_subcommand("validate", "Run the validation suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cascade::RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = cascade::load_config(config_path);
  } catch (const cascade::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!output.empty()) cfg.path = output;

  return cascade::run(app.get_subcommands().front()->get_name(), cfg, flags, std::cout, std::cerr);
}
