// afpg: run simulations, convergence studies and element dumps.
#include <CLI11.hpp>

#include <iostream>

#include "afpg/driver.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kNumericalError = 3;

int run_cmd(const std::string& path) {
  const afpg::RunConfig config = afpg::load_config(path);
  const afpg::RunResult r = afpg::run(config);
  std::cout << "steps " << r.steps << ", t = " << afpg::format_double(r.t_final) << '\n';
  if (r.errors)
    std::cout << "L1 " << afpg::format_double(r.errors->l1) << "  L2 " << afpg::format_double(r.errors->l2)
              << "  Linf " << afpg::format_double(r.errors->linf) << '\n';
  return 0;
}

int converge_cmd(const std::string& path, const std::vector<int>& grids, const std::string& out) {
  const afpg::RunConfig config = afpg::load_config(path);
  const auto rows = afpg::converge(config, grids);
  afpg::write_convergence_csv(std::cout, rows);
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw afpg::ConfigError("cannot write '" + out + "'");
    afpg::write_convergence_csv(os, rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Active Flux Petrov-Galerkin solver"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run a simulation from a config file");
  run->add_option("config", config_path, "Config file")->required();

  std::string converge_path, converge_out;
  std::vector<int> grids{20, 40, 80, 160};
  auto* conv = app.add_subcommand("converge", "Error table and observed orders over several grids");
  conv->add_option("config", converge_path, "Config file")->required();
  conv->add_option("--grids", grids, "Grid sizes")->delimiter(',');
  conv->add_option("--out", converge_out, "Also write the table to this CSV file");

  int K = 2;
  std::string alpha = "1";
  auto* dump = app.add_subcommand("dump-element", "1D basis and test coefficients as exact rationals");
  dump->add_option("--k", K, "Element degree")->check(CLI::Range(2, 12));
  dump->add_option("--alpha", alpha, "Upwind parameter, decimal or p/q");

  std::vector<std::string> alphas;
  auto* dump2 = app.add_subcommand("dump-element-2d", "2D basis and test coefficients as exact rationals");
  dump2->add_option("--alphas", alphas, "3 edge, 11 node or 14 (edge then node) parameters")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*run) return run_cmd(config_path);
    if (*conv) return converge_cmd(converge_path, grids, converge_out);
    if (*dump) {
      const afpg::Rational a = afpg::parse_rational(alpha);
      if (afpg::abs(a) > afpg::Rational(1)) throw afpg::ConfigError("--alpha must satisfy |alpha| <= 1");
      afpg::dump_element_csv(std::cout, K, a);
      return 0;
    }
    std::vector<afpg::Rational> values;
    for (const auto& s : alphas) values.push_back(afpg::parse_rational(s));
    afpg::dump_element_2d_csv(std::cout, values);
    return 0;
  } catch (const afpg::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
}
