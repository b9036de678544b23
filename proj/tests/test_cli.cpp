#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "afpg/driver.hpp"

using namespace afpg;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("afpg_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int cli(const std::string& args) {
  const std::string cmd = std::string(AFPG_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string cli_output(const std::string& args) {
  const fs::path out = scratch("cli_out") / "stdout.txt";
  const std::string cmd = std::string(AFPG_CLI_PATH) + " " + args + " > " + out.string();
  REQUIRE(std::system(cmd.c_str()) == 0);
  return slurp(out);
}

const char* kAdvection = R"(# comment line
dimension=1
element.k=2
grid.n=20
model.name=advection
model.a=1
ic.name=sine   # trailing comment
time.cfl=0.2
time.t_end=0.5
)";

}  // namespace

TEST_CASE("config parsing and normalized round trip") {
  const RunConfig c = parse_config(kAdvection);
  CHECK(c.n == 20);
  CHECK(c.ic.name == "sine");
  CHECK(c.t_end == 0.5);
  const std::string norm = serialize(c);
  CHECK(serialize(parse_config(norm)) == norm);
  CHECK(parse_config(norm) == c);

  // Keys come out sorted, one per line, every key present.
  std::istringstream lines(norm);
  std::string line, prev;
  int count = 0;
  while (std::getline(lines, line)) {
    const std::string key = line.substr(0, line.find('='));
    CHECK(prev < key);
    prev = key;
    ++count;
  }
  CHECK(count == 37);

  const RunConfig sys = parse_config("model.name=linear_system\nmodel.matrix=0,1;1,0\nic.weights=1,0.5\n");
  CHECK(sys.matrix.rows() == 2);
  CHECK(sys.matrix(0, 1) == 1.0);
  CHECK(system_size(sys) == 2);
  CHECK(parse_config(serialize(sys)) == sys);

  const RunConfig up = parse_config(
      "upwind.mode=fixed\nupwind.alpha=0.37\nupwind.node_extra=1,2,3,4,5,6,7,8\ntime.scheme=rk4\n");
  CHECK(up.upwind.mode == UpwindMode::Fixed);
  CHECK(up.upwind.alpha == 0.37);
  CHECK(up.upwind.node_extra[7] == 8.0);
  CHECK(up.scheme == Scheme::RK4);
  CHECK(parse_config(serialize(up)) == up);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config("grid.nn=4\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("grid.n\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("grid.n=abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("grid.n=4.5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("grid.n=2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("grid.n=4\ngrid.n=5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("upwind.mode=fixed\nupwind.alpha=1.01\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("upwind.beta_x=-0.6\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("model.name=euler\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("ic.name=square\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("time.scheme=rk2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("model.name=linear_system\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("model.name=linear_system\nmodel.matrix=1,2;3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("upwind.node_extra=1,2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("upwind.point_update=exact\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("dimension=2\nelement.k=3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("dimension=2\nmodel.name=burgers\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("grid.x_min=1\ngrid.x_max=0\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/afpg.cfg"), ConfigError);
  RunConfig rot = parse_config("model.name=linear_system\nmodel.matrix=0,1;-1,0\n");
  CHECK_THROWS_AS(make_model_1d(rot), ConfigError);
}

TEST_CASE("t_end = 0 returns the projected initial data") {
  RunConfig c = parse_config(kAdvection);
  c.t_end = 0;
  const RunResult r = simulate(c);
  CHECK(r.steps == 0);
  const auto disc = make_discretization_1d(2);
  const State1D s = project_initial(make_grid_1d(c), disc.element, 1, make_initial_1d(c));
  CHECK(r.data == s.data);
}

TEST_CASE("constant initial data stays exact") {
  for (const char* extra : {"", "dimension=2\ngrid.nx=6\ngrid.ny=5\n", "model.name=burgers\nupwind.point_update=exact\n",
                            "model.name=linear_system\nmodel.matrix=0,2;2,0\nic.weights=1,-3\n", "element.k=4\ntime.cfl=0.05\n"}) {
    RunConfig c = parse_config(std::string("ic.name=constant\nic.value=1.25\ngrid.n=8\ntime.t_end=0.3\n") + extra);
    const RunResult r = simulate(c);
    REQUIRE(r.errors);
    CHECK(r.errors->l1 <= 1e-13);
    CHECK(r.errors->l2 <= 1e-13);
    CHECK(r.errors->linf <= 1e-13);
  }
}

TEST_CASE("run writes final state, mass log and summary") {
  const fs::path dir = scratch("run");
  RunConfig c = parse_config(kAdvection);
  c.output_dir = dir.string();
  c.snapshot_every = 10;
  const RunResult r = run(c);
  CHECK(r.t_final == 0.5);
  CHECK(fs::exists(dir / "final.csv"));
  CHECK(fs::exists(dir / "snap_000000.csv"));
  CHECK(fs::exists(dir / "snap_000010.csv"));
  const std::string mass = slurp(dir / "mass.csv");
  CHECK(mass.rfind("t,total_mass\n", 0) == 0);
  CHECK(std::count(mass.begin(), mass.end(), '\n') == r.steps + 2);
  const std::string summary = slurp(dir / "summary.txt");
  CHECK(summary.find(serialize(c)) == 0);
  CHECK(summary.find("error.linf=") != std::string::npos);
  CHECK(summary.find("result.steps=" + std::to_string(r.steps)) != std::string::npos);
}

TEST_CASE("identical configs give byte-identical outputs") {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  for (int dim : {1, 2}) {
    RunConfig c = parse_config(kAdvection);
    c.dimension = dim;
    c.nx = c.ny = 8;
    c.output_dir = a.string();
    run(c);
    c.output_dir = b.string();
    run(c);
    CHECK(slurp(a / "final.csv") == slurp(b / "final.csv"));
    CHECK(slurp(a / "mass.csv") == slurp(b / "mass.csv"));
  }
}

TEST_CASE("blow-up reports the failing step") {
  RunConfig c = parse_config("time.scheme=euler\ntime.dt=1000\ntime.t_end=1e6\ngrid.n=10\n");
  try {
    simulate(c);
    FAIL("expected a numerical failure");
  } catch (const StepFailure& e) {
    CHECK(e.step > 1);
    CHECK(std::string(e.what()).find("step " + std::to_string(e.step)) == 0);
  }
}

TEST_CASE("convergence table") {
  RunConfig c = parse_config(kAdvection);
  const auto rows = converge(c, {10, 20, 40});
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].eoc);
  REQUIRE(rows[2].eoc);
  CHECK(rows[2].eoc->l1 == doctest::Approx(std::log2(rows[1].errors.l1 / rows[2].errors.l1)));
  CHECK(rows[2].eoc->l1 > 2.5);
  std::ostringstream os;
  write_convergence_csv(os, rows);
  CHECK(os.str().rfind("N,L1,L2,Linf,EOC_L1,EOC_L2,EOC_Linf\n10,", 0) == 0);
  CHECK_THROWS_AS(converge(c, {20}), ConfigError);

  // Burgers past wave breaking has no reference solution.
  RunConfig b = parse_config("model.name=burgers\nic.amplitude=0.5\nic.offset=1\ntime.t_end=1\n");
  CHECK(burgers_breaking_time(b) == doctest::Approx(1 / M_PI).epsilon(1e-6));
  CHECK_FALSE(has_exact_solution(b, 1.0));
  CHECK(has_exact_solution(b, 0.2));
  CHECK_THROWS_AS(converge(b, {10, 20}), ConfigError);
}

TEST_CASE("element dumps match the golden files") {
  const fs::path golden = AFPG_GOLDEN_DIR;
  std::ostringstream k2, k2a0, d2;
  dump_element_csv(k2, 2, Rational(1));
  dump_element_csv(k2a0, 2, Rational(0));
  dump_element_2d_csv(d2, {});
  CHECK(k2.str() == slurp(golden / "element_k2.csv"));
  CHECK(k2a0.str() == slurp(golden / "element_k2_alpha0.csv"));
  CHECK(d2.str() == slurp(golden / "element_2d.csv"));

  CHECK(k2.str().find("basis_moment_0,3/2,0,-6\n") != std::string::npos);
  CHECK(k2a0.str().find("test_plus,-3/4,3,15\n") != std::string::npos);
  CHECK(d2.str().find("basis_00,9/4,0,-9,0,0,0,-9,0,36\n") != std::string::npos);

  std::ostringstream d2_explicit;
  dump_element_2d_csv(d2_explicit, {Rational(0), Rational(0), Rational(1), Rational(0), Rational(0), Rational(0),
                                    Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1),
                                    Rational(1, 4), Rational(1, 4)});
  CHECK(d2_explicit.str() == d2.str());
  std::ostringstream bad;
  CHECK_THROWS_AS(dump_element_2d_csv(bad, {Rational(1), Rational(2)}), std::invalid_argument);
  CHECK_THROWS_AS(dump_element_csv(bad, 1, Rational(0)), std::invalid_argument);
}

TEST_CASE("command line exit codes") {
  const fs::path dir = scratch("cli");
  {
    std::ofstream(dir / "ok.cfg") << kAdvection << "output.dir=" << (dir / "out").string() << '\n';
    std::ofstream(dir / "bad.cfg") << "grid.n=2\n";
    std::ofstream(dir / "blowup.cfg") << "time.scheme=euler\ntime.dt=1000\ntime.t_end=1e6\ngrid.n=10\n"
                                      << "output.dir=" << (dir / "out2").string() << '\n';
  }
  CHECK(cli("run " + (dir / "ok.cfg").string()) == 0);
  CHECK(fs::exists(dir / "out" / "summary.txt"));
  CHECK(cli("run " + (dir / "bad.cfg").string()) == 2);
  CHECK(cli("run " + (dir / "missing.cfg").string()) == 2);
  CHECK(cli("run " + (dir / "blowup.cfg").string()) == 3);
  CHECK(cli("frobnicate") == 2);
  CHECK(cli("converge " + (dir / "ok.cfg").string() + " --grids 20") == 2);
  CHECK(cli("dump-element --k 1") == 2);
  CHECK(cli("dump-element --k 2 --alpha 3/2") == 2);
  CHECK(cli("dump-element-2d --alphas 1,2") == 2);
  CHECK(cli_output("dump-element --k 2 --alpha 0") == slurp(fs::path(AFPG_GOLDEN_DIR) / "element_k2_alpha0.csv"));
  CHECK(cli_output("dump-element-2d") == slurp(fs::path(AFPG_GOLDEN_DIR) / "element_2d.csv"));
  const std::string table = cli_output("converge " + (dir / "ok.cfg").string() + " --grids 10,20");
  CHECK(table.rfind("N,L1,L2,Linf,EOC_L1,EOC_L2,EOC_Linf\n", 0) == 0);
}

TEST_CASE("K = 3 converges at fourth order once the time error is small") {
  // With SSPRK3 at cfl 0.2 the third-order time error dominates for K = 3.
  const RunConfig c = parse_config("element.k=3\nic.name=sine\ntime.scheme=rk4\ntime.cfl=0.02\ntime.t_end=1\n");
  const auto rows = converge(c, {10, 20, 40});
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].eoc->l1 >= 3.8);
}
