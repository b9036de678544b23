#ifndef AFPG_DRIVER_HPP
#define AFPG_DRIVER_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "afpg/config.hpp"
#include "afpg/rational.hpp"

namespace afpg {

/// A stage went non-finite; `step` is the 1-based index of the failing step.
class StepFailure : public NumericalError {
 public:
  StepFailure(int step, const std::string& what)
      : NumericalError("step " + std::to_string(step) + ": " + what), step(step) {}
  int step;
};

struct MassSample {
  double t = 0.0;
  std::vector<double> mass;  // one entry per component
};

struct RunResult {
  int steps = 0;
  double t_final = 0.0;
  Eigen::VectorXd data;  // final state in the State1D / State2D layout
  std::vector<MassSample> mass_log;
  std::optional<ErrorNorms> errors;  // set when an exact solution is available at t_final
};

/// Observer for intermediate states, called after step `step` (0 = initial).
using SnapshotFn = std::function<void(int step, double t, const Eigen::VectorXd& data)>;

/// Projects the initial data, integrates to config.t_end and evaluates errors.
/// Constant-speed models take uniform steps that land on t_end; Burgers picks
/// dt from the current point values each step. Throws StepFailure.
RunResult simulate(const RunConfig& config, const SnapshotFn& snapshot = {});

/// simulate() plus output files in config.output_dir (created if needed):
/// final.csv, mass.csv, summary.txt and snap_<step>.csv every
/// config.snapshot_every steps. Returns the result for further inspection.
RunResult run(const RunConfig& config);

/// Whether an exact reference exists at time t (Burgers: before wave breaking).
bool has_exact_solution(const RunConfig& config, double t);

/// First time a characteristic crossing occurs for Burgers initial data.
double burgers_breaking_time(const RunConfig& config);

struct ConvergenceRow {
  int n = 0;
  ErrorNorms errors;
  std::optional<ErrorNorms> eoc;  // empty on the coarsest grid
};

/// One run per grid size (nx = ny = N in 2D). EOC = log(e_prev / e) / log(N / N_prev).
/// Throws ConfigError for fewer than two grids or when no exact solution exists.
std::vector<ConvergenceRow> converge(const RunConfig& config, const std::vector<int>& grids);

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

/// Coefficient tables with exact entries rendered "p/q". 1D header is
/// function,c0..cK (coefficient of xi^k); rows are basis_left, basis_moment_k,
/// basis_right, weight_moment_k, test_plus, test_minus.
void dump_element_csv(std::ostream& os, int K, const Rational& alpha);

/// 2D header is function,c00..c22 (coefficient of xi^k eta^l as ckl). Rows are
/// the nine basis functions, the average test, both edge tests and the four
/// node pieces. `alphas` holds 3 (edge), 11 (node) or 14 (both) values; a
/// missing group uses the sign-adaptive defaults for positive speeds.
void dump_element_2d_csv(std::ostream& os, const std::vector<Rational>& alphas);

}  // namespace afpg

#endif  // AFPG_DRIVER_HPP
