#ifndef AFPG_CONFIG_HPP
#define AFPG_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "afpg/grid.hpp"
#include "afpg/semidiscrete.hpp"
#include "afpg/timestep.hpp"

namespace afpg {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Initial data. Coordinates are normalized to s in [0, 1) over the domain:
///   sine      offset + amplitude sin(2 pi k s)            (2D: product in x and y)
///   gaussian  offset + amplitude exp(-(d / width)^2), d = periodic distance to center
///   linear    offset + slope x                          (2D: slope (x + y))
///   constant  value
/// Systems scale the profile by `weights[c]` (default 1 for every component).
struct InitialCondition {
  std::string name = "sine";
  double amplitude = 1.0;
  double offset = 0.0;
  double wavenumber = 1.0;
  double center = 0.5;
  double width = 0.1;
  double slope = 1.0;
  double value = 1.0;
  std::vector<double> weights;
};

/// Everything a run needs. Serialized as flat `section.key=value` lines.
struct RunConfig {
  int dimension = 1;
  int K = 2;
  int n = 40;
  int nx = 20;
  int ny = 20;
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;

  std::string model = "advection";  // advection | burgers | linear_system
  double a = 1.0;
  double ax = 1.0;
  double ay = 1.0;
  Eigen::MatrixXd matrix;  // linear_system, rows separated by ';'

  InitialCondition ic;
  UpwindConfig upwind;

  Scheme scheme = Scheme::SSPRK3;
  double cfl = 0.2;
  double dt = 0.0;  // > 0: fixed step, and the fallback when no wave moves
  double t_end = 1.0;

  std::string output_dir;
  int snapshot_every = 0;

  friend bool operator==(const RunConfig& a, const RunConfig& b);
};

/// Parses `key=value` lines; '#' starts a comment. Unknown keys, malformed
/// values and out-of-range settings raise ConfigError.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

/// Throws ConfigError if names are unknown or ranges are violated.
void validate(const RunConfig& config);

/// Normalized form: every key, sorted, one per line.
std::string serialize(const RunConfig& config);

int system_size(const RunConfig& config);
FluxModel1D make_model_1d(const RunConfig& config);
FluxModel2D make_model_2d(const RunConfig& config);
Grid1D make_grid_1d(const RunConfig& config);
Grid2D make_grid_2d(const RunConfig& config);
Profile1D make_initial_1d(const RunConfig& config);
Profile2D make_initial_2d(const RunConfig& config);

std::string to_string(Scheme scheme);

}  // namespace afpg

#endif  // AFPG_CONFIG_HPP
