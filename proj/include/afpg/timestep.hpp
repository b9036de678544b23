#ifndef AFPG_TIMESTEP_HPP
#define AFPG_TIMESTEP_HPP

#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "afpg/grid.hpp"
#include "afpg/models.hpp"

namespace afpg {

enum class Scheme { ForwardEuler, SSPRK3, RK4 };

/// Raised when a stage produces non-finite values (typically a CFL violation).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using RhsFunction = std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)>;

/// One explicit step of dq/dt = L(q, t). SSPRK3 is the Shu-Osher convex
/// combination of three forward Euler stages. Throws std::invalid_argument
/// for dt <= 0 and NumericalError on non-finite stages.
Eigen::VectorXd step(Scheme scheme, const Eigen::VectorXd& q, double t, double dt, const RhsFunction& L);

/// dt = cfl * dx / max spectral radius over the point DOFs. Falls back to
/// fallback_dt when no wave moves; throws std::invalid_argument if that is
/// not positive either.
double compute_dt(const State1D& state, const Grid1D& grid, const FluxModel1D& model, double cfl,
                  double fallback_dt = 0.0);
double compute_dt(const Grid2D& grid, const FluxModel2D& model, double cfl, double fallback_dt = 0.0);

}  // namespace afpg

#endif  // AFPG_TIMESTEP_HPP
