#ifndef AFPG_MODELS_HPP
#define AFPG_MODELS_HPP

#include <string>

#include <Eigen/Core>

#include "afpg/grid.hpp"

namespace afpg {

enum class ModelKind { Advection, Burgers, LinearSystem };

/// J = J_plus + J_minus with J_plus >= 0 >= J_minus in the eigenvalues.
struct JacobianSplit {
  Eigen::MatrixXd plus;
  Eigen::MatrixXd minus;
};

/// Flux f: R^m -> R^m of a 1D conservation law q_t + f(q)_x = 0.
struct FluxModel1D {
  ModelKind kind = ModelKind::Advection;
  int m = 1;
  double a = 0.0;               // advection speed
  Eigen::MatrixXd A;            // linear systems: f(q) = A q
  Eigen::VectorXd eigenvalues;  // linear systems: A = R diag(lambda) R^-1
  Eigen::MatrixXd R;
  Eigen::MatrixXd R_inv;
  JacobianSplit constant_split;  // advection and linear systems

  bool linear() const { return kind != ModelKind::Burgers; }
  bool scalar() const { return m == 1; }

  /// Scalar flux and its derivative (m == 1 only).
  double flux(double q) const { return kind == ModelKind::Burgers ? 0.5 * q * q : a * q; }
  double speed(double q) const { return kind == ModelKind::Burgers ? q : a; }

  Eigen::VectorXd flux(const Eigen::VectorXd& q) const;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& q) const;
  JacobianSplit split(const Eigen::VectorXd& q) const;
  /// Spectral radius of the Jacobian at q.
  double max_speed(const Eigen::VectorXd& q) const;
  std::string name() const;
};

FluxModel1D advection1d(double a);
FluxModel1D burgers1d();
/// Requires a real, non-defective eigendecomposition of A; throws
/// std::invalid_argument otherwise.
FluxModel1D linear_system1d(const Eigen::MatrixXd& A);

/// Scalar 2D advection q_t + (ax q)_x + (ay q)_y = 0.
struct FluxModel2D {
  double ax = 0.0;
  double ay = 0.0;

  double flux_x(double q) const { return ax * q; }
  double flux_y(double q) const { return ay * q; }
  double max_speed() const;
};

FluxModel2D advection2d(double ax, double ay);

/// Exact periodic solution at time t from initial data on [x_min, x_min + length).
/// Burgers uses characteristic tracing u = u0(x - u t) and is only valid
/// before shocks form.
Profile1D exact_solution(const FluxModel1D& model, const Profile1D& initial, double x_min, double length, double t);
Profile2D exact_solution(const FluxModel2D& model, const Profile2D& initial, const Grid2D& grid, double t);

}  // namespace afpg

#endif  // AFPG_MODELS_HPP
