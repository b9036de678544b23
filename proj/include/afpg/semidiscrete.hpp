#ifndef AFPG_SEMIDISCRETE_HPP
#define AFPG_SEMIDISCRETE_HPP

#include <array>
#include <vector>

#include <Eigen/Core>

#include "afpg/element1d.hpp"
#include "afpg/element2d.hpp"
#include "afpg/grid.hpp"
#include "afpg/models.hpp"

namespace afpg {

enum class UpwindMode { Fixed, SignAdaptive };

/// Point update for nonlinear scalar models: Jacobian splitting with the
/// one-sided derivatives, or exact integration of (psi, f(q_h)_x) (Burgers, K=2).
enum class PointUpdate { JacobianSplit, ExactIntegration };

/// Upwind parameters. In sign-adaptive mode alpha = sgn f'(q) at each point
/// (sgn 0 = 0), and in 2D alpha_3 = sgn(ax) or sgn(ay) on edges and
/// beta = sgn/2 at nodes. Fixed mode uses `alpha` (1D and edge alpha_3) and
/// `beta_x`, `beta_y`. The remaining stabilization parameters apply in both
/// modes and default to 0.
struct UpwindConfig {
  UpwindMode mode = UpwindMode::SignAdaptive;
  double alpha = 0.0;
  double beta_x = 0.0;
  double beta_y = 0.0;
  double edge_alpha1 = 0.0;
  double edge_alpha2 = 0.0;
  std::array<double, 8> node_extra{};  // node alpha_1..alpha_8
  PointUpdate point_update = PointUpdate::JacobianSplit;

  /// Throws std::invalid_argument unless |alpha| <= 1 and |beta| <= 1/2.
  void validate() const;
};

/// sgn with sgn(0) = 0.
double sign0(double v);

/// alpha at a 1D point with value q (scalar models).
double choose_alpha(const FluxModel1D& model, double q, const UpwindConfig& upwind);

/// Edge alpha_3 and node beta per direction for 2D advection.
struct Upwind2D {
  double alpha_x = 0.0;  // vertical edges
  double alpha_y = 0.0;  // horizontal edges
  double beta_x = 0.0;
  double beta_y = 0.0;
};
Upwind2D choose_alpha(const FluxModel2D& model, const UpwindConfig& upwind);

/// Element data and precomputed tables for the 1D operator of degree K.
struct Discretization1D {
  int K = 2;
  Element1D<double> element;
  DerivStencil1D<double> up;    // alpha = +1
  DerivStencil1D<double> down;  // alpha = -1
  Eigen::MatrixXd basis_at_nodes;   // nq x (K+1)
  Eigen::MatrixXd weight_slopes;    // (K-1) x nq: w_q A_k'(xi_q)
  Eigen::VectorXd weight_right;     // A_k(1/2)
  Eigen::VectorXd weight_left;      // A_k(-1/2)
};

Discretization1D make_discretization_1d(int K);

/// dQ/dt for a 1D state; same layout as state.data. Throws
/// std::invalid_argument on shape mismatch and std::domain_error on a
/// non-finite state.
Eigen::VectorXd rhs_1d(const State1D& state, const Grid1D& grid, const Discretization1D& disc,
                       const FluxModel1D& model, const UpwindConfig& upwind);

/// Point components of dQ/dt for Burgers by exact integration (K = 2).
Eigen::VectorXd rhs_point_burgers(const State1D& state, const Grid1D& grid, const UpwindConfig& upwind);

/// Flat stencil entry relative to an anchor cell, ready for assembly.
struct StencilEntry {
  DofRef dof;
  double w = 0.0;
};

/// Test functions and stencils of the 2D operator for one advection model
/// and upwind configuration (both are constant over the grid).
struct Discretization2D {
  Element2D<double> element;
  Upwind2D upwind;
  EdgeTest2D<double> edge_x_test;  // vertical edges
  EdgeTest2D<double> edge_y_test;  // horizontal edges
  NodeTest2D<double> node_test;
  std::vector<StencilEntry> edge_x_normal, edge_x_tangential;
  std::vector<StencilEntry> edge_y_normal, edge_y_tangential;
  std::vector<StencilEntry> node_x, node_y;
};

Discretization2D make_discretization_2d(const FluxModel2D& model, const UpwindConfig& upwind);

Eigen::VectorXd rhs_2d(const State2D& state, const Grid2D& grid, const Discretization2D& disc,
                       const FluxModel2D& model);

}  // namespace afpg

#endif  // AFPG_SEMIDISCRETE_HPP
