#include <stdexcept>

#include "afpg/parallel.hpp"
#include "afpg/semidiscrete.hpp"

namespace afpg {

Upwind2D choose_alpha(const FluxModel2D& model, const UpwindConfig& upwind) {
  if (upwind.mode == UpwindMode::Fixed) return {upwind.alpha, upwind.alpha, upwind.beta_x, upwind.beta_y};
  return {sign0(model.ax), sign0(model.ay), 0.5 * sign0(model.ax), 0.5 * sign0(model.ay)};
}

namespace {

std::vector<StencilEntry> flatten(const DerivStencil2D<double>& s) {
  std::vector<StencilEntry> out;
  for (const auto& f : s.flat) out.push_back({f.dof, f.w});
  return out;
}

double apply(const std::vector<StencilEntry>& st, const State2D& s, int i, int j) {
  double acc = 0.0;
  for (const auto& e : st) acc += e.w * s.at(i, j, e.dof);
  return acc;
}

}  // namespace

Discretization2D make_discretization_2d(const FluxModel2D& model, const UpwindConfig& upwind) {
  upwind.validate();
  Discretization2D d;
  d.element = build_element_2d().cast<double>();
  d.upwind = choose_alpha(model, upwind);
  d.edge_x_test = build_edge_test<double>({upwind.edge_alpha1, upwind.edge_alpha2, d.upwind.alpha_x},
                                          EdgeOrientation::Vertical);
  d.edge_y_test = build_edge_test<double>({upwind.edge_alpha1, upwind.edge_alpha2, d.upwind.alpha_y},
                                          EdgeOrientation::Horizontal);
  d.node_test = build_node_test<double>(node_alphas(d.upwind.beta_x, d.upwind.beta_y, upwind.node_extra));

  const auto ex = edge_derivative_stencils(d.element, d.edge_x_test);
  const auto ey = edge_derivative_stencils(d.element, d.edge_y_test);
  const auto nd = node_derivative_stencils(d.element, d.node_test);
  d.edge_x_normal = flatten(ex.normal);
  d.edge_x_tangential = flatten(ex.tangential);
  d.edge_y_normal = flatten(ey.normal);
  d.edge_y_tangential = flatten(ey.tangential);
  d.node_x = flatten(nd.x);
  d.node_y = flatten(nd.y);
  return d;
}

Eigen::VectorXd rhs_2d(const State2D& s, const Grid2D& grid, const Discretization2D& disc,
                       const FluxModel2D& model) {
  if (s.nx != grid.nx || s.ny != grid.ny || s.data.size() != 4 * static_cast<Eigen::Index>(s.nx) * s.ny)
    throw std::invalid_argument("rhs_2d: state shape does not match grid");
  if (!s.data.allFinite()) throw std::domain_error("rhs_2d: non-finite state");

  const double dx = grid.dx(), dy = grid.dy();
  const double ax = model.ax, ay = model.ay;
  Eigen::VectorXd out(s.data.size());

  parallel_for(s.nx, [&](int begin, int end) {
    for (int i = begin; i < end; ++i)
      for (int j = 0; j < s.ny; ++j) {
        // Edge traces are quadratic: Simpson on (node, midpoint, node) is exact.
        const auto flux_x = [&](int ii) {
          return model.flux_x((s.at(DofClass::Node, ii, j - 1) + 4 * s.at(DofClass::EdgeX, ii, j) +
                               s.at(DofClass::Node, ii, j)) / 6.0);
        };
        const auto flux_y = [&](int jj) {
          return model.flux_y((s.at(DofClass::Node, i - 1, jj) + 4 * s.at(DofClass::EdgeY, i, jj) +
                               s.at(DofClass::Node, i, jj)) / 6.0);
        };
        out(s.index(DofClass::Average, i, j)) = -(flux_x(i) - flux_x(i - 1)) / dx - (flux_y(j) - flux_y(j - 1)) / dy;

        out(s.index(DofClass::EdgeX, i, j)) =
            -ax * apply(disc.edge_x_normal, s, i, j) / dx - ay * apply(disc.edge_x_tangential, s, i, j) / dy;
        out(s.index(DofClass::EdgeY, i, j)) =
            -ay * apply(disc.edge_y_normal, s, i, j) / dy - ax * apply(disc.edge_y_tangential, s, i, j) / dx;
        out(s.index(DofClass::Node, i, j)) =
            -ax * apply(disc.node_x, s, i, j) / dx - ay * apply(disc.node_y, s, i, j) / dy;
      }
  }, 16);
  return out;
}

}  // namespace afpg
