#include "afpg/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "afpg/quadrature.hpp"

namespace afpg {

namespace {

// Enough nodes that smooth data is integrated to round-off even on coarse grids.
constexpr int kProjectionNodes = 10;

double checked(double v) {
  if (!std::isfinite(v)) throw std::domain_error("project_initial: non-finite sample");
  return v;
}

}  // namespace

Grid1D make_grid_1d(int n, double x_min, double x_max) {
  if (n < 3) throw std::invalid_argument("grid: need at least 3 cells, got " + std::to_string(n));
  if (!(x_max > x_min)) throw std::invalid_argument("grid: x_max must exceed x_min");
  return {n, x_min, x_max};
}

Grid2D make_grid_2d(int nx, int ny, double x_min, double x_max, double y_min, double y_max) {
  if (nx < 3 || ny < 3) throw std::invalid_argument("grid: need at least 3 cells per direction");
  if (!(x_max > x_min) || !(y_max > y_min)) throw std::invalid_argument("grid: empty domain");
  return {nx, ny, x_min, x_max, y_min, y_max};
}

State1D make_state_1d(const Grid1D& grid, int K, int m) {
  if (K < 2) throw std::invalid_argument("state: K must be >= 2");
  if (m < 1) throw std::invalid_argument("state: need at least one component");
  State1D s;
  s.n = grid.n;
  s.K = K;
  s.m = m;
  s.data = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(grid.n) * m * K);
  return s;
}

Eigen::VectorXd State1D::cell_dofs(int i, int c) const {
  Eigen::VectorXd d(K + 1);
  d(0) = point(i - 1, c);
  for (int k = 0; k <= K - 2; ++k) d(1 + k) = moment(i, k, c);
  d(K) = point(i, c);
  return d;
}

State2D make_state_2d(const Grid2D& grid) {
  State2D s;
  s.nx = grid.nx;
  s.ny = grid.ny;
  s.data = Eigen::VectorXd::Zero(4 * static_cast<Eigen::Index>(grid.nx) * grid.ny);
  return s;
}

std::array<double, 9> State2D::cell_dofs(int i, int j) const {
  std::array<double, 9> d{};
  for (int k = 0; k < 9; ++k) d[k] = at(i, j, global_dof(0, 0, LocalDof::from_index(k)));
  return d;
}

State1D project_initial(const Grid1D& grid, const Element1D<double>& element, int m, const Profile1D& f) {
  State1D s = make_state_1d(grid, element.K, m);
  const auto sample = [&](double x) {
    Eigen::VectorXd v = f(x);
    if (v.size() != m) throw std::invalid_argument("project_initial: profile has wrong size");
    for (Eigen::Index c = 0; c < v.size(); ++c) checked(v(c));
    return v;
  };
  const auto& rule = gauss_rule(std::max(element.K + 2, kProjectionNodes));
  const double dx = grid.dx();
  for (int i = 0; i < grid.n; ++i) {
    const Eigen::VectorXd right = sample(grid.interface(i));
    for (int c = 0; c < m; ++c) s.point(i, c) = right(c);

    Eigen::MatrixXd moments = Eigen::MatrixXd::Zero(element.K - 1, m);
    for (int qn = 0; qn < rule.size(); ++qn) {
      const double xi = rule.nodes[qn];
      const Eigen::VectorXd v = sample(grid.center(i) + xi * dx);
      for (int k = 0; k <= element.K - 2; ++k)
        moments.row(k) += rule.weights[qn] * element.moment_weights[k].poly(xi) * v.transpose();
    }
    for (int k = 0; k <= element.K - 2; ++k)
      for (int c = 0; c < m; ++c) s.moment(i, k, c) = moments(k, c);
  }
  return s;
}

State1D project_initial(const Grid1D& grid, const Element1D<double>& element,
                        const std::function<double(double)>& f) {
  return project_initial(grid, element, 1, [&](double x) { return Eigen::VectorXd::Constant(1, f(x)); });
}

State2D project_initial(const Grid2D& grid, const Profile2D& f) {
  State2D s = make_state_2d(grid);
  const auto& rule = gauss_rule(kProjectionNodes);
  const double dx = grid.dx(), dy = grid.dy();
  for (int i = 0; i < grid.nx; ++i)
    for (int j = 0; j < grid.ny; ++j) {
      const double xc = grid.xc(i), yc = grid.yc(j);
      s.at(DofClass::Average, i, j) =
          checked(rule.integrate2([&](double a, double b) { return checked(f(xc + a * dx, yc + b * dy)); }));
      s.at(DofClass::EdgeX, i, j) = checked(f(xc + 0.5 * dx, yc));
      s.at(DofClass::EdgeY, i, j) = checked(f(xc, yc + 0.5 * dy));
      s.at(DofClass::Node, i, j) = checked(f(xc + 0.5 * dx, yc + 0.5 * dy));
    }
  return s;
}

double total_mass(const State1D& state, const Grid1D& grid, int c) {
  double acc = 0.0;
  for (int i = 0; i < state.n; ++i) acc += state.average(i, c);
  return acc * grid.dx();
}

double total_mass(const State2D& state, const Grid2D& grid) {
  const Eigen::Index cells = static_cast<Eigen::Index>(state.nx) * state.ny;
  return state.data.head(cells).sum() * grid.dx() * grid.dy();
}

ErrorNorms error_norms(const State1D& state, const Grid1D& grid, const Element1D<double>& element,
                       const Profile1D& exact) {
  const int K = element.K;
  const auto& rule = gauss_rule(K + 2);
  // Basis values at the quadrature nodes, then at the two endpoints.
  std::vector<double> xs = rule.nodes;
  xs.push_back(-0.5);
  xs.push_back(0.5);
  Eigen::MatrixXd B(xs.size(), K + 1);
  for (std::size_t p = 0; p < xs.size(); ++p)
    for (int s = 0; s <= K; ++s) B(p, s) = element.basis(s)(xs[p]);

  ErrorNorms e;
  const double dx = grid.dx();
  for (int i = 0; i < state.n; ++i) {
    Eigen::MatrixXd dofs(K + 1, state.m);
    for (int c = 0; c < state.m; ++c) dofs.col(c) = state.cell_dofs(i, c);
    const Eigen::MatrixXd values = B * dofs;
    for (std::size_t p = 0; p < xs.size(); ++p) {
      const Eigen::VectorXd ref = exact(grid.center(i) + xs[p] * dx);
      for (int c = 0; c < state.m; ++c) {
        const double err = std::abs(values(p, c) - ref(c));
        e.linf = std::max(e.linf, err);
        if (p < rule.nodes.size()) {
          e.l1 += rule.weights[p] * err * dx;
          e.l2 += rule.weights[p] * err * err * dx;
        }
      }
    }
  }
  e.l2 = std::sqrt(e.l2);
  return e;
}

ErrorNorms error_norms(const State2D& state, const Grid2D& grid, const Element2D<double>& element,
                       const Profile2D& exact) {
  const auto& rule = gauss_rule(4);
  struct Sample {
    double xi, eta, w;
  };
  std::vector<Sample> samples;
  for (int a = 0; a < rule.size(); ++a)
    for (int b = 0; b < rule.size(); ++b)
      samples.push_back({rule.nodes[a], rule.nodes[b], rule.weights[a] * rule.weights[b]});
  for (int k = 0; k < 9; ++k) {
    const LocalDof d = LocalDof::from_index(k);
    if (!d.is_average()) samples.push_back({d.r / 2.0, d.s / 2.0, 0.0});
  }
  Eigen::MatrixXd B(samples.size(), 9);
  for (std::size_t p = 0; p < samples.size(); ++p)
    for (int k = 0; k < 9; ++k) B(p, k) = element.basis[k](samples[p].xi, samples[p].eta);

  ErrorNorms e;
  const double dx = grid.dx(), dy = grid.dy();
  for (int i = 0; i < state.nx; ++i)
    for (int j = 0; j < state.ny; ++j) {
      const auto dofs = state.cell_dofs(i, j);
      const Eigen::VectorXd values = B * Eigen::Map<const Eigen::Matrix<double, 9, 1>>(dofs.data());
      for (std::size_t p = 0; p < samples.size(); ++p) {
        const double err =
            std::abs(values(p) - exact(grid.xc(i) + samples[p].xi * dx, grid.yc(j) + samples[p].eta * dy));
        e.linf = std::max(e.linf, err);
        e.l1 += samples[p].w * err * dx * dy;
        e.l2 += samples[p].w * err * err * dx * dy;
      }
    }
  e.l2 = std::sqrt(e.l2);
  return e;
}

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

void write_csv(std::ostream& os, const State1D& state, const Grid1D& grid) {
  const bool multi = state.m > 1;
  os << (multi ? "x,dof_class,component,value\n" : "x,dof_class,value\n");
  const auto row = [&](double x, const std::string& cls, int c, double v) {
    os << format_double(x) << ',' << cls << ',';
    if (multi) os << c << ',';
    os << format_double(v) << '\n';
  };
  for (int i = 0; i < state.n; ++i)
    for (int c = 0; c < state.m; ++c) row(grid.interface(i), "point", c, state.point(i, c));
  for (int i = 0; i < state.n; ++i)
    for (int k = 0; k <= state.K - 2; ++k)
      for (int c = 0; c < state.m; ++c) row(grid.center(i), "moment" + std::to_string(k), c, state.moment(i, k, c));
}

void write_csv(std::ostream& os, const State2D& state, const Grid2D& grid) {
  os << "x,y,dof_class,value\n";
  const struct {
    DofClass cls;
    const char* name;
    double ox, oy;
  } classes[] = {{DofClass::Average, "average", 0.0, 0.0},
                 {DofClass::EdgeX, "edge_x", 0.5, 0.0},
                 {DofClass::EdgeY, "edge_y", 0.0, 0.5},
                 {DofClass::Node, "node", 0.5, 0.5}};
  for (const auto& c : classes)
    for (int i = 0; i < state.nx; ++i)
      for (int j = 0; j < state.ny; ++j)
        os << format_double(grid.xc(i) + c.ox * grid.dx()) << ',' << format_double(grid.yc(j) + c.oy * grid.dy())
           << ',' << c.name << ',' << format_double(state.at(c.cls, i, j)) << '\n';
}

}  // namespace afpg
