#ifndef AFPG_GRID_HPP
#define AFPG_GRID_HPP

#include <functional>
#include <ostream>

#include <Eigen/Core>

#include "afpg/element1d.hpp"
#include "afpg/element2d.hpp"

namespace afpg {

/// Periodic uniform mesh; cell i covers [x_min + i dx, x_min + (i+1) dx).
struct Grid1D {
  int n = 0;
  double x_min = 0.0;
  double x_max = 1.0;

  double dx() const { return (x_max - x_min) / n; }
  double length() const { return x_max - x_min; }
  double center(int i) const { return x_min + (i + 0.5) * dx(); }
  /// x_{i+1/2}
  double interface(int i) const { return x_min + (i + 1) * dx(); }
  int wrap(int i) const { return ((i % n) + n) % n; }
};

/// Throws std::invalid_argument unless n >= 3 and x_max > x_min.
Grid1D make_grid_1d(int n, double x_min, double x_max);

/// DOFs of a 1D state with m components, stored flat so that time integrators
/// can treat the state as a plain vector:
///   points  q_{i+1/2}     at (i * m + c)
///   moments q_i^(k)       at n*m + ((i * (K-1) + k) * m + c)
/// Indices i are taken periodically.
struct State1D {
  int n = 0;
  int K = 2;
  int m = 1;
  Eigen::VectorXd data;

  int moments_per_cell() const { return K - 1; }
  Eigen::Index point_index(int i, int c = 0) const { return static_cast<Eigen::Index>(wrap(i)) * m + c; }
  Eigen::Index moment_index(int i, int k, int c = 0) const {
    return static_cast<Eigen::Index>(n) * m + (static_cast<Eigen::Index>(wrap(i)) * (K - 1) + k) * m + c;
  }
  double& point(int i, int c = 0) { return data(point_index(i, c)); }
  double point(int i, int c = 0) const { return data(point_index(i, c)); }
  double& moment(int i, int k, int c = 0) { return data(moment_index(i, k, c)); }
  double moment(int i, int k, int c = 0) const { return data(moment_index(i, k, c)); }
  double average(int i, int c = 0) const { return moment(i, 0, c); }

  /// Local DOFs of cell i for component c in element order
  /// (left point, moments, right point).
  Eigen::VectorXd cell_dofs(int i, int c = 0) const;

  int wrap(int i) const { return ((i % n) + n) % n; }
};

State1D make_state_1d(const Grid1D& grid, int K, int m = 1);

struct Grid2D {
  int nx = 0;
  int ny = 0;
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;

  double dx() const { return (x_max - x_min) / nx; }
  double dy() const { return (y_max - y_min) / ny; }
  double area() const { return (x_max - x_min) * (y_max - y_min); }
  double xc(int i) const { return x_min + (i + 0.5) * dx(); }
  double yc(int j) const { return y_min + (j + 0.5) * dy(); }
};

/// Throws std::invalid_argument unless nx, ny >= 3 and the box is non-empty.
Grid2D make_grid_2d(int nx, int ny, double x_min, double x_max, double y_min, double y_max);

/// Scalar 2D state. Four blocks of nx*ny values, row-major over (i, j):
/// averages, vertical-edge midpoints q_{i+1/2,j}, horizontal-edge midpoints
/// q_{i,j+1/2} and nodes q_{i+1/2,j+1/2}.
struct State2D {
  int nx = 0;
  int ny = 0;
  Eigen::VectorXd data;

  Eigen::Index index(DofClass cls, int i, int j) const {
    const Eigen::Index block = static_cast<Eigen::Index>(cls) * nx * ny;
    return block + static_cast<Eigen::Index>(((i % nx) + nx) % nx) * ny + ((j % ny) + ny) % ny;
  }
  double& at(DofClass cls, int i, int j) { return data(index(cls, i, j)); }
  double at(DofClass cls, int i, int j) const { return data(index(cls, i, j)); }
  /// Global DOF addressed relative to anchor cell (i, j).
  double at(int i, int j, const DofRef& d) const { return at(d.cls, i + d.di, j + d.dj); }

  std::array<double, 9> cell_dofs(int i, int j) const;
};

State2D make_state_2d(const Grid2D& grid);

using Profile1D = std::function<Eigen::VectorXd(double)>;
using Profile2D = std::function<double(double, double)>;

/// Point DOFs by evaluation, moments and averages by Gauss quadrature.
/// Throws std::domain_error on non-finite samples.
State1D project_initial(const Grid1D& grid, const Element1D<double>& element, int m, const Profile1D& f);
State1D project_initial(const Grid1D& grid, const Element1D<double>& element, const std::function<double(double)>& f);
State2D project_initial(const Grid2D& grid, const Profile2D& f);

double total_mass(const State1D& state, const Grid1D& grid, int c = 0);
double total_mass(const State2D& state, const Grid2D& grid);

struct ErrorNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// Norms of q_h - exact over the domain, using a Gauss rule with K+2 nodes per
/// axis on every cell; Linf also samples the DOF points.
ErrorNorms error_norms(const State1D& state, const Grid1D& grid, const Element1D<double>& element,
                       const Profile1D& exact);
ErrorNorms error_norms(const State2D& state, const Grid2D& grid, const Element2D<double>& element,
                       const Profile2D& exact);

/// CSV snapshot with a header row. 1D columns: x,dof_class,value (plus a
/// component column when m > 1); 2D columns: x,y,dof_class,value.
void write_csv(std::ostream& os, const State1D& state, const Grid1D& grid);
void write_csv(std::ostream& os, const State2D& state, const Grid2D& grid);

/// Shortest decimal string that reads back to the same double.
std::string format_double(double v);

}  // namespace afpg

#endif  // AFPG_GRID_HPP
