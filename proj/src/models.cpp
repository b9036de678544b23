#include "afpg/models.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace afpg {

namespace {

JacobianSplit split_scalar(double s) {
  return {Eigen::MatrixXd::Constant(1, 1, std::max(s, 0.0)), Eigen::MatrixXd::Constant(1, 1, std::min(s, 0.0))};
}

double periodic(double x, double x_min, double length) {
  const double r = std::fmod(x - x_min, length);
  return x_min + (r < 0 ? r + length : r);
}

}  // namespace

Eigen::VectorXd FluxModel1D::flux(const Eigen::VectorXd& q) const {
  switch (kind) {
    case ModelKind::Advection:
      return a * q;
    case ModelKind::Burgers:
      return 0.5 * q.cwiseProduct(q);
    case ModelKind::LinearSystem:
      break;
  }
  return A * q;
}

Eigen::MatrixXd FluxModel1D::jacobian(const Eigen::VectorXd& q) const {
  switch (kind) {
    case ModelKind::Advection:
      return Eigen::MatrixXd::Constant(1, 1, a);
    case ModelKind::Burgers:
      return Eigen::MatrixXd::Constant(1, 1, q(0));
    case ModelKind::LinearSystem:
      break;
  }
  return A;
}

JacobianSplit FluxModel1D::split(const Eigen::VectorXd& q) const {
  if (kind == ModelKind::Burgers) return split_scalar(q(0));
  return constant_split;
}

double FluxModel1D::max_speed(const Eigen::VectorXd& q) const {
  switch (kind) {
    case ModelKind::Advection:
      return std::abs(a);
    case ModelKind::Burgers:
      return std::abs(q(0));
    case ModelKind::LinearSystem:
      break;
  }
  return eigenvalues.cwiseAbs().maxCoeff();
}

std::string FluxModel1D::name() const {
  switch (kind) {
    case ModelKind::Advection:
      return "advection";
    case ModelKind::Burgers:
      return "burgers";
    case ModelKind::LinearSystem:
      break;
  }
  return "linear_system";
}

FluxModel1D advection1d(double a) {
  FluxModel1D m;
  m.kind = ModelKind::Advection;
  m.a = a;
  m.constant_split = split_scalar(a);
  return m;
}

FluxModel1D burgers1d() {
  FluxModel1D m;
  m.kind = ModelKind::Burgers;
  return m;
}

FluxModel1D linear_system1d(const Eigen::MatrixXd& A) {
  if (A.rows() != A.cols() || A.rows() == 0) throw std::invalid_argument("linear_system1d: A must be square");
  const Eigen::Index n = A.rows();
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());

  Eigen::EigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success) throw std::invalid_argument("linear_system1d: eigendecomposition failed");
  if (es.eigenvalues().imag().cwiseAbs().maxCoeff() > 1e-12 * scale ||
      es.eigenvectors().imag().cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("linear_system1d: complex eigenvalues");

  FluxModel1D m;
  m.kind = ModelKind::LinearSystem;
  m.m = static_cast<int>(n);
  m.A = A;
  m.eigenvalues = es.eigenvalues().real();
  m.R = es.eigenvectors().real();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m.R);
  if (lu.rank() < n || lu.rcond() < 1e-10) throw std::invalid_argument("linear_system1d: defective matrix");
  m.R_inv = lu.inverse();

  const Eigen::VectorXd lp = m.eigenvalues.cwiseMax(0.0), lm = m.eigenvalues.cwiseMin(0.0);
  m.constant_split.plus = m.R * lp.asDiagonal() * m.R_inv;
  m.constant_split.minus = m.R * lm.asDiagonal() * m.R_inv;
  return m;
}

double FluxModel2D::max_speed() const { return std::max(std::abs(ax), std::abs(ay)); }

FluxModel2D advection2d(double ax, double ay) { return {ax, ay}; }

Profile1D exact_solution(const FluxModel1D& model, const Profile1D& initial, double x_min, double length,
                         double t) {
  const auto wrap = [=](double x) { return periodic(x, x_min, length); };
  switch (model.kind) {
    case ModelKind::Advection:
      return [=](double x) { return initial(wrap(x - model.a * t)); };
    case ModelKind::LinearSystem:
      return [=](double x) {
        Eigen::VectorXd w(model.m);
        for (int p = 0; p < model.m; ++p) w(p) = model.R_inv.row(p).dot(initial(wrap(x - model.eigenvalues(p) * t)));
        return Eigen::VectorXd(model.R * w);
      };
    case ModelKind::Burgers:
      break;
  }
  return [=](double x) {
    const auto u0 = [&](double y) { return initial(wrap(y))(0); };
    // Newton on g(u) = u - u0(x - u t), starting from the value at the foot.
    double u = u0(x);
    const double h = 1e-7 * length;
    for (int it = 0; it < 100; ++it) {
      const double y = x - u * t;
      const double g = u - u0(y);
      const double du0 = (u0(y + h) - u0(y - h)) / (2 * h);
      const double step = g / (1.0 + t * du0);
      u -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(u))) break;
    }
    return Eigen::VectorXd::Constant(1, u);
  };
}

Profile2D exact_solution(const FluxModel2D& model, const Profile2D& initial, const Grid2D& grid, double t) {
  const double lx = grid.x_max - grid.x_min, ly = grid.y_max - grid.y_min;
  return [=](double x, double y) {
    return initial(periodic(x - model.ax * t, grid.x_min, lx), periodic(y - model.ay * t, grid.y_min, ly));
  };
}

}  // namespace afpg
