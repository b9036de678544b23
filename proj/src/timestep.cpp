#include "afpg/timestep.hpp"

#include <algorithm>
#include <cmath>

namespace afpg {

namespace {

Eigen::VectorXd checked(Eigen::VectorXd v, const char* stage) {
  if (!v.allFinite()) throw NumericalError(std::string("non-finite values in ") + stage);
  return v;
}

double from_speed(double speed, double h, double cfl, double fallback_dt) {
  if (!(cfl > 0)) throw std::invalid_argument("compute_dt: cfl must be positive");
  if (speed > 0) return cfl * h / speed;
  if (fallback_dt > 0) return fallback_dt;
  throw std::invalid_argument("compute_dt: zero wave speed and no fixed dt");
}

}  // namespace

Eigen::VectorXd step(Scheme scheme, const Eigen::VectorXd& q, double t, double dt, const RhsFunction& L) {
  if (!(dt > 0)) throw std::invalid_argument("step: dt must be positive");
  switch (scheme) {
    case Scheme::ForwardEuler:
      return checked(q + dt * L(q, t), "forward Euler step");
    case Scheme::SSPRK3: {
      const Eigen::VectorXd q1 = checked(q + dt * L(q, t), "SSPRK3 stage 1");
      const Eigen::VectorXd q2 = checked(0.75 * q + 0.25 * (q1 + dt * L(q1, t + dt)), "SSPRK3 stage 2");
      return checked(q / 3.0 + 2.0 / 3.0 * (q2 + dt * L(q2, t + 0.5 * dt)), "SSPRK3 stage 3");
    }
    case Scheme::RK4:
      break;
  }
  const Eigen::VectorXd k1 = checked(L(q, t), "RK4 stage 1");
  const Eigen::VectorXd k2 = checked(L(q + 0.5 * dt * k1, t + 0.5 * dt), "RK4 stage 2");
  const Eigen::VectorXd k3 = checked(L(q + 0.5 * dt * k2, t + 0.5 * dt), "RK4 stage 3");
  const Eigen::VectorXd k4 = checked(L(q + dt * k3, t + dt), "RK4 stage 4");
  return checked(q + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4), "RK4 update");
}

double compute_dt(const State1D& state, const Grid1D& grid, const FluxModel1D& model, double cfl,
                  double fallback_dt) {
  double speed = 0.0;
  Eigen::VectorXd q(state.m);
  for (int i = 0; i < state.n; ++i) {
    for (int c = 0; c < state.m; ++c) q(c) = state.point(i, c);
    speed = std::max(speed, model.max_speed(q));
  }
  return from_speed(speed, grid.dx(), cfl, fallback_dt);
}

double compute_dt(const Grid2D& grid, const FluxModel2D& model, double cfl, double fallback_dt) {
  return from_speed(model.max_speed(), std::min(grid.dx(), grid.dy()), cfl, fallback_dt);
}

}  // namespace afpg
