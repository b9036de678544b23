#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "afpg/parallel.hpp"
#include "afpg/quadrature.hpp"
#include "afpg/semidiscrete.hpp"

namespace afpg {

int assembly_threads() {
  static const int n = [] {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("AFPG_THREADS")) {
      const int cap = std::atoi(env);
      if (cap > 0) hw = std::min(hw, cap);
    }
    return hw;
  }();
  return n;
}

void UpwindConfig::validate() const {
  if (!(std::abs(alpha) <= 1.0)) throw std::invalid_argument("upwind.alpha must lie in [-1, 1]");
  if (!(std::abs(beta_x) <= 0.5) || !(std::abs(beta_y) <= 0.5))
    throw std::invalid_argument("upwind.beta must lie in [-1/2, 1/2]");
  if (!std::isfinite(edge_alpha1) || !std::isfinite(edge_alpha2))
    throw std::invalid_argument("upwind edge alphas must be finite");
  for (double v : node_extra)
    if (!std::isfinite(v)) throw std::invalid_argument("upwind node alphas must be finite");
}

double sign0(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

double choose_alpha(const FluxModel1D& model, double q, const UpwindConfig& upwind) {
  if (upwind.mode == UpwindMode::Fixed) return upwind.alpha;
  return sign0(model.speed(q));
}

Discretization1D make_discretization_1d(int K) {
  const auto exact = build_element(K);
  Discretization1D d;
  d.K = K;
  d.element = exact.cast<double>();
  d.up = derivative_stencil(exact, build_point_test(exact, Rational(1))).cast<double>();
  d.down = derivative_stencil(exact, build_point_test(exact, Rational(-1))).cast<double>();

  const auto& rule = gauss_rule(K + 2);
  d.basis_at_nodes.resize(rule.size(), K + 1);
  for (int q = 0; q < rule.size(); ++q)
    for (int s = 0; s <= K; ++s) d.basis_at_nodes(q, s) = d.element.basis(s)(rule.nodes[q]);
  d.weight_slopes.resize(K - 1, rule.size());
  d.weight_right.resize(K - 1);
  d.weight_left.resize(K - 1);
  for (int k = 0; k <= K - 2; ++k) {
    const auto& A = d.element.moment_weights[k].poly;
    const auto dA = differentiate1(A);
    for (int q = 0; q < rule.size(); ++q) d.weight_slopes(k, q) = rule.weights[q] * dA(rule.nodes[q]);
    d.weight_right(k) = A(0.5);
    d.weight_left(k) = A(-0.5);
  }
  return d;
}

namespace {

void check_state(const State1D& s, const Grid1D& grid, const Discretization1D& disc, const FluxModel1D& model) {
  if (s.n != grid.n || s.K != disc.K || s.m != model.m ||
      s.data.size() != static_cast<Eigen::Index>(s.n) * s.m * s.K)
    throw std::invalid_argument("rhs_1d: state shape does not match grid, element or model");
  if (!s.data.allFinite()) throw std::domain_error("rhs_1d: non-finite state");
}

// Window of 2K+1 DOFs around interface i+1/2 for component c.
Eigen::VectorXd window(const State1D& s, int i, int c) {
  const int K = s.K;
  Eigen::VectorXd w(2 * K + 1);
  w(0) = s.point(i - 1, c);
  for (int k = 0; k <= K - 2; ++k) {
    w(1 + k) = s.moment(i, k, c);
    w(K + 1 + k) = s.moment(i + 1, k, c);
  }
  w(K) = s.point(i, c);
  w(2 * K) = s.point(i + 1, c);
  return w;
}

double burgers_point(double qL, double avgL, double q, double avgR, double qR, double alpha, double dx) {
  const double left = -9 * (qL - 2 * avgL) * (qL - 2 * avgL) + 2 * (qL - 12 * avgL) * q + 31 * q * q;
  const double right = 9 * (qR - 2 * avgR) * (qR - 2 * avgR) - 2 * (qR - 12 * avgR) * q - 31 * q * q;
  return -(0.5 * (1 + alpha) * left + 0.5 * (1 - alpha) * right) / (10 * dx);
}

}  // namespace

Eigen::VectorXd rhs_point_burgers(const State1D& s, const Grid1D& grid, const UpwindConfig& upwind) {
  if (s.K != 2) throw std::invalid_argument("rhs_point_burgers: requires K = 2, got " + std::to_string(s.K));
  if (s.m != 1) throw std::invalid_argument("rhs_point_burgers: scalar states only");
  const FluxModel1D burgers = burgers1d();
  Eigen::VectorXd out(s.n);
  const double dx = grid.dx();
  for (int i = 0; i < s.n; ++i) {
    const double q = s.point(i);
    out(i) = burgers_point(s.point(i - 1), s.average(i), q, s.average(i + 1), s.point(i + 1),
                           choose_alpha(burgers, q, upwind), dx);
  }
  return out;
}

Eigen::VectorXd rhs_1d(const State1D& s, const Grid1D& grid, const Discretization1D& disc,
                       const FluxModel1D& model, const UpwindConfig& upwind) {
  check_state(s, grid, disc, model);
  const int K = s.K, m = s.m, n = s.n;
  const double dx = grid.dx();
  const bool exact_points = upwind.point_update == PointUpdate::ExactIntegration;
  if (exact_points && (model.kind != ModelKind::Burgers || K != 2))
    throw std::invalid_argument("rhs_1d: exact-integration point update needs Burgers with K = 2");

  Eigen::VectorXd out = Eigen::VectorXd::Zero(s.data.size());
  const auto point_vec = [&](int i) {
    Eigen::VectorXd v(m);
    for (int c = 0; c < m; ++c) v(c) = s.point(i, c);
    return v;
  };

  // Moments: -(1/dx) [A_k(1/2) f_R - A_k(-1/2) f_L - sum_q w_q A_k'(xi_q) f(q_h(xi_q))].
  parallel_for(n, [&](int begin, int end) {
    Eigen::MatrixXd dofs(K + 1, m);
    for (int i = begin; i < end; ++i) {
      for (int c = 0; c < m; ++c) dofs.col(c) = s.cell_dofs(i, c);
      const Eigen::MatrixXd values = disc.basis_at_nodes * dofs;
      Eigen::MatrixXd fq(values.rows(), m);
      if (m == 1) {
        for (Eigen::Index q = 0; q < values.rows(); ++q) fq(q, 0) = model.flux(values(q, 0));
      } else {
        for (Eigen::Index q = 0; q < values.rows(); ++q) fq.row(q) = model.flux(Eigen::VectorXd(values.row(q).transpose())).transpose();
      }
      const Eigen::VectorXd fL = model.flux(point_vec(i - 1)), fR = model.flux(point_vec(i));
      const Eigen::MatrixXd volume = disc.weight_slopes * fq;
      for (int k = 0; k <= K - 2; ++k)
        for (int c = 0; c < m; ++c)
          out(s.moment_index(i, k, c)) =
              -(disc.weight_right(k) * fR(c) - disc.weight_left(k) * fL(c) - volume(k, c)) / dx;
    }
  });

  // Points.
  parallel_for(n, [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      if (exact_points) {
        const double q = s.point(i);
        out(s.point_index(i)) = burgers_point(s.point(i - 1), s.average(i), q, s.average(i + 1), s.point(i + 1),
                                              choose_alpha(model, q, upwind), dx);
        continue;
      }
      if (m == 1) {
        const double q = s.point(i);
        const double alpha = choose_alpha(model, q, upwind);
        const Eigen::VectorXd w = window(s, i, 0);
        const double D = 0.5 * (1 + alpha) * disc.up.weights.dot(w) + 0.5 * (1 - alpha) * disc.down.weights.dot(w);
        out(s.point_index(i)) = -model.speed(q) * D / dx;
        continue;
      }
      Eigen::VectorXd Dp(m), Dm(m);
      for (int c = 0; c < m; ++c) {
        const Eigen::VectorXd w = window(s, i, c);
        Dp(c) = disc.up.weights.dot(w);
        Dm(c) = disc.down.weights.dot(w);
      }
      const JacobianSplit J = model.split(point_vec(i));
      const Eigen::VectorXd r = -(J.plus * Dp + J.minus * Dm) / dx;
      for (int c = 0; c < m; ++c) out(s.point_index(i, c)) = r(c);
    }
  });
  return out;
}

}  // namespace afpg
