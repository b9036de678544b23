#include "afpg/quadrature.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace afpg {

namespace {

constexpr int kMaxNodes = 16;

// Newton iteration on P_n over [-1, 1] in long double, then mapped to [-1/2, 1/2].
QuadratureRule make_rule(int n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0L;
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    {
      long double p0 = 1.0L, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0L;
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
    }
    const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
    // Reference weights sum to 2 on [-1, 1]; halve them for the unit interval.
    rule.nodes[i] = static_cast<double>(-x / 2);
    rule.nodes[n - 1 - i] = static_cast<double>(x / 2);
    rule.weights[i] = rule.weights[n - 1 - i] = static_cast<double>(w / 2);
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const QuadratureRule& gauss_rule(int n) {
  if (n < 1 || n > kMaxNodes)
    throw std::invalid_argument("gauss_rule: n must be in [1, 16], got " + std::to_string(n));
  static std::array<QuadratureRule, kMaxNodes + 1> cache;
  static std::array<std::once_flag, kMaxNodes + 1> flags;
  std::call_once(flags[n], [n] { cache[n] = make_rule(n); });
  return cache[n];
}

}  // namespace afpg
