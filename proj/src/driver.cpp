#include "afpg/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include "afpg/element1d.hpp"
#include "afpg/element2d.hpp"

namespace afpg {

namespace {

struct Problem {
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)> rhs;
  std::function<double(const Eigen::VectorXd&)> stable_dt;
  std::function<std::vector<double>(const Eigen::VectorXd&)> mass;
  std::function<std::optional<ErrorNorms>(const Eigen::VectorXd&, double)> errors;
  Eigen::VectorXd initial;
  bool constant_speed = true;
};

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
  return os;
}

RunResult integrate(const RunConfig& config, const Problem& p, const SnapshotFn& snapshot) {
  RunResult result;
  Eigen::VectorXd q = p.initial;
  double t = 0.0;
  result.mass_log.push_back({t, p.mass(q)});
  if (snapshot) snapshot(0, t, q);

  const auto advance = [&](double dt) {
    try {
      q = step(config.scheme, q, t, dt, p.rhs);
    } catch (const NumericalError& e) {
      throw StepFailure(result.steps + 1, e.what());
    }
    ++result.steps;
    t += dt;
    result.mass_log.push_back({t, p.mass(q)});
    if (snapshot) snapshot(result.steps, t, q);
  };

  if (config.t_end > 0) {
    if (p.constant_speed) {
      const double dt0 = config.dt > 0 ? config.dt : p.stable_dt(q);
      const int steps = std::max(1, static_cast<int>(std::ceil(config.t_end / dt0 - 1e-9)));
      const double dt = config.t_end / steps;
      for (int k = 0; k < steps; ++k) advance(dt);
      t = config.t_end;
    } else {
      const double tol = 1e-12 * config.t_end;
      while (config.t_end - t > tol) {
        double dt = config.dt > 0 ? config.dt : p.stable_dt(q);
        if (t + dt > config.t_end - tol) dt = config.t_end - t;
        advance(dt);
      }
      t = config.t_end;
    }
  }
  result.t_final = t;
  result.mass_log.back().t = t;
  result.errors = p.errors(q, t);
  result.data = std::move(q);
  return result;
}

Problem problem_1d(const RunConfig& config) {
  const Grid1D grid = make_grid_1d(config);
  const FluxModel1D model = make_model_1d(config);
  const Profile1D initial = make_initial_1d(config);
  auto disc = std::make_shared<const Discretization1D>(make_discretization_1d(config.K));
  const int m = system_size(config);
  const State1D proto = project_initial(grid, disc->element, m, initial);

  Problem p;
  p.initial = proto.data;
  p.constant_speed = model.linear();
  const UpwindConfig upwind = config.upwind;
  const auto as_state = [proto](const Eigen::VectorXd& q) {
    State1D s = proto;
    s.data = q;
    return s;
  };
  p.rhs = [=](const Eigen::VectorXd& q, double) { return rhs_1d(as_state(q), grid, *disc, model, upwind); };
  const double fallback = config.t_end > 0 ? config.t_end : 1.0;
  p.stable_dt = [=](const Eigen::VectorXd& q) { return compute_dt(as_state(q), grid, model, config.cfl, fallback); };
  p.mass = [=](const Eigen::VectorXd& q) {
    const State1D s = as_state(q);
    std::vector<double> out(m);
    for (int c = 0; c < m; ++c) out[c] = total_mass(s, grid, c);
    return out;
  };
  p.errors = [=](const Eigen::VectorXd& q, double t) -> std::optional<ErrorNorms> {
    if (!has_exact_solution(config, t)) return std::nullopt;
    const Profile1D exact = exact_solution(model, initial, grid.x_min, grid.length(), t);
    return error_norms(as_state(q), grid, disc->element, exact);
  };
  return p;
}

Problem problem_2d(const RunConfig& config) {
  const Grid2D grid = make_grid_2d(config);
  const FluxModel2D model = make_model_2d(config);
  const Profile2D initial = make_initial_2d(config);
  auto disc = std::make_shared<const Discretization2D>(make_discretization_2d(model, config.upwind));
  const State2D proto = project_initial(grid, initial);

  Problem p;
  p.initial = proto.data;
  const auto as_state = [proto](const Eigen::VectorXd& q) {
    State2D s = proto;
    s.data = q;
    return s;
  };
  p.rhs = [=](const Eigen::VectorXd& q, double) { return rhs_2d(as_state(q), grid, *disc, model); };
  const double fallback = config.t_end > 0 ? config.t_end : 1.0;
  p.stable_dt = [=](const Eigen::VectorXd&) { return compute_dt(grid, model, config.cfl, fallback); };
  p.mass = [=](const Eigen::VectorXd& q) { return std::vector<double>{total_mass(as_state(q), grid)}; };
  p.errors = [=](const Eigen::VectorXd& q, double t) -> std::optional<ErrorNorms> {
    return error_norms(as_state(q), grid, disc->element, exact_solution(model, initial, grid, t));
  };
  return p;
}

std::string snapshot_name(int step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snap_%06d.csv", step);
  return buf;
}

template <class Poly>
void write_row_1d(std::ostream& os, const std::string& name, const Poly& p, int K) {
  os << name;
  for (int k = 0; k <= K; ++k) os << ',' << to_string(p[k]);
  os << '\n';
}

void write_row_2d(std::ostream& os, const std::string& name, const Poly2<Rational>& p) {
  os << name;
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l) os << ',' << to_string(p.coeff(k, l));
  os << '\n';
}

char position(int r) { return r < 0 ? 'm' : (r > 0 ? 'p' : '0'); }

}  // namespace

double burgers_breaking_time(const RunConfig& config) {
  const Profile1D u0 = make_initial_1d(config);
  const double L = config.x_max - config.x_min;
  const int samples = 8192;
  const double h = L / samples;
  double min_slope = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double x = config.x_min + k * h;
    min_slope = std::min(min_slope, (u0(x + 0.5 * h)(0) - u0(x - 0.5 * h)(0)) / h);
  }
  return min_slope < 0 ? -1.0 / min_slope : std::numeric_limits<double>::infinity();
}

bool has_exact_solution(const RunConfig& config, double t) {
  if (config.model != "burgers") return true;
  // Keep a margin: the characteristic root finder degrades near breaking.
  return t < 0.95 * burgers_breaking_time(config);
}

RunResult simulate(const RunConfig& config, const SnapshotFn& snapshot) {
  validate(config);
  return integrate(config, config.dimension == 1 ? problem_1d(config) : problem_2d(config), snapshot);
}

RunResult run(const RunConfig& config) {
  validate(config);
  const std::filesystem::path dir = config.output_dir.empty() ? "." : config.output_dir;
  std::filesystem::create_directories(dir);

  const auto write_state = [&](std::ostream& os, const Eigen::VectorXd& q) {
    if (config.dimension == 1) {
      const Grid1D grid = make_grid_1d(config);
      State1D s = make_state_1d(grid, config.K, system_size(config));
      s.data = q;
      write_csv(os, s, grid);
    } else {
      const Grid2D grid = make_grid_2d(config);
      State2D s = make_state_2d(grid);
      s.data = q;
      write_csv(os, s, grid);
    }
  };

  SnapshotFn snapshot;
  if (config.snapshot_every > 0)
    snapshot = [&](int step, double, const Eigen::VectorXd& q) {
      if (step % config.snapshot_every != 0) return;
      auto os = open_output(dir / snapshot_name(step));
      write_state(os, q);
    };

  const RunResult result = simulate(config, snapshot);

  {
    auto os = open_output(dir / "final.csv");
    write_state(os, result.data);
  }
  {
    auto os = open_output(dir / "mass.csv");
    const std::size_t m = result.mass_log.front().mass.size();
    os << "t";
    if (m == 1)
      os << ",total_mass";
    else
      for (std::size_t c = 0; c < m; ++c) os << ",total_mass_" << c;
    os << '\n';
    for (const auto& s : result.mass_log) {
      os << format_double(s.t);
      for (double v : s.mass) os << ',' << format_double(v);
      os << '\n';
    }
  }
  {
    auto os = open_output(dir / "summary.txt");
    os << serialize(config);
    os << "result.steps=" << result.steps << '\n';
    os << "result.t_final=" << format_double(result.t_final) << '\n';
    const auto& m0 = result.mass_log.front().mass;
    const auto& m1 = result.mass_log.back().mass;
    for (std::size_t c = 0; c < m0.size(); ++c) {
      const std::string suffix = m0.size() == 1 ? "" : "_" + std::to_string(c);
      os << "result.mass_initial" << suffix << '=' << format_double(m0[c]) << '\n';
      os << "result.mass_final" << suffix << '=' << format_double(m1[c]) << '\n';
    }
    if (result.errors) {
      os << "error.l1=" << format_double(result.errors->l1) << '\n';
      os << "error.l2=" << format_double(result.errors->l2) << '\n';
      os << "error.linf=" << format_double(result.errors->linf) << '\n';
    }
  }
  return result;
}

std::vector<ConvergenceRow> converge(const RunConfig& config, const std::vector<int>& grids) {
  if (grids.size() < 2) throw ConfigError("converge: need at least two grids");
  if (!has_exact_solution(config, config.t_end))
    throw ConfigError("converge: no exact solution at t_end for this configuration");
  std::vector<ConvergenceRow> rows;
  for (int n : grids) {
    RunConfig c = config;
    c.n = c.nx = c.ny = n;
    c.snapshot_every = 0;
    validate(c);
    ConvergenceRow row;
    row.n = n;
    row.errors = *simulate(c).errors;
    if (!rows.empty()) {
      const auto& prev = rows.back();
      const double r = std::log(static_cast<double>(n) / prev.n);
      row.eoc = ErrorNorms{std::log(prev.errors.l1 / row.errors.l1) / r, std::log(prev.errors.l2 / row.errors.l2) / r,
                           std::log(prev.errors.linf / row.errors.linf) / r};
    }
    rows.push_back(row);
  }
  return rows;
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << "N,L1,L2,Linf,EOC_L1,EOC_L2,EOC_Linf\n";
  for (const auto& r : rows) {
    os << r.n << ',' << format_double(r.errors.l1) << ',' << format_double(r.errors.l2) << ','
       << format_double(r.errors.linf);
    if (r.eoc)
      os << ',' << format_double(r.eoc->l1) << ',' << format_double(r.eoc->l2) << ',' << format_double(r.eoc->linf);
    else
      os << ",,,";
    os << '\n';
  }
}

void dump_element_csv(std::ostream& os, int K, const Rational& alpha) {
  const Element1D<Rational> e = build_element(K);
  const PointTest1D<Rational> t = build_point_test(e, alpha);
  os << "function";
  for (int k = 0; k <= K; ++k) os << ",c" << k;
  os << '\n';
  write_row_1d(os, "basis_left", e.basis_left, K);
  for (std::size_t k = 0; k < e.basis_moments.size(); ++k)
    write_row_1d(os, "basis_moment_" + std::to_string(k), e.basis_moments[k], K);
  write_row_1d(os, "basis_right", e.basis_right, K);
  for (const auto& w : e.moment_weights) write_row_1d(os, "weight_moment_" + std::to_string(w.k), w.poly, K);
  write_row_1d(os, "test_plus", t.A_plus, K);
  write_row_1d(os, "test_minus", t.A_minus, K);
}

void dump_element_2d_csv(std::ostream& os, const std::vector<Rational>& alphas) {
  std::array<Rational, 3> edge{Rational(0), Rational(0), Rational(1)};
  std::array<Rational, 11> node = node_alphas(Rational(1, 2), Rational(1, 2), std::array<Rational, 8>{});
  if (alphas.size() == 3 || alphas.size() == 14) std::copy_n(alphas.begin(), 3, edge.begin());
  if (alphas.size() == 11) std::copy_n(alphas.begin(), 11, node.begin());
  if (alphas.size() == 14) std::copy_n(alphas.begin() + 3, 11, node.begin());
  if (!alphas.empty() && alphas.size() != 3 && alphas.size() != 11 && alphas.size() != 14)
    throw std::invalid_argument("dump_element_2d_csv: expected 3, 11 or 14 alphas");

  const Element2D<Rational> e = build_element_2d();
  const auto ex = build_edge_test(edge, EdgeOrientation::Vertical);
  const auto ey = build_edge_test(edge, EdgeOrientation::Horizontal);
  const auto nd = build_node_test(node);

  os << "function";
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l) os << ",c" << k << l;
  os << '\n';
  for (int idx = 0; idx < 9; ++idx) {
    const LocalDof d = LocalDof::from_index(idx);
    write_row_2d(os, std::string("basis_") + position(d.r) + position(d.s), e.basis[idx]);
  }
  write_row_2d(os, "test_average", Poly2<Rational>::constant(Rational(1)));
  write_row_2d(os, "test_edge_x_plus", ex.A_plus);
  write_row_2d(os, "test_edge_x_minus", ex.A_minus);
  write_row_2d(os, "test_edge_y_plus", ey.A_plus);
  write_row_2d(os, "test_edge_y_minus", ey.A_minus);
  write_row_2d(os, "test_node_pp", nd.A_pp);
  write_row_2d(os, "test_node_mp", nd.A_mp);
  write_row_2d(os, "test_node_pm", nd.A_pm);
  write_row_2d(os, "test_node_mm", nd.A_mm);
}

}  // namespace afpg
