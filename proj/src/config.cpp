#include "afpg/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace afpg {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view key, std::string_view v) {
  v = trim(v);
  double out = 0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size() || !std::isfinite(out))
    throw ConfigError(std::string(key) + ": expected a number, got '" + std::string(v) + "'");
  return out;
}

int parse_int(std::string_view key, std::string_view v) {
  v = trim(v);
  int out = 0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size())
    throw ConfigError(std::string(key) + ": expected an integer, got '" + std::string(v) + "'");
  return out;
}

std::vector<double> parse_list(std::string_view key, std::string_view v, char sep = ',') {
  std::vector<double> out;
  v = trim(v);
  if (v.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = v.find(sep, start);
    out.push_back(parse_double(key, v.substr(start, pos == std::string_view::npos ? v.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string format_list(const std::vector<double>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + format_double(v[k]);
  return s;
}

Eigen::MatrixXd parse_matrix(std::string_view key, std::string_view v) {
  std::vector<std::vector<double>> rows;
  v = trim(v);
  if (v.empty()) return {};
  std::size_t start = 0;
  while (true) {
    const auto pos = v.find(';', start);
    rows.push_back(parse_list(key, v.substr(start, pos == std::string_view::npos ? v.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  Eigen::MatrixXd M(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.front().size()) throw ConfigError(std::string(key) + ": ragged matrix");
    for (std::size_t c = 0; c < rows[r].size(); ++c) M(r, c) = rows[r][c];
  }
  return M;
}

std::string format_matrix(const Eigen::MatrixXd& M) {
  std::string s;
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    if (r) s += ';';
    for (Eigen::Index c = 0; c < M.cols(); ++c) s += (c ? "," : "") + format_double(M(r, c));
  }
  return s;
}

Scheme parse_scheme(std::string_view v) {
  if (v == "ssprk3") return Scheme::SSPRK3;
  if (v == "rk4") return Scheme::RK4;
  if (v == "euler") return Scheme::ForwardEuler;
  throw ConfigError("time.scheme: unknown scheme '" + std::string(v) + "' (ssprk3, rk4, euler)");
}

struct Key {
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

template <class T>
Key number(T RunConfig::*field) {
  return {[field](RunConfig& c, std::string_view v) {
            if constexpr (std::is_same_v<T, int>)
              c.*field = parse_int("", v);
            else
              c.*field = parse_double("", v);
          },
          [field](const RunConfig& c) {
            if constexpr (std::is_same_v<T, int>)
              return std::to_string(c.*field);
            else
              return format_double(c.*field);
          }};
}

Key ic_number(double InitialCondition::*field) {
  return {[field](RunConfig& c, std::string_view v) { c.ic.*field = parse_double("", v); },
          [field](const RunConfig& c) { return format_double(c.ic.*field); }};
}

Key upwind_number(double UpwindConfig::*field) {
  return {[field](RunConfig& c, std::string_view v) { c.upwind.*field = parse_double("", v); },
          [field](const RunConfig& c) { return format_double(c.upwind.*field); }};
}

const std::map<std::string, Key, std::less<>>& keys() {
  static const std::map<std::string, Key, std::less<>> table = {
      {"dimension", number(&RunConfig::dimension)},
      {"element.k", number(&RunConfig::K)},
      {"grid.n", number(&RunConfig::n)},
      {"grid.nx", number(&RunConfig::nx)},
      {"grid.ny", number(&RunConfig::ny)},
      {"grid.x_min", number(&RunConfig::x_min)},
      {"grid.x_max", number(&RunConfig::x_max)},
      {"grid.y_min", number(&RunConfig::y_min)},
      {"grid.y_max", number(&RunConfig::y_max)},
      {"model.name", {[](RunConfig& c, std::string_view v) { c.model = std::string(trim(v)); },
                      [](const RunConfig& c) { return c.model; }}},
      {"model.a", number(&RunConfig::a)},
      {"model.ax", number(&RunConfig::ax)},
      {"model.ay", number(&RunConfig::ay)},
      {"model.matrix", {[](RunConfig& c, std::string_view v) { c.matrix = parse_matrix("model.matrix", v); },
                        [](const RunConfig& c) { return format_matrix(c.matrix); }}},
      {"ic.name", {[](RunConfig& c, std::string_view v) { c.ic.name = std::string(trim(v)); },
                   [](const RunConfig& c) { return c.ic.name; }}},
      {"ic.amplitude", ic_number(&InitialCondition::amplitude)},
      {"ic.offset", ic_number(&InitialCondition::offset)},
      {"ic.wavenumber", ic_number(&InitialCondition::wavenumber)},
      {"ic.center", ic_number(&InitialCondition::center)},
      {"ic.width", ic_number(&InitialCondition::width)},
      {"ic.slope", ic_number(&InitialCondition::slope)},
      {"ic.value", ic_number(&InitialCondition::value)},
      {"ic.weights", {[](RunConfig& c, std::string_view v) { c.ic.weights = parse_list("ic.weights", v); },
                      [](const RunConfig& c) { return format_list(c.ic.weights); }}},
      {"upwind.mode",
       {[](RunConfig& c, std::string_view v) {
          v = trim(v);
          if (v == "sign")
            c.upwind.mode = UpwindMode::SignAdaptive;
          else if (v == "fixed")
            c.upwind.mode = UpwindMode::Fixed;
          else
            throw ConfigError("upwind.mode: expected 'sign' or 'fixed', got '" + std::string(v) + "'");
        },
        [](const RunConfig& c) { return std::string(c.upwind.mode == UpwindMode::Fixed ? "fixed" : "sign"); }}},
      {"upwind.alpha", upwind_number(&UpwindConfig::alpha)},
      {"upwind.beta_x", upwind_number(&UpwindConfig::beta_x)},
      {"upwind.beta_y", upwind_number(&UpwindConfig::beta_y)},
      {"upwind.edge_alpha1", upwind_number(&UpwindConfig::edge_alpha1)},
      {"upwind.edge_alpha2", upwind_number(&UpwindConfig::edge_alpha2)},
      {"upwind.node_extra",
       {[](RunConfig& c, std::string_view v) {
          const auto list = parse_list("upwind.node_extra", v);
          if (!list.empty() && list.size() != 8) throw ConfigError("upwind.node_extra: expected 8 values");
          c.upwind.node_extra.fill(0.0);
          for (std::size_t k = 0; k < list.size(); ++k) c.upwind.node_extra[k] = list[k];
        },
        [](const RunConfig& c) {
          return format_list(std::vector<double>(c.upwind.node_extra.begin(), c.upwind.node_extra.end()));
        }}},
      {"upwind.point_update",
       {[](RunConfig& c, std::string_view v) {
          v = trim(v);
          if (v == "jacobian")
            c.upwind.point_update = PointUpdate::JacobianSplit;
          else if (v == "exact")
            c.upwind.point_update = PointUpdate::ExactIntegration;
          else
            throw ConfigError("upwind.point_update: expected 'jacobian' or 'exact', got '" + std::string(v) + "'");
        },
        [](const RunConfig& c) {
          return std::string(c.upwind.point_update == PointUpdate::ExactIntegration ? "exact" : "jacobian");
        }}},
      {"time.scheme", {[](RunConfig& c, std::string_view v) { c.scheme = parse_scheme(trim(v)); },
                       [](const RunConfig& c) { return to_string(c.scheme); }}},
      {"time.cfl", number(&RunConfig::cfl)},
      {"time.dt", number(&RunConfig::dt)},
      {"time.t_end", number(&RunConfig::t_end)},
      {"output.dir", {[](RunConfig& c, std::string_view v) { c.output_dir = std::string(trim(v)); },
                      [](const RunConfig& c) { return c.output_dir; }}},
      {"output.snapshot_every", number(&RunConfig::snapshot_every)},
  };
  return table;
}

double periodic_distance(double s, double center) {
  double d = std::fmod(s - center, 1.0);
  if (d < -0.5) d += 1.0;
  if (d >= 0.5) d -= 1.0;
  return d;
}

}  // namespace

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::ForwardEuler:
      return "euler";
    case Scheme::SSPRK3:
      return "ssprk3";
    case Scheme::RK4:
      break;
  }
  return "rk4";
}

bool operator==(const RunConfig& a, const RunConfig& b) { return serialize(a) == serialize(b); }

RunConfig parse_config(std::string_view text) {
  RunConfig c;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    const std::string_view key = trim(line.substr(0, eq));
    const auto it = keys().find(key);
    if (it == keys().end()) throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    if (!seen.insert(std::string(key)).second)
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) + "'");
    try {
      it->second.set(c, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + " (" + std::string(key) + "): " + e.what());
    }
  }
  validate(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize(const RunConfig& config) {
  std::string out;
  for (const auto& [name, key] : keys()) out += name + "=" + key.get(config) + "\n";
  return out;
}

void validate(const RunConfig& c) {
  if (c.dimension != 1 && c.dimension != 2) throw ConfigError("dimension must be 1 or 2");
  if (c.K < 2 || c.K > 6) throw ConfigError("element.k must lie in 2..6");
  if (c.dimension == 2 && c.K != 2) throw ConfigError("2D runs support element.k = 2 only");
  if (c.dimension == 1 && c.n < 3) throw ConfigError("grid.n must be at least 3");
  if (c.dimension == 2 && (c.nx < 3 || c.ny < 3)) throw ConfigError("grid.nx and grid.ny must be at least 3");
  if (!(c.x_max > c.x_min) || !(c.y_max > c.y_min)) throw ConfigError("grid bounds must be increasing");
  if (c.model != "advection" && c.model != "burgers" && c.model != "linear_system")
    throw ConfigError("model.name: unknown model '" + c.model + "' (advection, burgers, linear_system)");
  if (c.dimension == 2 && c.model != "advection") throw ConfigError("2D runs support model.name = advection only");
  if (c.model == "linear_system" && (c.matrix.size() == 0 || c.matrix.rows() != c.matrix.cols()))
    throw ConfigError("model.matrix: a square matrix is required for linear_system");
  if (c.ic.name != "sine" && c.ic.name != "gaussian" && c.ic.name != "linear" && c.ic.name != "constant")
    throw ConfigError("ic.name: unknown initial condition '" + c.ic.name + "' (sine, gaussian, linear, constant)");
  if (!(c.ic.width > 0)) throw ConfigError("ic.width must be positive");
  if (!c.ic.weights.empty() && static_cast<int>(c.ic.weights.size()) != system_size(c))
    throw ConfigError("ic.weights: need one weight per component");
  try {
    c.upwind.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (c.upwind.point_update == PointUpdate::ExactIntegration && (c.model != "burgers" || c.K != 2 || c.dimension != 1))
    throw ConfigError("upwind.point_update = exact needs 1D burgers with element.k = 2");
  if (!(c.cfl > 0)) throw ConfigError("time.cfl must be positive");
  if (c.dt < 0) throw ConfigError("time.dt must be non-negative");
  if (c.t_end < 0) throw ConfigError("time.t_end must be non-negative");
  if (c.snapshot_every < 0) throw ConfigError("output.snapshot_every must be non-negative");
}

int system_size(const RunConfig& c) { return c.model == "linear_system" ? static_cast<int>(c.matrix.rows()) : 1; }

FluxModel1D make_model_1d(const RunConfig& c) {
  if (c.model == "burgers") return burgers1d();
  if (c.model == "linear_system") {
    try {
      return linear_system1d(c.matrix);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("model.matrix: ") + e.what());
    }
  }
  return advection1d(c.a);
}

FluxModel2D make_model_2d(const RunConfig& c) { return advection2d(c.ax, c.ay); }

Grid1D make_grid_1d(const RunConfig& c) { return make_grid_1d(c.n, c.x_min, c.x_max); }

Grid2D make_grid_2d(const RunConfig& c) { return make_grid_2d(c.nx, c.ny, c.x_min, c.x_max, c.y_min, c.y_max); }

Profile1D make_initial_1d(const RunConfig& c) {
  const InitialCondition ic = c.ic;
  const double x0 = c.x_min, L = c.x_max - c.x_min;
  const int m = system_size(c);
  std::function<double(double)> scalar;
  if (ic.name == "sine")
    scalar = [=](double x) { return ic.offset + ic.amplitude * std::sin(2 * std::numbers::pi * ic.wavenumber * (x - x0) / L); };
  else if (ic.name == "gaussian")
    scalar = [=](double x) {
      const double d = periodic_distance((x - x0) / L, ic.center) / ic.width;
      return ic.offset + ic.amplitude * std::exp(-d * d);
    };
  else if (ic.name == "linear")
    scalar = [=](double x) { return ic.offset + ic.slope * x; };
  else
    scalar = [=](double) { return ic.value; };
  const std::vector<double> weights = ic.weights.empty() ? std::vector<double>(m, 1.0) : ic.weights;
  return [=](double x) {
    const double v = scalar(x);
    Eigen::VectorXd out(m);
    for (int k = 0; k < m; ++k) out(k) = weights[k] * v;
    return out;
  };
}

Profile2D make_initial_2d(const RunConfig& c) {
  const InitialCondition ic = c.ic;
  const double x0 = c.x_min, y0 = c.y_min, Lx = c.x_max - c.x_min, Ly = c.y_max - c.y_min;
  const double k = 2 * std::numbers::pi * ic.wavenumber;
  if (ic.name == "sine")
    return [=](double x, double y) {
      return ic.offset + ic.amplitude * std::sin(k * (x - x0) / Lx) * std::sin(k * (y - y0) / Ly);
    };
  if (ic.name == "gaussian")
    return [=](double x, double y) {
      const double dx = periodic_distance((x - x0) / Lx, ic.center) / ic.width;
      const double dy = periodic_distance((y - y0) / Ly, ic.center) / ic.width;
      return ic.offset + ic.amplitude * std::exp(-dx * dx - dy * dy);
    };
  if (ic.name == "linear") return [=](double x, double y) { return ic.offset + ic.slope * (x + y); };
  return [=](double, double) { return ic.value; };
}

}  // namespace afpg
