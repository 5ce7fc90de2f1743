#include "cli_app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "decogas/design.hpp"
#include "decogas/dynamics.hpp"
#include "decogas/oracle.hpp"
#include "decogas/rates.hpp"
#include "num_format.hpp"

namespace decogas::cli {
namespace {

struct GlobalConfig {
  std::string constants_path;
  std::string format = "csv";
  int precision = 9;
  bool precision_set = false;
  std::string out_path = "-";
  PhysicalConstants constants;

  std::string num(double v) const { return format_sci(v, precision); }
};

PhysicalConstants load_constants(const std::string& path) {
  PhysicalConstants c;
  if (path.empty()) return c;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("constants: cannot open file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("constants: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("constants: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number())
      throw std::invalid_argument("constants: value of '" + key + "' must be a number");
    if (key == "hbar")
      c.hbar = value.get<double>();
    else if (key == "k_B")
      c.k_B = value.get<double>();
    else if (key == "amu")
      c.amu = value.get<double>();
    else
      throw std::invalid_argument("constants: unknown key '" + key + "'");
  }
  c.validate();
  return c;
}

void emit(const GlobalConfig& g, std::ostream& out, const std::string& payload) {
  if (g.out_path == "-") {
    out << payload;
    return;
  }
  std::ofstream f(g.out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("out: cannot open output path: " + g.out_path);
  f << payload;
}

std::string join(const std::vector<std::string>& cells, char sep) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += sep;
    line += cells[i];
  }
  return line;
}

// Tabular payload with identical field names in both renderings: CSV with a
// header row, or a JSON array of flat objects. String-typed cells arrive
// pre-quoted for JSON via the `quoted` mask.
struct Table {
  std::vector<std::string> header;
  std::vector<bool> quoted;
  std::vector<std::vector<std::string>> rows;

  std::string render(const GlobalConfig& g) const {
    if (g.format == "json") {
      std::string s = "[";
      for (std::size_t r = 0; r < rows.size(); ++r) {
        s += r ? ",\n " : "\n ";
        s += "{";
        for (std::size_t i = 0; i < header.size(); ++i) {
          if (i) s += ",";
          s += "\"" + header[i] + "\":";
          s += quoted[i] ? "\"" + rows[r][i] + "\"" : rows[r][i];
        }
        s += "}";
      }
      s += "\n]\n";
      return s;
    }
    std::string s = join(header, ',') + "\n";
    for (const auto& row : rows) s += join(row, ',') + "\n";
    return s;
  }
};

struct PointOptions {
  double temperature = 0.0;
  double density = 0.0;
  double pressure = 0.0;
  double mass_amu = kAirMolecularMassAmu;
  double radius = 0.0;
  CLI::Option* density_opt = nullptr;
  CLI::Option* pressure_opt = nullptr;

  void add_to(CLI::App* cmd, bool with_radius = true) {
    cmd->add_option("--temp", temperature, "ambient temperature, K")->required();
    density_opt = cmd->add_option("--density", density, "gas number density, m^-3");
    pressure_opt = cmd->add_option("--pressure", pressure, "gas pressure, Pa");
    cmd->add_option("--mass-amu", mass_amu, "molecular mass of the gas, a.m.u.")
        ->capture_default_str();
    if (with_radius) cmd->add_option("--radius", radius, "scatterer radius, m")->required();
  }

  GasEnvironment environment(const PhysicalConstants& c) const {
    const bool have_density = density_opt->count() > 0;
    const bool have_pressure = pressure_opt->count() > 0;
    if (have_density == have_pressure)
      throw std::invalid_argument("exactly one of --density or --pressure must be given");
    const double mass = mass_amu * c.amu;
    if (have_pressure) return GasEnvironment::from_pressure(temperature, pressure, mass, c);
    return GasEnvironment(temperature, density, mass);
  }
};

int cmd_rate(const GlobalConfig& g, std::ostream& out, const PointOptions& p, double dx) {
  const auto env = p.environment(g.constants);
  const Scatterer scat(p.radius);
  const SuperpositionGeometry geom(dx);
  const auto b = breakdown(geom, env, scat, g.constants);

  Table t;
  t.header = {"temperature_k",   "number_density_per_m3", "pressure_pa",
              "molecular_mass_kg", "radius_m",            "delta_x_m",
              "lambda_thermal_m", "dawson_argument",      "regime",
              "gamma_exact_hz",  "gamma_lwl_hz",          "gamma_swl_hz",
              "gamma_int_min_hz", "gamma_int_tanh_hz",    "gamma_mlwl_hz"};
  t.quoted = std::vector<bool>(t.header.size(), false);
  t.quoted[8] = true;
  t.rows.push_back({g.num(env.temperature), g.num(env.number_density),
                    g.num(env.pressure(g.constants)), g.num(env.molecular_mass),
                    g.num(scat.radius), g.num(geom.delta_x),
                    g.num(lambda_thermal(env, g.constants)), g.num(b.dawson_argument),
                    to_string(b.regime), g.num(b.gamma_exact), g.num(b.gamma_lwl),
                    g.num(b.gamma_swl), g.num(b.gamma_int_min), g.num(b.gamma_int_tanh),
                    g.num(b.gamma_mlwl)});
  emit(g, out, t.render(g));
  return 0;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(lo < hi)) throw std::invalid_argument("grid: need 0 < tmin < tmax");
  if (points < 2) throw std::invalid_argument("grid: need at least 2 points");
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i)
    g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
  return g;
}

int cmd_compare(const GlobalConfig& g, std::ostream& out, double tmin, double tmax, int points,
                double density, double radius, double dx, double mass_amu) {
  const Scatterer scat(radius);
  const SuperpositionGeometry geom(dx);
  Table t;
  t.header = {"temperature_k", "gamma_exact",    "gamma_lwl",  "gamma_swl",
              "gamma_int_min", "gamma_int_tanh", "gamma_mlwl"};
  t.quoted = std::vector<bool>(t.header.size(), false);
  for (double temperature : log_grid(tmin, tmax, points)) {
    const GasEnvironment env(temperature, density, mass_amu * g.constants.amu);
    const auto b = breakdown(geom, env, scat, g.constants);
    t.rows.push_back({g.num(temperature), g.num(b.gamma_exact), g.num(b.gamma_lwl),
                      g.num(b.gamma_swl), g.num(b.gamma_int_min), g.num(b.gamma_int_tanh),
                      g.num(b.gamma_mlwl)});
  }
  emit(g, out, t.render(g));
  return 0;
}

int cmd_sweep(const GlobalConfig& g, std::ostream& out, const std::vector<double>& widths,
              double tmin, double tmax, int points, double density, double radius,
              double mass_amu) {
  if (widths.empty()) throw std::invalid_argument("sweep: width list must be nonempty");
  const Scatterer scat(radius);
  Table t;
  t.header = {"temperature_k"};
  for (double dx : widths) t.header.push_back("gamma_exact_dx_" + format_shortest(dx));
  t.quoted = std::vector<bool>(t.header.size(), false);
  for (double temperature : log_grid(tmin, tmax, points)) {
    const GasEnvironment env(temperature, density, mass_amu * g.constants.amu);
    std::vector<std::string> row = {g.num(temperature)};
    for (double dx : widths)
      row.push_back(g.num(gamma_exact(SuperpositionGeometry(dx), env, scat, g.constants)));
    t.rows.push_back(std::move(row));
  }
  emit(g, out, t.render(g));
  return 0;
}

int cmd_table(const GlobalConfig& g, std::ostream& out, const std::vector<double>& gammas,
              const std::vector<double>& temperatures, const std::vector<double>& widths,
              double radius, double mass_amu) {
  GlobalConfig local = g;
  if (!g.precision_set) local.precision = 6;  // frozen table schema precision
  const auto rows = generate_table(gammas, temperatures, widths, Scatterer(radius), g.constants,
                                   mass_amu * g.constants.amu);
  Table t;
  t.header = {"gamma_hz", "temperature_k", "delta_x_m", "n_v_per_m3", "pressure_pa"};
  t.quoted = std::vector<bool>(t.header.size(), false);
  for (const auto& row : rows) {
    t.rows.push_back({local.num(row.gamma_target), local.num(row.temperature),
                      local.num(row.delta_x), local.num(row.number_density),
                      local.num(row.pressure)});
  }
  emit(local, out, t.render(local));
  return 0;
}

int cmd_path(const GlobalConfig& g, std::ostream& out, const std::string& kind, double amplitude,
             double tau, const std::vector<double>& temperatures, double density, double radius,
             int steps, double mass_amu) {
  if (kind != "sine" && kind != "constant" && kind != "both")
    throw std::invalid_argument("path: --kind must be sine, constant or both");
  if (temperatures.empty()) throw std::invalid_argument("path: temperature list must be nonempty");

  std::vector<GasEnvironment> envs;
  for (double temperature : temperatures)
    envs.emplace_back(temperature, density, mass_amu * g.constants.amu);
  const auto table = compare_paths(amplitude, tau, envs, Scatterer(radius), g.constants, steps);

  struct FilePayload {
    std::string name;
    std::string body;
  };
  std::vector<FilePayload> files;
  for (const auto& pair : table) {
    auto body_for = [&](const DecoherenceHistory& h, const Trajectory& traj) {
      std::string s = "t_over_tau,delta_x_m,rate_hz,gamma_accumulated,coherence\n";
      for (std::size_t i = 0; i < h.times.size(); ++i) {
        s += g.num(h.times[i] / tau) + "," + g.num(delta_x_at(traj, h.times[i])) + "," +
             g.num(h.instantaneous_rate[i]) + "," + g.num(h.accumulated_exponent[i]) + "," +
             g.num(h.coherence[i]) + "\n";
      }
      return s;
    };
    const std::string suffix = "_T" + format_shortest(pair.temperature) + ".csv";
    if (kind == "sine" || kind == "both")
      files.push_back({"path_sine" + suffix,
                       body_for(pair.sine_path, Trajectory::sine(amplitude, tau))});
    if (kind == "constant" || kind == "both")
      files.push_back({"path_constant" + suffix,
                       body_for(pair.constant_path, Trajectory::constant(amplitude, tau))});
  }

  if (g.out_path == "-") {
    for (const auto& f : files) out << "# file: " << f.name << "\n" << f.body;
    return 0;
  }
  const std::filesystem::path dir(g.out_path);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir))
    throw std::invalid_argument("path: --out must name a writable directory: " + g.out_path);
  for (const auto& f : files) {
    std::ofstream file(dir / f.name, std::ios::binary);
    if (!file) throw std::invalid_argument("path: cannot open " + (dir / f.name).string());
    file << f.body;
  }
  return 0;
}

int cmd_oracle(const GlobalConfig& g, std::ostream& out, const PointOptions& p, double dx,
               const oracle::QuadratureSpec& spec) {
  spec.validate();
  const auto env = p.environment(g.constants);
  const Scatterer scat(p.radius);
  const SuperpositionGeometry geom(dx);

  const double analytic = gamma_exact(geom, env, scat, g.constants);
  const auto numeric = oracle::gamma_numeric(geom, env, scat, g.constants, spec);
  const double rel_error =
      analytic != 0.0 ? std::abs(numeric.value - analytic) / std::abs(analytic)
                      : std::abs(numeric.value);

  std::string payload = "{\"analytic\":" + g.num(analytic) +
                        ",\"numeric\":" + g.num(numeric.value) +
                        ",\"rel_error\":" + g.num(rel_error) +
                        ",\"subdivisions\":" + std::to_string(numeric.subdivisions) + "}\n";
  emit(g, out, payload);
  return rel_error > spec.rel_tol ? 2 : 0;
}

int cmd_dawson(const GlobalConfig& g, std::ostream& out, const std::vector<double>& xs) {
  if (xs.empty()) throw std::invalid_argument("dawson: need at least one --x value");
  for (double x : xs)
    if (!std::isfinite(x)) throw std::invalid_argument("dawson: arguments must be finite");
  Table t;
  t.header = {"x", "dawson", "branch"};
  t.quoted = {false, false, true};
  for (double x : xs) {
    const auto e = dawson_eval(x);
    t.rows.push_back({g.num(e.x), g.num(e.value), to_string(e.branch)});
  }
  emit(g, out, t.render(g));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"collisional decoherence rates for spatial superpositions in dilute gas"};
  app.require_subcommand(1);

  GlobalConfig g;
  app.add_option("--constants", g.constants_path,
                 "JSON file overriding physical constants (hbar, k_B, amu)");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  auto* prec = app.add_option("--precision", g.precision, "significant digits in numeric output")
                   ->check(CLI::Range(3, 17))
                   ->capture_default_str();
  app.add_option("--out", g.out_path, "output file (or directory for `path`), - for stdout")
      ->capture_default_str();

  // rate
  auto* rate = app.add_subcommand("rate", "all rate models at one parameter point");
  PointOptions rate_p;
  rate_p.add_to(rate);
  double rate_dx = 0.0;
  rate->add_option("--dx", rate_dx, "superposition width, m")->required();

  // compare
  auto* compare = app.add_subcommand("compare", "temperature sweep of every model at fixed width");
  double cmp_tmin = 1e-16, cmp_tmax = 1e-4, cmp_density = 1e8, cmp_radius = 4e-7, cmp_dx = 1e-5,
         cmp_mass = kAirMolecularMassAmu;
  int cmp_points = 121;
  compare->add_option("--tmin", cmp_tmin, "lowest temperature, K")->capture_default_str();
  compare->add_option("--tmax", cmp_tmax, "highest temperature, K")->capture_default_str();
  compare->add_option("--points", cmp_points, "grid points")->capture_default_str();
  compare->add_option("--density", cmp_density, "gas number density, m^-3")->capture_default_str();
  compare->add_option("--radius", cmp_radius, "scatterer radius, m")->capture_default_str();
  compare->add_option("--dx", cmp_dx, "superposition width, m")->capture_default_str();
  compare->add_option("--mass-amu", cmp_mass, "molecular mass, a.m.u.")->capture_default_str();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "exact-rate temperature sweep, one column per width");
  std::vector<double> swp_dx = {1e-14, 1e-11, 1e-8, 1e-5};
  double swp_tmin = 1e-5, swp_tmax = 1e2, swp_density = 1e8, swp_radius = 4e-7,
         swp_mass = kAirMolecularMassAmu;
  int swp_points = 71;
  sweep->add_option("--dx", swp_dx, "superposition widths, m (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--tmin", swp_tmin, "lowest temperature, K")->capture_default_str();
  sweep->add_option("--tmax", swp_tmax, "highest temperature, K")->capture_default_str();
  sweep->add_option("--points", swp_points, "grid points")->capture_default_str();
  sweep->add_option("--density", swp_density, "gas number density, m^-3")->capture_default_str();
  sweep->add_option("--radius", swp_radius, "scatterer radius, m")->capture_default_str();
  sweep->add_option("--mass-amu", swp_mass, "molecular mass, a.m.u.")->capture_default_str();

  // table
  auto* table = app.add_subcommand("table", "pressure/density budgets for target rates");
  std::vector<double> tbl_gamma = kTableGammas;
  std::vector<double> tbl_temp = kTableTemperatures;
  std::vector<double> tbl_dx = kTableWidths;
  double tbl_radius = kTableRadius, tbl_mass = kAirMolecularMassAmu;
  table->add_option("--gamma", tbl_gamma, "target rates, Hz")->delimiter(',')->capture_default_str();
  table->add_option("--temp", tbl_temp, "temperatures, K")->delimiter(',')->capture_default_str();
  table->add_option("--dx", tbl_dx, "superposition widths, m")->delimiter(',')->capture_default_str();
  table->add_option("--radius", tbl_radius, "scatterer radius, m")->capture_default_str();
  table->add_option("--mass-amu", tbl_mass, "molecular mass, a.m.u.")->capture_default_str();

  // path
  auto* path = app.add_subcommand("path", "time-dependent runs along superposition trajectories");
  std::string pth_kind = "both";
  double pth_amplitude = 1e-8, pth_tau = 1.0, pth_density = 1e8, pth_radius = 4e-7,
         pth_mass = kAirMolecularMassAmu;
  std::vector<double> pth_temp = {1.0, 1e-2, 1e-4};
  int pth_steps = 256;
  path->add_option("--kind", pth_kind, "trajectory kind: sine, constant or both")
      ->capture_default_str();
  path->add_option("--amplitude", pth_amplitude, "maximal separation A, m")->capture_default_str();
  path->add_option("--tau", pth_tau, "total experiment time, s")->capture_default_str();
  path->add_option("--temp", pth_temp, "temperatures, K (one file pair each)")
      ->delimiter(',')
      ->capture_default_str();
  path->add_option("--density", pth_density, "gas number density, m^-3")->capture_default_str();
  path->add_option("--radius", pth_radius, "scatterer radius, m")->capture_default_str();
  path->add_option("--steps", pth_steps, "time-grid intervals")->capture_default_str();
  path->add_option("--mass-amu", pth_mass, "molecular mass, a.m.u.")->capture_default_str();

  // oracle
  auto* orc = app.add_subcommand("oracle", "brute-force quadrature check of the exact rate");
  PointOptions orc_p;
  orc_p.add_to(orc);
  double orc_dx = 0.0;
  oracle::QuadratureSpec orc_spec;
  orc->add_option("--dx", orc_dx, "superposition width, m")->required();
  orc->add_option("--rel-tol", orc_spec.rel_tol, "relative tolerance")->capture_default_str();
  orc->add_option("--abs-tol", orc_spec.abs_tol, "absolute tolerance, Hz")->capture_default_str();
  orc->add_option("--max-subdiv", orc_spec.max_subdivisions, "subdivision budget")
      ->capture_default_str();
  orc->add_option("--cutoff-sigmas", orc_spec.momentum_cutoff_sigmas,
                  "momentum cutoff in units of sqrt(m k_B T)")
      ->capture_default_str();

  // dawson
  auto* daw = app.add_subcommand("dawson", "evaluate the Dawson integral");
  std::vector<double> daw_x;
  daw->add_option("--x", daw_x, "arguments (comma separated)")->delimiter(',')->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }
  g.precision_set = prec->count() > 0;

  try {
    g.constants = load_constants(g.constants_path);
    if (rate->parsed()) return cmd_rate(g, out, rate_p, rate_dx);
    if (compare->parsed())
      return cmd_compare(g, out, cmp_tmin, cmp_tmax, cmp_points, cmp_density, cmp_radius, cmp_dx,
                         cmp_mass);
    if (sweep->parsed())
      return cmd_sweep(g, out, swp_dx, swp_tmin, swp_tmax, swp_points, swp_density, swp_radius,
                       swp_mass);
    if (table->parsed())
      return cmd_table(g, out, tbl_gamma, tbl_temp, tbl_dx, tbl_radius, tbl_mass);
    if (path->parsed())
      return cmd_path(g, out, pth_kind, pth_amplitude, pth_tau, pth_temp, pth_density, pth_radius,
                      pth_steps, pth_mass);
    if (orc->parsed()) return cmd_oracle(g, out, orc_p, orc_dx, orc_spec);
    if (daw->parsed()) return cmd_dawson(g, out, daw_x);
  } catch (const quad::ConvergenceError& e) {
    err << "numerical failure: " << e.what() << " (estimate " << e.estimate() << ", error bound "
        << e.error_bound() << ", " << e.panels() << " panels)\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "validation error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace decogas::cli
