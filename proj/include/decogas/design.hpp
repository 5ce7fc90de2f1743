#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "decogas/rates.hpp"

namespace decogas {

/// One inverse-design solution: the largest gas number density (and pressure)
/// compatible with a target rate at the given temperature and width.
struct DesignRow {
  double gamma_target;    // Hz
  double temperature;     // K
  double delta_x;         // m
  double number_density;  // m^-3
  double pressure;        // Pa
};

/// Solves gamma_exact(n_v) = gamma_target for n_v. The rate is linear in the
/// number density, so the inverse is a single division by the unit-density
/// rate.
inline double solve_number_density(double gamma_target, const SuperpositionGeometry& geom,
                                   const GasEnvironment& env_template, const Scatterer& scat,
                                   const PhysicalConstants& c) {
  if (!(gamma_target > 0.0) || !std::isfinite(gamma_target))
    throw std::invalid_argument("solve_number_density: gamma_target must be positive and finite");
  if (geom.delta_x == 0.0)
    throw std::domain_error(
        "solve_number_density: infeasible, rate vanishes identically at delta_x = 0");
  const GasEnvironment unit(env_template.temperature, 1.0, env_template.molecular_mass);
  return gamma_target / gamma_exact(geom, unit, scat, c);
}

/// Ideal gas law P = n_v k_B T.
inline double pressure_from_density(double n_v, double temperature, const PhysicalConstants& c) {
  if (!(n_v >= 0.0) || !std::isfinite(n_v))
    throw std::invalid_argument("pressure_from_density: n_v must be nonnegative and finite");
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw std::invalid_argument("pressure_from_density: temperature must be positive and finite");
  return n_v * c.k_B * temperature;
}

// Default grids reproducing the reference design table.
inline const std::vector<double> kTableGammas = {0.01, 0.05, 0.1};          // Hz
inline const std::vector<double> kTableTemperatures = {1e-3, 1.0, 4.0};     // K
inline const std::vector<double> kTableWidths = {1e-14, 1e-11, 1e-8, 1e-5}; // m
inline constexpr double kTableRadius = 400e-9;                              // m

/// Cartesian product of the lists, rows ordered (gamma, T, delta_x).
inline std::vector<DesignRow> generate_table(const std::vector<double>& gammas,
                                             const std::vector<double>& temperatures,
                                             const std::vector<double>& widths,
                                             const Scatterer& scat, const PhysicalConstants& c,
                                             double molecular_mass) {
  if (gammas.empty() || temperatures.empty() || widths.empty())
    throw std::invalid_argument("generate_table: all lists must be nonempty");
  std::vector<DesignRow> rows;
  rows.reserve(gammas.size() * temperatures.size() * widths.size());
  for (double gamma : gammas) {
    for (double temperature : temperatures) {
      const GasEnvironment env(temperature, 0.0, molecular_mass);
      for (double dx : widths) {
        const double n_v = solve_number_density(gamma, SuperpositionGeometry(dx), env, scat, c);
        rows.push_back({gamma, temperature, dx, n_v, pressure_from_density(n_v, temperature, c)});
      }
    }
  }
  return rows;
}

}  // namespace decogas
