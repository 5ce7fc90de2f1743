#pragma once

#include <cmath>
#include <stdexcept>

#include "decogas/constants.hpp"

namespace decogas {

/// Ambient gas state: temperature (K), number density (m^-3) and the mass of
/// one gas molecule (kg). Pressure is always derived via the ideal gas law.
struct GasEnvironment {
  double temperature;      // K
  double number_density;   // m^-3
  double molecular_mass;   // kg

  GasEnvironment(double temperature_k, double density_per_m3, double mass_kg)
      : temperature(temperature_k),
        number_density(density_per_m3),
        molecular_mass(mass_kg) {
    if (!(temperature > 0.0) || !std::isfinite(temperature))
      throw std::invalid_argument("GasEnvironment: temperature must be positive and finite");
    if (!(number_density >= 0.0) || !std::isfinite(number_density))
      throw std::invalid_argument("GasEnvironment: number_density must be nonnegative and finite");
    if (!(molecular_mass > 0.0) || !std::isfinite(molecular_mass))
      throw std::invalid_argument("GasEnvironment: molecular_mass must be positive and finite");
  }

  static GasEnvironment from_pressure(double temperature_k, double pressure_pa,
                                      double mass_kg, const PhysicalConstants& c) {
    if (!(pressure_pa >= 0.0) || !std::isfinite(pressure_pa))
      throw std::invalid_argument("GasEnvironment: pressure must be nonnegative and finite");
    return GasEnvironment(temperature_k, pressure_pa / (c.k_B * temperature_k), mass_kg);
  }

  double pressure(const PhysicalConstants& c) const {
    return number_density * c.k_B * temperature;
  }
};

/// Sphere held in superposition; only its geometric cross section matters.
struct Scatterer {
  double radius;  // m

  explicit Scatterer(double radius_m) : radius(radius_m) {
    if (!(radius > 0.0) || !std::isfinite(radius))
      throw std::invalid_argument("Scatterer: radius must be positive and finite");
  }
};

/// Spatial separation of the two superposition arms.
struct SuperpositionGeometry {
  double delta_x;  // m

  explicit SuperpositionGeometry(double delta_x_m) : delta_x(delta_x_m) {
    if (!(delta_x >= 0.0) || !std::isfinite(delta_x))
      throw std::invalid_argument("SuperpositionGeometry: delta_x must be nonnegative and finite");
  }
};

}  // namespace decogas
