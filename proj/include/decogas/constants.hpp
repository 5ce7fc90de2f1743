#pragma once

#include <cmath>
#include <stdexcept>

namespace decogas {

/// Fundamental constants entering the rate formulas. Defaults are CODATA 2018;
/// override only through the constants file accepted by the CLI.
struct PhysicalConstants {
  double hbar = 1.054571817e-34;    // reduced Planck constant, J s
  double k_B = 1.380649e-23;        // Boltzmann constant, J/K
  double amu = 1.66053906660e-27;   // atomic mass unit, kg

  void validate() const {
    if (!(hbar > 0.0) || !std::isfinite(hbar))
      throw std::invalid_argument("PhysicalConstants: hbar must be positive and finite");
    if (!(k_B > 0.0) || !std::isfinite(k_B))
      throw std::invalid_argument("PhysicalConstants: k_B must be positive and finite");
    if (!(amu > 0.0) || !std::isfinite(amu))
      throw std::invalid_argument("PhysicalConstants: amu must be positive and finite");
  }

  static PhysicalConstants codata2018() { return PhysicalConstants{}; }
};

/// Mean molecular mass of air in atomic mass units.
inline constexpr double kAirMolecularMassAmu = 28.97;

}  // namespace decogas
