#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "decogas/constants.hpp"
#include "decogas/dawson.hpp"
#include "decogas/environment.hpp"

namespace decogas {

/// Wavelength regime of a parameter point. Advisory metadata only; numeric
/// paths never branch on it.
enum class Regime { LWL, crossover, SWL };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::LWL: return "LWL";
    case Regime::crossover: return "crossover";
    case Regime::SWL: return "SWL";
  }
  return "?";
}

inline constexpr double kRegimeLwlEdge = 0.1;
inline constexpr double kRegimeSwlEdge = 10.0;

/// All rate models evaluated at one parameter point.
struct RateBreakdown {
  double gamma_exact;      // Hz
  double gamma_lwl;        // Hz
  double gamma_swl;        // Hz
  double gamma_int_min;    // Hz
  double gamma_int_tanh;   // Hz
  double gamma_mlwl;       // Hz
  double dawson_argument;  // dimensionless
  Regime regime;
};

/// Thermal de Broglie wavelength 2 pi hbar / sqrt(2 pi m k_B T).
inline double lambda_thermal(const GasEnvironment& env, const PhysicalConstants& c) {
  return 2.0 * std::numbers::pi * c.hbar /
         std::sqrt(2.0 * std::numbers::pi * env.molecular_mass * c.k_B * env.temperature);
}

/// Argument of the Dawson function in the exact rate:
/// y = dx sqrt(2 m k_B T) / hbar.
inline double dawson_argument(const SuperpositionGeometry& geom, const GasEnvironment& env,
                              const PhysicalConstants& c) {
  return geom.delta_x * std::sqrt(2.0 * env.molecular_mass * c.k_B * env.temperature) / c.hbar;
}

/// Short-wavelength (saturated) rate 2 n_v R^2 sqrt(2 pi k_B T / m).
inline double gamma_swl(const GasEnvironment& env, const Scatterer& scat,
                        const PhysicalConstants& c) {
  return 2.0 * env.number_density * scat.radius * scat.radius *
         std::sqrt(2.0 * std::numbers::pi * c.k_B * env.temperature / env.molecular_mass);
}

/// Long-wavelength rate (8 n_v R^2 / 3 hbar^2) sqrt(2 pi m) (k_B T)^(3/2) dx^2.
inline double gamma_lwl(const SuperpositionGeometry& geom, const GasEnvironment& env,
                        const Scatterer& scat, const PhysicalConstants& c) {
  const double kT = c.k_B * env.temperature;
  return 8.0 * env.number_density * scat.radius * scat.radius / (3.0 * c.hbar * c.hbar) *
         std::sqrt(2.0 * std::numbers::pi * env.molecular_mass) * kT * std::sqrt(kT) *
         geom.delta_x * geom.delta_x;
}

namespace detail {

// 1 - D(y)/y, switching to the series (2/3)y^2 - (4/15)y^4 below y = 1e-4
// where the direct subtraction cancels catastrophically.
inline double one_minus_dawson_ratio(double y) {
  if (y == 0.0) return 0.0;
  if (y < 1e-4) return y * y * (2.0 / 3.0 - y * y * (4.0 / 15.0));
  return 1.0 - dawson(y) / y;
}

}  // namespace detail

/// Exact rate, evaluated in the factored form gamma_swl * (1 - D(y)/y).
inline double gamma_exact(const SuperpositionGeometry& geom, const GasEnvironment& env,
                          const Scatterer& scat, const PhysicalConstants& c) {
  if (geom.delta_x == 0.0) return 0.0;
  return gamma_swl(env, scat, c) * detail::one_minus_dawson_ratio(dawson_argument(geom, env, c));
}

/// Interpolation by pointwise minimum of the two limits.
inline double gamma_int_min(const SuperpositionGeometry& geom, const GasEnvironment& env,
                            const Scatterer& scat, const PhysicalConstants& c) {
  return std::min(gamma_swl(env, scat, c), gamma_lwl(geom, env, scat, c));
}

/// Smooth interpolation gamma_swl * tanh(gamma_lwl / gamma_swl).
inline double gamma_int_tanh(const SuperpositionGeometry& geom, const GasEnvironment& env,
                             const Scatterer& scat, const PhysicalConstants& c) {
  const double swl = gamma_swl(env, scat, c);
  if (swl == 0.0) return 0.0;
  return swl * std::tanh(gamma_lwl(geom, env, scat, c) / swl);
}

/// Modified LWL: the LWL with dx replaced by the thermal wavelength,
/// (16 pi / 3) n_v R^2 sqrt(2 pi k_B T / m) = (8 pi / 3) gamma_swl.
inline double gamma_mlwl(const GasEnvironment& env, const Scatterer& scat,
                         const PhysicalConstants& c) {
  return 16.0 * std::numbers::pi / 3.0 * env.number_density * scat.radius * scat.radius *
         std::sqrt(2.0 * std::numbers::pi * c.k_B * env.temperature / env.molecular_mass);
}

inline Regime regime_classify(double y) {
  if (!(y >= 0.0)) throw std::domain_error("regime_classify: y must be nonnegative");
  if (y < kRegimeLwlEdge) return Regime::LWL;
  if (y > kRegimeSwlEdge) return Regime::SWL;
  return Regime::crossover;
}

inline RateBreakdown breakdown(const SuperpositionGeometry& geom, const GasEnvironment& env,
                               const Scatterer& scat, const PhysicalConstants& c) {
  RateBreakdown b{};
  b.dawson_argument = dawson_argument(geom, env, c);
  b.gamma_swl = gamma_swl(env, scat, c);
  b.gamma_lwl = gamma_lwl(geom, env, scat, c);
  b.gamma_exact = std::min(gamma_exact(geom, env, scat, c), b.gamma_swl);
  b.gamma_int_min = std::min(b.gamma_swl, b.gamma_lwl);
  b.gamma_int_tanh = gamma_int_tanh(geom, env, scat, c);
  b.gamma_mlwl = gamma_mlwl(env, scat, c);
  b.regime = regime_classify(b.dawson_argument);
  return b;
}

}  // namespace decogas
