#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "decogas/constants.hpp"
#include "decogas/environment.hpp"
#include "decogas/quadrature.hpp"

namespace decogas::oracle {

/// Error-control knobs for the brute-force integrations.
struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;                  // Hz
  long max_subdivisions = 200000;
  double momentum_cutoff_sigmas = 12.0;  // upper bound in units of sqrt(m k_B T)

  void validate() const {
    if (!(rel_tol > 0.0) || !(rel_tol <= 1e-2))
      throw std::invalid_argument("QuadratureSpec: rel_tol must be in (0, 1e-2]");
    if (!(abs_tol >= 0.0) || !std::isfinite(abs_tol))
      throw std::invalid_argument("QuadratureSpec: abs_tol must be nonnegative and finite");
    if (max_subdivisions < 10)
      throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 10");
    if (!(momentum_cutoff_sigmas >= 8.0))
      throw std::invalid_argument("QuadratureSpec: momentum_cutoff_sigmas must be >= 8");
  }
};

/// Maxwell-Boltzmann distribution over momentum magnitude, normalized so that
/// the integral over q gives the number density.
struct MomentumDistribution {
  GasEnvironment env;
};

/// rho(q) = n_v 4 pi q^2 (2 pi m k_B T)^(-3/2) exp(-q^2 / (2 m k_B T)).
inline double rho_q(double q, const MomentumDistribution& dist, const PhysicalConstants& c) {
  if (!(q >= 0.0) || !std::isfinite(q))
    throw std::domain_error("rho_q: q must be nonnegative and finite");
  const double mkT = dist.env.molecular_mass * c.k_B * dist.env.temperature;
  return dist.env.number_density * 4.0 * std::numbers::pi *
         std::pow(2.0 * std::numbers::pi * mkT, -1.5) * q * q * std::exp(-q * q / (2.0 * mkT));
}

namespace detail {

// 1 - (sin u / u)^2 without cancellation near u = 0.
inline double one_minus_sinc_sq(double u) {
  u = std::abs(u);
  if (u < 0.05) {
    const double u2 = u * u;
    return u2 * (1.0 / 3.0 - u2 * (2.0 / 45.0 - u2 / 315.0));
  }
  const double sc = std::sin(u) / u;
  return 1.0 - sc * sc;
}

}  // namespace detail

/// Closed form of the full solid-angle integral over the interference term:
/// (hbar^2 pi R^2 / (q^2 dx^2)) sin^2(q dx / hbar).
inline double solid_angle_closed_form(double q, const SuperpositionGeometry& geom,
                                      const Scatterer& scat, const PhysicalConstants& c) {
  if (!(q > 0.0) || !std::isfinite(q))
    throw std::domain_error("solid_angle_closed_form: q must be positive and finite");
  if (!(geom.delta_x > 0.0))
    throw std::domain_error("solid_angle_closed_form: delta_x must be positive");
  const double s = std::sin(q * geom.delta_x / c.hbar);
  return c.hbar * c.hbar * std::numbers::pi * scat.radius * scat.radius * s * s /
         (q * q * geom.delta_x * geom.delta_x);
}

enum class SuperpositionAxis { x, y, z };

struct SolidAngleNumeric {
  double value;        // real part, m^2
  double imag_part;    // must vanish to tolerance
  double error_bound;
  long panels;
};

/// Direct numerical evaluation of
///   (1/4pi) \int dOmega dOmega' |f|^2 exp(i q (n - n') . (x - x') / hbar)
/// with the isotropic |f|^2 = R^2/4 and the separation along the chosen axis.
/// The primed and unprimed spheres factorize, so the 4-angle integral is the
/// product of two independently computed double integrals (no conjugation
/// shortcut: the imaginary part is an honest residual).
inline SolidAngleNumeric solid_angle_numeric(double q, const SuperpositionGeometry& geom,
                                             const Scatterer& scat, const PhysicalConstants& c,
                                             const QuadratureSpec& spec,
                                             SuperpositionAxis axis = SuperpositionAxis::x) {
  spec.validate();
  if (!(q > 0.0) || !std::isfinite(q))
    throw std::domain_error("solid_angle_numeric: q must be positive and finite");
  if (!(geom.delta_x > 0.0))
    throw std::domain_error("solid_angle_numeric: delta_x must be positive");

  using cplx = std::complex<double>;
  const double a = q * geom.delta_x / c.hbar;
  const double pi = std::numbers::pi;

  auto project = [axis](double theta, double phi) {
    switch (axis) {
      case SuperpositionAxis::x: return std::sin(theta) * std::cos(phi);
      case SuperpositionAxis::y: return std::sin(theta) * std::sin(phi);
      case SuperpositionAxis::z: return std::cos(theta);
    }
    return 0.0;
  };

  long panels = 0;
  auto sphere_integral = [&](double sign) -> quad::Result<cplx> {
    quad::Options inner;
    inner.rel_tol = spec.rel_tol / 4.0;
    inner.abs_tol = 2.0 * pi * 1e-3 * spec.rel_tol;
    inner.initial_splits = std::clamp(static_cast<long>(a / 2.0), 1L, 512L);
    quad::Options outer;
    outer.rel_tol = spec.rel_tol / 4.0;
    outer.abs_tol = 4.0 * pi * 1e-3 * spec.rel_tol;
    outer.initial_splits = std::clamp(static_cast<long>(a / 2.0), 1L, 512L);
    auto f_theta = [&](double theta) -> cplx {
      const auto inner_res = quad::integrate(
          [&](double phi) -> cplx {
            const double p = project(theta, phi);
            return std::exp(cplx(0.0, sign * a * p));
          },
          0.0, 2.0 * pi, inner);
      panels += inner_res.panels;
      return std::sin(theta) * inner_res.value;
    };
    auto res = quad::integrate(f_theta, 0.0, pi, outer);
    panels += res.panels;
    return res;
  };

  const auto plus = sphere_integral(+1.0);
  const auto minus = sphere_integral(-1.0);
  const double scale = scat.radius * scat.radius / 4.0 / (4.0 * pi);
  const cplx product = scale * plus.value * minus.value;
  const double err = scale * (std::abs(plus.value) * minus.error_bound +
                              std::abs(minus.value) * plus.error_bound +
                              plus.error_bound * minus.error_bound);
  return {product.real(), product.imag(), err, panels};
}

struct RateQuadrature {
  double value;        // Hz
  double error_bound;  // Hz
  long subdivisions;
};

/// Brute-force rate: adaptive quadrature of
///   \int_0^cutoff dq rho(q) (q/m) [pi R^2 - closed-form interference term]
/// against which the closed-form rate is validated. The bracket is evaluated
/// as pi R^2 (1 - sinc^2(q dx / hbar)), which is nonnegative by construction.
/// Seeding scales with the number of sin^2 oscillations under the cutoff so
/// the error estimator cannot alias them.
inline RateQuadrature gamma_numeric(const SuperpositionGeometry& geom, const GasEnvironment& env,
                                    const Scatterer& scat, const PhysicalConstants& c,
                                    const QuadratureSpec& spec) {
  spec.validate();
  if (geom.delta_x == 0.0) return {0.0, 0.0, 0};

  const double pi = std::numbers::pi;
  const double mkT = env.molecular_mass * c.k_B * env.temperature;
  const double cutoff = spec.momentum_cutoff_sigmas * std::sqrt(mkT);
  const double norm = env.number_density * 4.0 * pi * std::pow(2.0 * pi * mkT, -1.5);
  const double area = pi * scat.radius * scat.radius;
  const double dx_over_hbar = geom.delta_x / c.hbar;

  auto integrand = [&](double q) {
    const double rho = norm * q * q * std::exp(-q * q / (2.0 * mkT));
    return rho * (q / env.molecular_mass) * area * detail::one_minus_sinc_sq(q * dx_over_hbar);
  };

  quad::Options opt;
  opt.rel_tol = spec.rel_tol;
  opt.abs_tol = spec.abs_tol;
  opt.max_panels = spec.max_subdivisions;
  const double u_max = cutoff * dx_over_hbar;
  opt.initial_splits = std::clamp(static_cast<long>(u_max / 2.0) + 1, 32L, 16384L);
  // A budget below the seeding need degrades into the error contract instead
  // of an option error.
  opt.initial_splits = std::min(opt.initial_splits, spec.max_subdivisions);

  const auto res = quad::integrate(integrand, 0.0, cutoff, opt);
  return {res.value, res.error_bound, res.panels};
}

}  // namespace decogas::oracle
