#pragma once

#include <cmath>
#include <stdexcept>

#include "decogas/quadrature.hpp"

namespace decogas {

enum class DawsonBranch { series, core, asymptotic };

inline const char* to_string(DawsonBranch b) {
  switch (b) {
    case DawsonBranch::series: return "series";
    case DawsonBranch::core: return "core";
    case DawsonBranch::asymptotic: return "asymptotic";
  }
  return "?";
}

/// Evaluation record: argument, value and which branch produced it.
struct DawsonEval {
  double x;
  double value;
  DawsonBranch branch;
};

// Branch thresholds on |x|. At both edges the neighbouring methods agree to a
// few ulps (verified against the quadrature oracle).
inline constexpr double kDawsonSeriesEdge = 0.1;
inline constexpr double kDawsonAsymptoticEdge = 8.0;

/// Magnitude of the global extremum, |D(0.92414)|.
inline constexpr double kDawsonPeakBound = 0.5410443;

namespace detail {

// Maclaurin series D(x) = sum_n (-2)^n x^(2n+1) / (2n+1)!!, summed until the
// next term drops below 1e-17 relative.
inline double dawson_series(double ax) {
  double term = ax;
  double sum = ax;
  for (int n = 0; std::abs(term) > 1e-17 * std::abs(sum); ++n) {
    term *= -2.0 * ax * ax / static_cast<double>(2 * n + 3);
    sum += term;
  }
  return sum;
}

// Sampled-Gaussian representation (Rybicki):
//   D(x) = lim_{h->0} (1/sqrt(pi)) sum_{n odd} exp(-(x - n h)^2) / n.
// For finite h the sampling error is O(exp(-(pi/(2h))^2)); h = 1/4 puts it
// near 1e-17. Terms outside |x - n h| <= 6.5 are below 5e-19 and are skipped.
inline double dawson_core(double ax) {
  constexpr double h = 0.25;
  constexpr double window = 6.5;
  constexpr double inv_sqrt_pi = 0.56418958354775628695;
  long nlo = static_cast<long>(std::floor((ax - window) / h));
  long nhi = static_cast<long>(std::ceil((ax + window) / h));
  if (nlo % 2 == 0) ++nlo;
  double sum = 0.0;
  for (long n = nlo; n <= nhi; n += 2) {
    const double d = ax - static_cast<double>(n) * h;
    sum += std::exp(-d * d) / static_cast<double>(n);
  }
  return inv_sqrt_pi * sum;
}

// Large-argument expansion 2x D(x) ~ sum_n (2n-1)!!/(2x^2)^n, summed until
// 1e-17 relative or until the terms stop shrinking.
inline double dawson_asymptotic(double ax) {
  const double r = 1.0 / (2.0 * ax * ax);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0;; ++n) {
    const double next = term * static_cast<double>(2 * n + 1) * r;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum / (2.0 * ax);
}

}  // namespace detail

/// Dawson integral D(x) = exp(-x^2) \int_0^x exp(t^2) dt with the branch used.
/// Odd by construction: the magnitude is evaluated at |x| and the sign copied
/// from x, so dawson(-x) == -dawson(x) bitwise.
inline DawsonEval dawson_eval(double x) {
  if (!std::isfinite(x)) throw std::domain_error("dawson: argument must be finite");
  const double ax = std::abs(x);
  DawsonBranch branch;
  double value;
  if (ax < kDawsonSeriesEdge) {
    branch = DawsonBranch::series;
    value = detail::dawson_series(ax);
  } else if (ax <= kDawsonAsymptoticEdge) {
    branch = DawsonBranch::core;
    value = detail::dawson_core(ax);
  } else {
    branch = DawsonBranch::asymptotic;
    value = detail::dawson_asymptotic(ax);
  }
  return {x, std::copysign(value, x), branch};
}

inline double dawson(double x) { return dawson_eval(x).value; }

/// Independent check of dawson(): adaptive quadrature of the defining
/// integral. The substitution s = x - t turns it into
///   D(x) = \int_0^x exp(s^2 - 2 x s) ds,
/// whose integrand lies in (0, 1]; no exp(x^2) blow-up for large x. Used by
/// tests and the `oracle`/`dawson` CLI surfaces, never by dawson() itself.
inline double dawson_quadrature_oracle(double x, double rel_tol) {
  if (!std::isfinite(x)) throw std::domain_error("dawson_quadrature_oracle: argument must be finite");
  if (!(rel_tol > 0.0) || !(rel_tol < 1e-3))
    throw std::invalid_argument("dawson_quadrature_oracle: rel_tol must be in (0, 1e-3)");
  const double ax = std::abs(x);
  if (ax == 0.0) return std::copysign(0.0, x);
  // Past s ~ 50/x the integrand is below exp(-60); cut there for large x.
  const double upper = (ax > 8.0) ? std::min(ax, 50.0 / ax) : ax;
  quad::Options opt;
  opt.rel_tol = rel_tol;
  opt.initial_splits = 8;
  const auto res = quad::integrate([ax](double s) { return std::exp(s * s - 2.0 * ax * s); },
                                   0.0, upper, opt);
  return std::copysign(res.value, x);
}

}  // namespace decogas
