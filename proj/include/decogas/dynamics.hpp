#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "decogas/rates.hpp"

namespace decogas {

enum class TrajectoryKind { sine, constant, sampled };

/// Time-parametrized superposition width over [0, tau].
struct Trajectory {
  TrajectoryKind kind;
  double amplitude;  // maximal separation A, m
  double tau;        // total experiment time, s
  std::vector<std::pair<double, double>> samples;  // (t, delta_x), kind == sampled only

  static Trajectory sine(double amplitude, double tau) {
    check(amplitude, tau);
    return {TrajectoryKind::sine, amplitude, tau, {}};
  }

  static Trajectory constant(double amplitude, double tau) {
    check(amplitude, tau);
    return {TrajectoryKind::constant, amplitude, tau, {}};
  }

  static Trajectory sampled(double tau, std::vector<std::pair<double, double>> samples) {
    if (!(tau > 0.0) || !std::isfinite(tau))
      throw std::invalid_argument("Trajectory: tau must be positive and finite");
    if (samples.size() < 2)
      throw std::invalid_argument("Trajectory: sampled path needs at least two samples");
    if (samples.front().first != 0.0 || samples.back().first != tau)
      throw std::invalid_argument("Trajectory: samples must span [0, tau]");
    double peak = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (!(samples[i].second >= 0.0) || !std::isfinite(samples[i].second))
        throw std::invalid_argument("Trajectory: delta_x samples must be nonnegative and finite");
      if (i > 0 && !(samples[i].first > samples[i - 1].first))
        throw std::invalid_argument("Trajectory: sample times must be strictly increasing");
      peak = std::max(peak, samples[i].second);
    }
    return {TrajectoryKind::sampled, peak, tau, std::move(samples)};
  }

 private:
  static void check(double amplitude, double tau) {
    if (!(amplitude >= 0.0) || !std::isfinite(amplitude))
      throw std::invalid_argument("Trajectory: amplitude must be nonnegative and finite");
    if (!(tau > 0.0) || !std::isfinite(tau))
      throw std::invalid_argument("Trajectory: tau must be positive and finite");
  }
};

/// Superposition width at time t. Sine: A sin(pi t / tau); constant: A;
/// sampled: linear interpolation between the bracketing samples.
inline double delta_x_at(const Trajectory& traj, double t) {
  if (!(t >= 0.0) || !(t <= traj.tau))
    throw std::domain_error("delta_x_at: t outside [0, tau]");
  switch (traj.kind) {
    case TrajectoryKind::sine:
      if (t == traj.tau) return 0.0;  // sin(pi) rounds to 1.2e-16, the path closes exactly
      return traj.amplitude * std::sin(std::numbers::pi * t / traj.tau);
    case TrajectoryKind::constant:
      return traj.amplitude;
    case TrajectoryKind::sampled: {
      std::size_t hi = 1;
      while (hi + 1 < traj.samples.size() && traj.samples[hi].first < t) ++hi;
      const auto& [t0, x0] = traj.samples[hi - 1];
      const auto& [t1, x1] = traj.samples[hi];
      if (t <= t0) return x0;
      if (t >= t1) return x1;
      return x0 + (x1 - x0) * (t - t0) / (t1 - t0);
    }
  }
  return 0.0;
}

/// Per-step record of a decoherence run: instantaneous rate F(t), accumulated
/// exponent Gamma(t) (dimensionless) and coherence factor exp(-Gamma(t)).
struct DecoherenceHistory {
  std::vector<double> times;
  std::vector<double> instantaneous_rate;
  std::vector<double> accumulated_exponent;
  std::vector<double> coherence;
};

/// Integrates Gamma(t) = \int_0^t F(dx(t')) dt' on a uniform grid of `steps`
/// intervals by composite Simpson (each interval uses its midpoint sample),
/// so the exponent is available at every grid node.
inline DecoherenceHistory accumulated_gamma(const Trajectory& traj, const GasEnvironment& env,
                                            const Scatterer& scat, const PhysicalConstants& c,
                                            int steps) {
  if (steps < 16) throw std::invalid_argument("accumulated_gamma: steps must be >= 16");

  auto rate_at = [&](double t) {
    return gamma_exact(SuperpositionGeometry(delta_x_at(traj, t)), env, scat, c);
  };

  const double h = traj.tau / static_cast<double>(steps);
  DecoherenceHistory out;
  out.times.reserve(steps + 1);
  out.instantaneous_rate.reserve(steps + 1);
  out.accumulated_exponent.reserve(steps + 1);
  out.coherence.reserve(steps + 1);

  double gamma = 0.0;
  double f_left = rate_at(0.0);
  out.times.push_back(0.0);
  out.instantaneous_rate.push_back(f_left);
  out.accumulated_exponent.push_back(0.0);
  out.coherence.push_back(1.0);

  for (int k = 0; k < steps; ++k) {
    const double t0 = traj.tau * static_cast<double>(k) / static_cast<double>(steps);
    const double t1 = traj.tau * static_cast<double>(k + 1) / static_cast<double>(steps);
    const double f_mid = rate_at(0.5 * (t0 + t1));
    const double f_right = rate_at(t1);
    gamma += h / 6.0 * (f_left + 4.0 * f_mid + f_right);
    out.times.push_back(t1);
    out.instantaneous_rate.push_back(f_right);
    out.accumulated_exponent.push_back(gamma);
    out.coherence.push_back(std::exp(-gamma));
    f_left = f_right;
  }
  return out;
}

/// Spin-position density matrix summary for the balanced initial state:
/// diagonal populations stay 1/2, the off-diagonal magnitude decays as
/// (1/2) exp(-Gamma(t)).
struct SpinPositionState {
  double population_up;
  double population_down;
  double offdiag_magnitude;
};

inline SpinPositionState density_matrix_at(const DecoherenceHistory& history, std::size_t index) {
  if (index >= history.accumulated_exponent.size())
    throw std::out_of_range("density_matrix_at: index out of range");
  return {0.5, 0.5, 0.5 * std::exp(-history.accumulated_exponent[index])};
}

struct PathComparison {
  double temperature;  // K
  DecoherenceHistory sine_path;
  DecoherenceHistory constant_path;
};

/// Sine versus constant-width runs on a shared time grid, one pair per
/// environment.
inline std::vector<PathComparison> compare_paths(double amplitude, double tau,
                                                 const std::vector<GasEnvironment>& envs,
                                                 const Scatterer& scat,
                                                 const PhysicalConstants& c, int steps) {
  if (envs.empty()) throw std::invalid_argument("compare_paths: env list must be nonempty");
  const Trajectory sine = Trajectory::sine(amplitude, tau);
  const Trajectory constant = Trajectory::constant(amplitude, tau);
  std::vector<PathComparison> out;
  out.reserve(envs.size());
  for (const auto& env : envs) {
    out.push_back({env.temperature, accumulated_gamma(sine, env, scat, c, steps),
                   accumulated_gamma(constant, env, scat, c, steps)});
  }
  return out;
}

}  // namespace decogas
