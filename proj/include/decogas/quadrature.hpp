#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace decogas::quad {

// Gauss(7)/Kronrod(15) abscissae and weights on [-1,1]. Nodes are ordered so
// that even indices carry the embedded Gauss rule.
inline constexpr double kNode[8] = {
    0.0000000000000000000000000,
    0.2077849550078984676006894,
    0.4058451513773971669066064,
    0.5860872354676911302941448,
    0.7415311855993944398638648,
    0.8648644233597690727897128,
    0.9491079123427585245261897,
    0.9914553711208126392068547};

inline constexpr double kWeightK15[8] = {
    0.2094821410847278280129992,
    0.2044329400752988924141620,
    0.1903505780647854099132564,
    0.1690047266392679028265834,
    0.1406532597155259187451896,
    0.1047900103222501838398763,
    0.0630920926299785532907007,
    0.0229353220105292249637320};

inline constexpr double kWeightG7[8] = {
    0.4179591836734693877551020, 0.0,
    0.3818300505051189449503698, 0.0,
    0.2797053914892766679014678, 0.0,
    0.1294849661688696932706114, 0.0};

struct Options {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  int max_depth = 40;
  long max_panels = 200000;   // total rule evaluations allowed
  long initial_splits = 1;    // uniform seed panels before refinement
};

/// Thrown when the requested tolerance was not reached within the panel
/// budget. Carries the last estimate (its magnitude, for complex integrands)
/// and the achieved error bound.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error_bound, long panels)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound), panels_(panels) {}

  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }
  long panels() const { return panels_; }

 private:
  double estimate_;
  double error_bound_;
  long panels_;
};

template <typename T>
struct Result {
  T value{};
  double error_bound = 0.0;
  long panels = 0;
};

namespace detail {

template <typename T>
double magnitude(const T& v) {
  using std::abs;
  return abs(v);
}

}  // namespace detail

/// One G7/K15 panel: returns the K15 estimate and |K15 - G7| as a
/// (conservative) error bound.
template <typename F, typename T = std::invoke_result_t<F&, double>>
std::pair<T, double> gauss_kronrod_panel(F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(mid);
  T k15 = kWeightK15[0] * fc;
  T g7 = kWeightG7[0] * fc;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kNode[i];
    const T s = f(mid + dx) + f(mid - dx);
    k15 += kWeightK15[i] * s;
    if (kWeightG7[i] != 0.0) g7 += kWeightG7[i] * s;
  }
  k15 *= half;
  g7 *= half;
  return {k15, detail::magnitude<T>(k15 - g7)};
}

/// Adaptive bisection driven by the embedded error estimate. Each panel gets
/// an error budget proportional to its length; if the achieved total misses
/// max(abs_tol, rel_tol*|I|) the pass is restarted with the improved estimate
/// of |I| (the seed estimate can be far off for sharply peaked integrands).
/// Panels are visited depth-first left-to-right, so the accumulation order,
/// and therefore the result, is bitwise reproducible.
template <typename F, typename T = std::invoke_result_t<F&, double>>
Result<T> integrate(F&& f, double a, double b, const Options& opt = Options{}) {
  if (!(opt.rel_tol >= 0.0) || !(opt.abs_tol >= 0.0) || (opt.rel_tol == 0.0 && opt.abs_tol == 0.0))
    throw std::invalid_argument("quad::integrate: need rel_tol > 0 or abs_tol > 0");
  if (opt.max_depth < 1 || opt.initial_splits < 1 || opt.max_panels < opt.initial_splits)
    throw std::invalid_argument("quad::integrate: invalid budget options");
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("quad::integrate: bounds must be finite");

  if (a == b) return {T{}, 0.0, 0};

  const double span = b - a;
  const long splits = opt.initial_splits;

  struct Walker {
    F& f;
    const Options& opt;
    double span;
    double tol_total = 0.0;
    T sum{};
    double err = 0.0;
    long panels = 0;
    bool budget_hit = false;

    void visit(double x0, double x1, int depth) {
      auto [v, e] = gauss_kronrod_panel<F, T>(f, x0, x1);
      ++panels;
      const bool can_refine = depth < opt.max_depth && panels + 1 < opt.max_panels && !budget_hit;
      if (e > tol_total * ((x1 - x0) / span) && can_refine) {
        const double xm = 0.5 * (x0 + x1);
        visit(x0, xm, depth + 1);
        visit(xm, x1, depth + 1);
        return;
      }
      if (e > tol_total * ((x1 - x0) / span)) budget_hit = true;
      sum += v;
      err += e;
    }
  };

  Walker w{f, opt, span};

  // Seed pass for the magnitude entering the relative tolerance.
  T rough{};
  long total_panels = 0;
  for (long k = 0; k < splits; ++k) {
    const double x0 = a + span * static_cast<double>(k) / static_cast<double>(splits);
    const double x1 = a + span * static_cast<double>(k + 1) / static_cast<double>(splits);
    auto [v, e] = gauss_kronrod_panel<F, T>(f, x0, x1);
    rough += v;
    ++total_panels;
  }

  for (int attempt = 0; attempt < 3; ++attempt) {
    w.sum = T{};
    w.err = 0.0;
    w.panels = 0;
    w.budget_hit = false;
    w.tol_total = std::max(opt.abs_tol, opt.rel_tol * detail::magnitude<T>(rough));
    for (long k = 0; k < splits; ++k) {
      const double x0 = a + span * static_cast<double>(k) / static_cast<double>(splits);
      const double x1 = a + span * static_cast<double>(k + 1) / static_cast<double>(splits);
      w.visit(x0, x1, 0);
    }
    total_panels += w.panels;
    const double target = std::max(opt.abs_tol, opt.rel_tol * detail::magnitude<T>(w.sum));
    if (w.err <= target) return {w.sum, w.err, total_panels};
    rough = w.sum;
  }

  throw ConvergenceError("quad::integrate: tolerance not reached within panel budget",
                         detail::magnitude<T>(w.sum), w.err, total_panels);
}

}  // namespace decogas::quad
