#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "iongate/errors.hpp"

namespace iongate {

namespace detail {

// Gauss-Kronrod 15-point pair (7-point Gauss embedded), nodes on [-1, 1].
inline constexpr double gk15_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double gk15_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double g7_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
std::pair<double, double> gk15_panel(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double kronrod = 0.0, gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double x = h * gk15_nodes[i];
    const double fv = (i == 7) ? f(c) : f(c - x) + f(c + x);
    kronrod += gk15_weights[i] * fv;
    if (i % 2 == 1) gauss += g7_weights[i / 2] * fv;
  }
  kronrod *= h;
  gauss *= h;
  return {kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b] by interval bisection.
/// Stops when the summed error estimate satisfies either tolerance.
template <class F>
double integrate_adaptive(const F& f, double a, double b, double rel_tol,
                          double abs_tol = 0.0, int max_intervals = 4096) {
  struct Interval {
    double a, b, value, error;
  };
  // Fixed-capacity worklist; the worst interval is bisected each round.
  static thread_local std::vector<Interval> stack;
  stack.clear();
  auto [v0, e0] = detail::gk15_panel(f, a, b);
  stack.push_back({a, b, v0, e0});
  double total = v0, total_err = e0;
  int used = 1;
  while (total_err > abs_tol && total_err > rel_tol * std::abs(total)) {
    if (used >= max_intervals) {
      throw ConvergenceError("adaptive quadrature did not converge",
                             total_err / std::max(std::abs(total), 1e-300));
    }
    // pick worst interval
    std::size_t worst = 0;
    for (std::size_t i = 1; i < stack.size(); ++i) {
      if (stack[i].error > stack[worst].error) worst = i;
    }
    Interval iv = stack[worst];
    const double mid = 0.5 * (iv.a + iv.b);
    auto [vl, el] = detail::gk15_panel(f, iv.a, mid);
    auto [vr, er] = detail::gk15_panel(f, mid, iv.b);
    total += vl + vr - iv.value;
    total_err += el + er - iv.error;
    stack[worst] = {iv.a, mid, vl, el};
    stack.push_back({mid, iv.b, vr, er});
    ++used;
  }
  return total;
}

/// Integral of envelope(u) * cos(k u) over [0, umax] by fixed panels of at
/// most half an oscillation, one GK15 rule per panel. The envelope must be
/// smooth; no adaptivity is needed since every panel is non-oscillatory.
template <class F>
double integrate_oscillatory_cosine(const F& envelope, double k, double umax) {
  const double kk = std::abs(k);
  int panels = 16;
  if (kk > 0.0) {
    const double by_period = kk * umax / 3.14159265358979323846;
    if (by_period > panels) panels = static_cast<int>(by_period) + 1;
  }
  const double h = umax / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = i * h, b = a + h;
    auto [v, e] = detail::gk15_panel(
        [&](double u) { return envelope(u) * std::cos(k * u); }, a, b);
    sum += v;
  }
  return sum;
}

}  // namespace iongate
