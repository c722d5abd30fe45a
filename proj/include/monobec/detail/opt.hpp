#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "monobec/errors.hpp"

namespace monobec::detail {

/// Safeguarded secant iteration inside a sign-changing bracket.
/// Stops when |f| <= ftol or the bracket shrinks below xtol.
template <typename F>
double find_root(F&& f, double lo, double hi, double flo, double fhi,
                 double xtol, double ftol, int max_iter = 200) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0)
    throw bracket_error("find_root: endpoints do not bracket a sign change");
  double a = lo, b = hi, fa = flo, fb = fhi;
  for (int it = 0; it < max_iter; ++it) {
    double x;
    const double denom = fb - fa;
    if (denom != 0.0) {
      x = b - fb * (b - a) / denom;  // secant
      const double margin = 0.01 * (b - a);
      if (!(x > a + margin && x < b - margin)) x = 0.5 * (a + b);
    } else {
      x = 0.5 * (a + b);
    }
    const double fx = f(x);
    if (std::abs(fx) <= ftol) return x;
    if (fa * fx < 0.0) {
      b = x;
      fb = fx;
    } else {
      a = x;
      fa = fx;
    }
    if (b - a <= xtol) return std::abs(fa) < std::abs(fb) ? a : b;
  }
  return 0.5 * (a + b);
}

/// Expand [lo, hi] geometrically around itself until f changes sign.
/// Returns the bracket and endpoint values through the references.
template <typename F>
bool expand_bracket(F&& f, double& lo, double& hi, double& flo, double& fhi,
                    double lo_limit, double hi_limit, int max_expand = 60) {
  flo = f(lo);
  fhi = f(hi);
  for (int it = 0; it < max_expand; ++it) {
    if (flo * fhi <= 0.0) return true;
    const double width = hi - lo;
    if (lo > lo_limit) {
      lo = std::max(lo_limit, lo - width);
      flo = f(lo);
      if (flo * fhi <= 0.0) return true;
    }
    if (hi < hi_limit) {
      hi = std::min(hi_limit, hi + 2.0 * width);
      fhi = f(hi);
    }
    if (lo <= lo_limit && hi >= hi_limit && flo * fhi > 0.0) return false;
  }
  return flo * fhi <= 0.0;
}

struct MinimizeResult {
  double x = 0.0;
  double f = 0.0;
};

/// Golden-section minimization on [a, b] for a unimodal objective.
/// Stops when the interval is below xtol_rel * |x| or the objective spread
/// across the working points falls below ftol.
template <typename F>
MinimizeResult golden_minimize(F&& f, double a, double b, double xtol_rel,
                               double ftol, int max_iter = 200) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  double fa = f(a), fb = f(b);
  for (int it = 0; it < max_iter; ++it) {
    if (f1 < f2) {
      b = x2;
      fb = f2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      fa = f1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
    const double fmin = std::min(std::min(f1, f2), std::min(fa, fb));
    const double fmax = std::max(std::max(f1, f2), std::max(fa, fb));
    const double xmid = 0.5 * (a + b);
    if (b - a <= xtol_rel * (std::abs(xmid) + 1e-300) || fmax - fmin <= ftol) break;
  }
  return f1 < f2 ? MinimizeResult{x1, f1} : MinimizeResult{x2, f2};
}

}  // namespace monobec::detail
