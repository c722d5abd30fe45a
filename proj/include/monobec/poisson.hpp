#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "monobec/grid.hpp"
#include "monobec/quadrature.hpp"

namespace monobec {

/// Monopolar self-potential of a spherical density:
///   V(r) = -2 [ (1/r) int_0^r 4 pi s^2 rho(s) ds + int_r^rmax 4 pi s rho(s) ds ],
/// the unique solution of Lap V = 8 pi rho that is regular at the origin and
/// vanishes at infinity (density assumed supported inside the grid).
///
/// Density must be non-negative; values in [-neg_tol, 0) are treated as
/// quadrature noise and clamped, anything below -neg_tol is rejected.
inline RadialField poisson_gravity(const RadialField& density,
                                   double neg_tol = 1e-12) {
  const std::size_t n = density.size();
  const double h = density.grid.h();
  const double fourpi = 4.0 * std::numbers::pi;

  std::vector<double> rho(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = density.values[i];
    if (v < -neg_tol)
      throw std::invalid_argument("poisson_gravity: negative density");
    rho[i] = v < 0.0 ? 0.0 : v;
  }

  std::vector<double> w2(n), w1(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = density.grid.r(i);
    w2[i] = fourpi * r * r * rho[i];
    w1[i] = fourpi * r * rho[i];
  }
  const std::vector<double> mass = cumulative_integral(w2, h);   // M(r)
  const std::vector<double> outer = cumulative_integral(w1, h);  // int_0^r 4 pi s rho
  const double outer_total = outer[n - 1];

  RadialField v(density.grid);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = density.grid.r(i);
    const double shell = outer_total - outer[i];
    if (i == 0) {
      v.values[0] = -2.0 * outer_total;  // M(r)/r -> 0 at the origin
    } else {
      v.values[i] = -2.0 * (mass[i] / r + shell);
    }
  }
  return v;
}

}  // namespace monobec
