#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "monobec/grid.hpp"

namespace monobec {

/// Composite quadrature of samples f on a uniform grid with spacing h.
/// Simpson on an even number of intervals; a 3/8 block absorbs a leftover
/// odd interval count. Fourth order for smooth integrands.
inline double integrate(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (f[0] + f[1]);
  if (n == 3) return h / 3.0 * (f[0] + 4.0 * f[1] + f[2]);

  std::size_t m = n;              // nodes covered by the Simpson block
  double tail = 0.0;
  if ((n - 1) % 2 != 0) {
    // 3/8 rule over the last three intervals, Simpson over the rest.
    tail = 3.0 * h / 8.0 * (f[n - 4] + 3.0 * f[n - 3] + 3.0 * f[n - 2] + f[n - 1]);
    m = n - 3;
  }
  double s = f[0] + f[m - 1];
  for (std::size_t i = 1; i + 1 < m; ++i) s += (i % 2 ? 4.0 : 2.0) * f[i];
  return h / 3.0 * s + tail;
}

inline double integrate(const RadialField& f) { return integrate(f.values, f.grid.h()); }

/// Running integral I(r_i) = int_0^{r_i} f dr, fourth order.
/// Each interval integrates the cubic through its four nearest nodes.
inline std::vector<double> cumulative_integral(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  if (n < 4) {
    for (std::size_t i = 1; i < n; ++i)
      out[i] = out[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
    return out;
  }
  const double c = h / 24.0;
  out[1] = out[0] + c * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
  for (std::size_t i = 1; i + 2 < n; ++i)
    out[i + 1] = out[i] + c * (-f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2]);
  out[n - 1] = out[n - 2] +
               c * (f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] + 9.0 * f[n - 1]);
  return out;
}

inline std::vector<double> cumulative_integral(const RadialField& f) {
  return cumulative_integral(f.values, f.grid.h());
}

/// int f(r) 4 pi r^2 dr over the whole grid.
inline double volume_integral(const RadialField& f) {
  std::vector<double> w(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double r = f.grid.r(i);
    w[i] = f.values[i] * 4.0 * std::numbers::pi * r * r;
  }
  return integrate(w, f.grid.h());
}

/// Squared L2 norm of a wave function: int |psi|^2 4 pi r^2 dr.
inline double norm3d(const RadialField& psi) {
  std::vector<double> w(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double r = psi.grid.r(i);
    w[i] = psi.values[i] * psi.values[i] * 4.0 * std::numbers::pi * r * r;
  }
  return integrate(w, psi.grid.h());
}

/// Parity of a radial field under r -> -r, used to close stencils at the origin.
/// Regular s-wave fields (psi, W, V_g) are even; u = r psi is odd.
enum class OriginParity { even, odd };

/// First derivative by fourth-order centered differences. The origin end is
/// closed by parity; the outer end uses one-sided fourth-order stencils.
inline std::vector<double> derivative(const std::vector<double>& f, double h,
                                      OriginParity parity = OriginParity::even) {
  const std::size_t n = f.size();
  if (n < 6) throw std::invalid_argument("derivative: need at least 6 nodes");
  std::vector<double> d(n);
  const double sgn = (parity == OriginParity::even) ? 1.0 : -1.0;
  auto mirror = [&](long i) -> double {
    return i >= 0 ? f[static_cast<std::size_t>(i)]
                  : sgn * f[static_cast<std::size_t>(-i)];
  };
  for (std::size_t i = 0; i + 2 < n && i < 2; ++i) {
    const long k = static_cast<long>(i);
    d[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * mirror(k - 1) + mirror(k - 2)) /
           (12.0 * h);
  }
  if (parity == OriginParity::even) d[0] = 0.0;  // exact for even fields
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
  d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] +
              6.0 * f[n - 4] - f[n - 5]) / (12.0 * h);
  d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] -
              16.0 * f[n - 4] + 3.0 * f[n - 5]) / (12.0 * h);
  return d;
}

inline RadialField derivative(const RadialField& f,
                              OriginParity parity = OriginParity::even) {
  return RadialField(f.grid, derivative(f.values, f.grid.h(), parity));
}

/// Second derivative by fourth-order centered differences, parity-closed at the
/// origin. The last two nodes reuse the nearest interior stencil value; callers
/// that integrate against r^2 weights are insensitive to that corner.
inline std::vector<double> second_derivative(const std::vector<double>& f, double h,
                                             OriginParity parity = OriginParity::even) {
  const std::size_t n = f.size();
  if (n < 6) throw std::invalid_argument("second_derivative: need at least 6 nodes");
  std::vector<double> d(n);
  const double sgn = (parity == OriginParity::even) ? 1.0 : -1.0;
  auto mirror = [&](long i) -> double {
    return i >= 0 ? f[static_cast<std::size_t>(i)]
                  : sgn * f[static_cast<std::size_t>(-i)];
  };
  const double h2 = 12.0 * h * h;
  for (std::size_t i = 0; i < 2; ++i) {
    const long k = static_cast<long>(i);
    d[i] = (-f[i + 2] + 16.0 * f[i + 1] - 30.0 * f[i] + 16.0 * mirror(k - 1) -
            mirror(k - 2)) / h2;
  }
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = (-f[i + 2] + 16.0 * f[i + 1] - 30.0 * f[i] + 16.0 * f[i - 1] - f[i - 2]) / h2;
  d[n - 2] = d[n - 3];
  d[n - 1] = d[n - 3];
  return d;
}

}  // namespace monobec
