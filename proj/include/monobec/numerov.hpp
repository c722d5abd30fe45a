#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

#include "monobec/errors.hpp"
#include "monobec/grid.hpp"
#include "monobec/quadrature.hpp"
#include "monobec/types.hpp"

namespace monobec {

namespace detail {

/// Index up to which sign changes count as nodes. The last 2% of the grid is
/// excluded: a trajectory that has lost its decaying tail crosses there for
/// eigenvalue offsets far below any tolerance of interest.
inline std::size_t node_guard_index(std::size_t n) {
  return static_cast<std::size_t>(0.98 * static_cast<double>(n - 1));
}

}  // namespace detail

/// Count nodes of the radial function u (u(0)=0, u'' = (V - eps) u) obtained by
/// a Numerov march at trial eigenvalue eps. The march stops once |u| exceeds an
/// overflow guard; past the outer turning point no further crossings occur.
inline int numerov_count_nodes(const RadialField& v, double eps) {
  const std::size_t n = v.size();
  const double h = v.grid.h();
  const double h12 = h * h / 12.0;
  const std::size_t guard = detail::node_guard_index(n);
  constexpr double cap = 1e200;

  double um = 0.0;  // u_{i-1}
  double ui = h;    // u_i at node 1, scale free
  double fm = v[0] - eps;
  double fi = v[1] - eps;
  int nodes = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double fp = v[i + 1] - eps;
    const double up = (2.0 * ui * (1.0 + 5.0 * h12 * fi) - um * (1.0 - h12 * fm)) /
                      (1.0 - h12 * fp);
    if (i + 1 <= guard && ui != 0.0 && up * ui < 0.0) ++nodes;
    if (std::abs(up) > cap) break;
    um = ui;
    ui = up;
    fm = fi;
    fi = fp;
  }
  return nodes;
}

struct NumerovResult {
  RadialField u;  ///< radial function, normalized to int u^2 dr = 1/(4 pi)
  double eps = 0.0;
};

/// Ground state of -u'' + V(r) u = eps u with u(0) = 0 and a decaying tail,
/// located by bisection on the node count over [eps_lo, eps_hi].
///
/// The bracket must satisfy: no node at eps_lo, at least one node at eps_hi
/// (the nodeless/one-node boundary is the ground eigenvalue). Violations
/// throw bracket_error; "widen bracket" in the message means the upper edge
/// is still below the ground state.
inline NumerovResult numerov_ground_state(const RadialField& v, double eps_lo,
                                          double eps_hi, const Tolerances& tol = {}) {
  if (!(eps_lo < eps_hi))
    throw std::invalid_argument("numerov_ground_state: need eps_lo < eps_hi");
  if (numerov_count_nodes(v, eps_lo) > 0)
    throw bracket_error("numerov_ground_state: no nodeless eigenvalue in bracket "
                        "(lower edge already oscillates)");
  if (numerov_count_nodes(v, eps_hi) == 0)
    throw bracket_error("numerov_ground_state: widen bracket "
                        "(upper edge still nodeless)");

  double lo = eps_lo, hi = eps_hi;
  while (hi - lo > tol.eps_abs) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bisection exhausted the mantissa
    (numerov_count_nodes(v, mid) == 0 ? lo : hi) = mid;
  }

  // Final march on the nodeless side; keep the trajectory this time.
  const std::size_t n = v.size();
  const double h = v.grid.h();
  const double h12 = h * h / 12.0;
  const double eps = lo;
  std::vector<double> u(n, 0.0);
  u[1] = h;
  std::size_t stop = n - 1;
  {
    constexpr double cap = 1e200;
    double fm = v[0] - eps, fi = v[1] - eps;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double fp = v[i + 1] - eps;
      u[i + 1] = (2.0 * u[i] * (1.0 + 5.0 * h12 * fi) - u[i - 1] * (1.0 - h12 * fm)) /
                 (1.0 - h12 * fp);
      fm = fi;
      fi = fp;
      if (std::abs(u[i + 1]) > cap) {
        stop = i + 1;
        break;
      }
    }
  }

  // Cut the trajectory once the decaying tail has dropped six decades below
  // its peak, then graft a WKB-style tail so downstream quadratures never see
  // the re-growing admixture. A relative threshold, not the |u| minimum: the
  // minimum's position flutters with the admixture left by the eigenvalue
  // bisection, which would make repeated solves non-repeatable at the 1e-8
  // level. The local-minimum walk is the fallback for grids too short to
  // reach the threshold.
  std::size_t peak = 1;
  while (peak + 1 <= stop && std::abs(u[peak + 1]) >= std::abs(u[peak])) ++peak;
  const double graft_amp = 1e-6 * std::abs(u[peak]);
  std::size_t cut = peak;
  while (cut + 1 <= stop && std::abs(u[cut + 1]) <= std::abs(u[cut]) &&
         std::abs(u[cut]) > graft_amp)
    ++cut;
  if (cut + 1 < n) {
    double s = 0.0;
    double km = std::sqrt(std::max(v[cut] - eps, 1e-12));
    for (std::size_t i = cut + 1; i < n; ++i) {
      const double ki = std::sqrt(std::max(v[i] - eps, 1e-12));
      s += 0.5 * h * (km + ki);
      km = ki;
      u[i] = u[cut] * std::exp(-s);
    }
  }

  if (u[1] < 0.0)
    for (auto& x : u) x = -x;
  const double pi4 = 4.0 * std::numbers::pi;
  std::vector<double> u2(n);
  for (std::size_t i = 0; i < n; ++i) u2[i] = u[i] * u[i];
  const double scale = 1.0 / std::sqrt(pi4 * integrate(u2, h));
  for (auto& x : u) x *= scale;

  return NumerovResult{RadialField(v.grid, std::move(u)), eps};
}

}  // namespace monobec
