#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "monobec/errors.hpp"
#include "monobec/grid.hpp"
#include "monobec/numerov.hpp"
#include "monobec/poisson.hpp"
#include "monobec/quadrature.hpp"
#include "monobec/solution.hpp"
#include "monobec/types.hpp"
#include "monobec/variational.hpp"

namespace monobec {

namespace detail {

/// Gaussian width used to start the self-consistent cycle: the variational
/// minimum when one exists, otherwise the bare-trap (or unit) width.
inline double scf_seed_sigma(const ModelParams& p) {
  const auto pts = gaussian_stationary_points(p.c, p.g);
  for (auto it = pts.rbegin(); it != pts.rend(); ++it)
    if (it->kind == StationaryKind::minimum) return it->sigma;
  return p.g > 0.0 ? 1.0 / std::sqrt(p.g) : 1.0;
}

/// Eigenvalue bracket for the ground state of the frozen potential: nodeless
/// from below the potential minimum, oscillating at the outer potential value
/// (widened outward if either edge misclassifies).
inline void scf_bracket(const RadialField& v, double& lo, double& hi) {
  lo = *std::min_element(v.values.begin(), v.values.end()) - 1.0;
  hi = v[node_guard_index(v.size())];
  if (hi <= lo) hi = lo + 1.0;
  for (int k = 0; k < 60 && numerov_count_nodes(v, lo) > 0; ++k)
    lo -= std::max(1.0, hi - lo);
  for (int k = 0; k < 60 && numerov_count_nodes(v, hi) == 0; ++k)
    hi += std::max(1.0, hi - lo);
}

}  // namespace detail

/// Stationary state by self-consistent field iteration: freeze the density,
/// solve the resulting linear eigenproblem for its nodeless state, mix, and
/// repeat until neither the profile nor the eigenvalue moves. Linear mixing
/// starts at 1/2 and halves (floor 0.05) after two consecutive residual rises.
///
/// Only the lower branch is a stable fixed point of this map; upper-branch
/// requests are rejected. Requests beyond the fold fail to converge instead:
/// the iteration has no fixed point there and exhausts its budget.
inline RadialSolution solve_scf(const ModelParams& params,
                                Branch branch = Branch::lower,
                                const Tolerances& tol = {},
                                std::optional<RadialGrid> grid_opt = {},
                                std::optional<double> sigma_seed = {}) {
  if (!(std::isfinite(params.c) && std::isfinite(params.g)))
    throw std::invalid_argument("solve_scf: non-finite parameters");
  if (params.g < 0.0) throw std::invalid_argument("solve_scf: need g >= 0");
  if (branch != Branch::lower)
    throw std::invalid_argument(
        "solve_scf: only the lower branch is a stable fixed point of this iteration");

  const RadialGrid grid = grid_opt ? *grid_opt : default_grid(params);
  const double h = grid.h();
  const std::size_t n = grid.n;

  RadialField psi = gaussian_field(sigma_seed ? *sigma_seed : detail::scf_seed_sigma(params), grid);
  double alpha = 0.5;
  double eps_prev = 0.0;
  bool have_eps = false;
  int rise_run = 0;
  std::vector<double> residuals;

  for (int it = 0; it < tol.scf_max_iter; ++it) {
    RadialField rho(grid);
    for (std::size_t i = 0; i < n; ++i) rho[i] = psi[i] * psi[i];
    const RadialField vg = poisson_gravity(rho);
    RadialField v(grid);
    for (std::size_t i = 0; i < n; ++i) {
      const double r = grid.r(i);
      v[i] = params.g * params.g * r * r + 8.0 * std::numbers::pi * params.c * rho[i] +
             vg[i];
    }

    double lo = 0.0, hi = 0.0;
    detail::scf_bracket(v, lo, hi);
    const NumerovResult nr = numerov_ground_state(v, lo, hi, tol);

    RadialField psin(grid);
    for (std::size_t i = 1; i < n; ++i) psin[i] = nr.u[i] / grid.r(i);
    psin[0] = (8.0 * nr.u[1] - nr.u[2]) / (6.0 * h);

    RadialField diff(grid);
    for (std::size_t i = 0; i < n; ++i) diff[i] = psin[i] - psi[i];
    const double dpsi = std::sqrt(std::max(0.0, norm3d(diff)));
    const double deps = have_eps ? std::abs(nr.eps - eps_prev)
                                 : std::numeric_limits<double>::infinity();
    residuals.push_back(dpsi);

    if (dpsi <= tol.scf_psi && deps <= tol.scf_eps) {
      RadialField rho_new(grid);
      for (std::size_t i = 0; i < n; ++i) rho_new[i] = psin[i] * psin[i];
      RadialSolution sol;
      sol.params = params;
      sol.grid = grid;
      sol.psi = psin;
      sol.v_gravity = poisson_gravity(rho_new);
      sol.eps = nr.eps;
      sol.branch = Branch::lower;
      sol.solver = SolverKind::scf;
      sol.psi0 = psin[0];
      return sol;
    }

    if (it >= 1 && residuals[it] > residuals[it - 1]) {
      if (++rise_run >= 2) {
        alpha = std::max(0.05, 0.5 * alpha);
        rise_run = 0;
      }
    } else {
      rise_run = 0;
    }

    for (std::size_t i = 0; i < n; ++i) psi[i] += alpha * (psin[i] - psi[i]);
    const double nn = norm3d(psi);
    if (!(nn > 0.0) || !std::isfinite(nn))
      throw convergence_error("solve_scf: iterate lost its norm", it + 1, residuals);
    const double scale = 1.0 / std::sqrt(nn);
    for (std::size_t i = 0; i < n; ++i) psi[i] *= scale;

    eps_prev = nr.eps;
    have_eps = true;
  }
  throw convergence_error("solve_scf: no fixed point within the iteration budget",
                          tol.scf_max_iter, residuals);
}

}  // namespace monobec
