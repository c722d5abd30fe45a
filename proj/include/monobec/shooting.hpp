#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "monobec/coupled.hpp"
#include "monobec/detail/opt.hpp"
#include "monobec/errors.hpp"
#include "monobec/grid.hpp"
#include "monobec/quadrature.hpp"
#include "monobec/solution.hpp"
#include "monobec/types.hpp"

namespace monobec {

/// Converged outward shot: profile, companion potential and derived scalars in
/// raw (not yet unit-norm) form. cut marks the last node produced by the
/// integrator itself; beyond it psi carries the analytic decaying continuation
/// and w the monopole continuation of the potential.
struct ShotProfile {
  RadialGrid grid;
  RadialField psi;        ///< positive nodeless profile, psi(0) = psi0
  RadialField w;          ///< companion potential, w = v_gravity - eps
  RadialField v_gravity;  ///< self-potential, tending to -2 mass / r
  double psi0 = 0.0;
  double w0 = 0.0;        ///< converged launch value w(0)
  double eps = 0.0;       ///< eigenvalue of this raw profile
  double mass = 0.0;      ///< int psi^2 dV
  std::size_t cut = 0;
};

namespace detail {

/// Locate the launch value w(0) separating trajectories that cross zero (below)
/// from trajectories that rebound while positive (above), by bisection down to
/// tol.w0_abs or the mantissa floor. Returns the rebound-side edge, whose
/// trajectory stays positive through its minimum.
inline double find_w0(double c, double g, double psi0, const RadialGrid& grid,
                      const Tolerances& tol, std::optional<double> hint) {
  int marches = 0;
  auto klass = [&](double w0) {
    if (++marches > 420)
      throw bracket_error("find_w0: launch-value search did not settle");
    return integrate_coupled(c, g, psi0, w0, grid).tail_sign;
  };

  double lo, hi;
  if (hint) {
    const double d = 1.0 + 0.5 * std::abs(*hint);
    lo = *hint - d;
    hi = *hint + d;
  } else {
    const double off = 8.0 * std::numbers::pi * std::abs(c) * psi0 * psi0 + 10.0;
    lo = -off;
    hi = off;
  }

  double step = std::max(1.0, hi - lo);
  int klo = klass(lo);
  int khi = klass(hi);
  while (khi != +1) {  // hi still crosses zero: keep it as a valid lower edge
    lo = hi;
    klo = khi;
    hi += step;
    step *= 2.0;
    khi = klass(hi);
  }
  while (klo != -1) {  // lo still rebounds: keep it as a valid upper edge
    hi = lo;
    lo -= step;
    step *= 2.0;
    klo = klass(lo);
  }

  while (hi - lo > tol.w0_abs) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // doubles exhausted
    (klass(mid) == -1 ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace detail

/// One converged shot at fixed parameters and center amplitude. The launch
/// value of the companion potential is bisected until the trajectory neither
/// crosses zero nor rebounds before the profile has decayed; past the turnover
/// of the integrated tail the profile continues with its decaying asymptote
/// psi_cut (r_cut / r) exp(-int kappa) and the potential with its monopole
/// form. The eigenvalue follows from the launch value and the r-weighted mass:
/// eps = -w(0) - 2 int 4 pi r psi^2 dr.
inline ShotProfile shoot_profile(double c, double g, double psi0,
                                 const RadialGrid& grid, const Tolerances& tol = {},
                                 std::optional<double> w0_hint = {}) {
  if (!(psi0 > 0.0) || !std::isfinite(psi0))
    throw std::invalid_argument("shoot_profile: need psi0 > 0");
  if (!(g >= 0.0) || !std::isfinite(g) || !std::isfinite(c))
    throw std::invalid_argument("shoot_profile: need finite c and g >= 0");
  grid.validate();

  const double w0 = detail::find_w0(c, g, psi0, grid, tol, w0_hint);
  const CoupledOutcome out = integrate_coupled(c, g, psi0, w0, grid);

  const std::size_t n = grid.n;
  const double h = grid.h();
  const std::size_t last = out.diverged_at.value_or(n - 1);

  // cut at the minimum of the integrated tail; beyond it the unstable mode
  // dominates the march
  std::size_t peak = 0;
  for (std::size_t i = 1; i <= last; ++i)
    if (out.psi[i] > out.psi[peak]) peak = i;
  std::size_t cut = last;
  for (std::size_t i = peak; i + 1 <= last; ++i) {
    if (!(out.psi[i + 1] > 0.0) || out.psi[i + 1] >= out.psi[i]) {
      cut = i;
      break;
    }
  }
  if (cut < 16)
    throw step_size_error("shoot_profile: trusted range too short, grid too coarse "
                          "for this state");

  std::vector<double> r2rho(cut + 1), rrho(cut + 1);
  for (std::size_t i = 0; i <= cut; ++i) {
    const double r = grid.r(i);
    const double rho = out.psi[i] * out.psi[i];
    r2rho[i] = 4.0 * std::numbers::pi * r * r * rho;
    rrho[i] = 4.0 * std::numbers::pi * r * rho;
  }
  const double m_cut = integrate(r2rho, h);
  const double i1_cut = integrate(rrho, h);

  ShotProfile shot{grid,
                   RadialField(grid),
                   RadialField(grid),
                   RadialField(grid),
                   psi0,
                   w0,
                   -w0 - 2.0 * i1_cut,
                   0.0,
                   cut};
  for (std::size_t i = 0; i <= cut; ++i) {
    shot.psi[i] = out.psi[i];
    shot.w[i] = out.w[i];
  }

  const double r_cut = grid.r(cut);
  double kap_prev = std::sqrt(std::max(g * g * r_cut * r_cut + shot.w[cut], 1e-12));
  double phase = 0.0;
  for (std::size_t i = cut + 1; i < n; ++i) {
    const double r = grid.r(i);
    shot.w[i] = shot.w[cut] + 2.0 * m_cut * (1.0 / r_cut - 1.0 / r);
    const double kap = std::sqrt(std::max(g * g * r * r + shot.w[i], 1e-12));
    phase += 0.5 * h * (kap_prev + kap);
    kap_prev = kap;
    shot.psi[i] = shot.psi[cut] * (r_cut / r) * std::exp(-phase);
  }

  // remove the eigenvalue offset: v_gravity(0) = -2 i1_cut by construction and
  // v_gravity(r_max) lands on the monopole value -2 m_cut / r_max
  for (std::size_t i = 0; i < n; ++i) shot.v_gravity[i] = shot.w[i] - w0 - 2.0 * i1_cut;
  shot.mass = norm3d(shot.psi);
  return shot;
}

/// Map a raw free-space profile (mass M) to the unit-mass member of its
/// scaling family: psi -> psi / M^2 on a grid stretched by M, eigenvalue and
/// potential divided by M^2, contact parameter multiplied by M^2. Exact only
/// for g = 0.
inline RadialSolution normalize_selfbound(const ShotProfile& shot, double c_ray,
                                          Branch branch) {
  const double m = shot.mass;
  if (!(m > 0.0) || !std::isfinite(m))
    throw std::invalid_argument("normalize_selfbound: profile mass must be positive");
  const double s = 1.0 / (m * m);

  RadialSolution sol;
  sol.params = ModelParams{c_ray * m * m, 0.0};
  sol.grid = RadialGrid{shot.grid.r_max * m, shot.grid.n};
  sol.psi = RadialField(sol.grid);
  sol.v_gravity = RadialField(sol.grid);
  for (std::size_t i = 0; i < shot.grid.n; ++i) {
    sol.psi[i] = shot.psi[i] * s;
    sol.v_gravity[i] = shot.v_gravity[i] * s;
  }
  sol.eps = shot.eps * s;
  sol.psi0 = shot.psi0 * s;
  sol.branch = branch;
  sol.solver = SolverKind::shooting;
  return sol;
}

namespace detail {

/// Profile mass as a function of the center amplitude at fixed (c, g), with
/// the last converged launch value chained as a warm start.
class MassCurve {
 public:
  MassCurve(double c, double g, const RadialGrid& grid, const Tolerances& tol)
      : c_(c), g_(g), grid_(grid), tol_(tol) {}

  double operator()(double psi0) {
    if (++evals_ > 400)
      throw convergence_error("amplitude search: too many profile evaluations",
                              evals_);
    const ShotProfile s = shoot_profile(c_, g_, psi0, grid_, tol_, hint_);
    hint_ = s.w0;
    return s.mass;
  }

 private:
  double c_, g_;
  RadialGrid grid_;
  Tolerances tol_;
  std::optional<double> hint_;
  int evals_ = 0;
};

/// Outcome of scanning the amplitude family for mass >= target.
struct ExceedSearch {
  bool found = false;
  double x_at = 0.0, mass_at = 0.0;      ///< amplitude at or above target
  double x_left = 0.0, mass_left = 0.0;  ///< smaller amplitude below target
  double x_peak = 0.0, mass_peak = 0.0;  ///< refined turnover when !found
};

/// Halve from an amplitude whose mass meets the target until one drops below,
/// exposing the lower flank of the curve.
inline ExceedSearch backoff_to_bracket(MassCurve& mass, double target, double x0,
                                       double m0) {
  double xe = x0, me = m0;
  for (int k = 0; k < 90; ++k) {
    const double x = 0.5 * xe;
    const double m = mass(x);
    if (m < target) return {true, xe, me, x, m, 0.0, 0.0};
    xe = x;
    me = m;
  }
  throw convergence_error(
      "amplitude walk: mass stays above target toward zero amplitude", 90);
}

/// Double the amplitude until the mass meets the target. A turnover of the
/// curve before that brackets its maximum, which golden-section refinement
/// then compares against the target; a peak still short of it means the
/// request lies beyond the fold of this family. An infinite target turns this
/// into a pure peak search.
inline ExceedSearch find_mass_exceeding(MassCurve& mass, double target, double seed,
                                        double peak_xtol_rel) {
  double x = seed;
  double m = mass(x);
  if (m >= target) return backoff_to_bracket(mass, target, x, m);

  double xp = 0.0, mp = -1.0;  // previous walk point (rising, below target)
  for (int k = 0; k < 70; ++k) {
    const double xn = 2.0 * x;
    const double mn = mass(xn);
    if (mn >= target) return {true, xn, mn, x, m, 0.0, 0.0};
    if (mn < m) {
      // turnover below target: enclose the maximum. If it happened on the
      // first step, probe left until a rising segment appears.
      double a = xp, ma = mp;
      if (!(mp >= 0.0)) {
        a = x;
        for (int j = 0;; ++j) {
          a *= 0.5;
          ma = mass(a);
          if (ma >= target) return backoff_to_bracket(mass, target, a, ma);
          if (ma < m) break;
          if (j >= 90)
            throw convergence_error(
                "amplitude walk: no rising segment toward zero amplitude", 90);
        }
      }
      auto neg = [&](double t) { return -mass(t); };
      const MinimizeResult res = golden_minimize(neg, a, xn, peak_xtol_rel, 0.0);
      if (-res.f >= target) return {true, res.x, -res.f, a, ma, res.x, -res.f};
      ExceedSearch out;
      out.x_peak = res.x;
      out.mass_peak = -res.f;
      return out;
    }
    xp = x;
    mp = m;
    x = xn;
    m = mn;
  }
  throw convergence_error(
      "amplitude walk: mass target not reached within amplitude range", 70);
}

struct AmplitudeRoot {
  double psi0 = 0.0;
  bool ok = false;
  double reachable_mass = 0.0;  ///< family maximum when no root exists
};

/// Amplitude at which the family mass equals the target, on the requested
/// flank of the turnover (lower branch = rising flank, upper = falling).
inline AmplitudeRoot amplitude_root(MassCurve& mass, double target, Branch branch,
                                    double seed, const Tolerances& tol) {
  const ExceedSearch s = find_mass_exceeding(mass, target, seed, 1e-3);
  if (!s.found) return {0.0, false, s.mass_peak};

  const double ftol = tol.norm_root * std::max(1.0, target);
  auto f = [&](double x) { return mass(x) - target; };

  if (branch == Branch::lower) {
    const double root = find_root(f, s.x_left, s.x_at, s.mass_left - target,
                                  s.mass_at - target, 1e-13 * s.x_at, ftol);
    return {root, true, 0.0};
  }

  double a = s.x_at, fa = s.mass_at - target;
  double b = a, fb = fa;
  bool bracketed = false;
  for (int k = 0; k < 60; ++k) {
    b *= 2.0;
    fb = mass(b) - target;
    if (fb < 0.0) {
      bracketed = true;
      break;
    }
    a = b;
    fa = fb;
  }
  if (!bracketed)
    throw convergence_error(
        "upper-branch search: mass stays above target at large amplitude", 60);
  const double root = find_root(f, a, b, fa, fb, 1e-13 * b, ftol);
  return {root, true, 0.0};
}

}  // namespace detail

struct PeakMass {
  double psi0 = 0.0;
  double mass = 0.0;
};

/// Largest mass attainable along the (c, g) amplitude family, by golden
/// refinement of the walk turnover. Families without a turnover (repulsive or
/// zero contact) have unbounded mass and raise convergence_error instead.
inline PeakMass peak_mass(double c, double g, const RadialGrid& grid,
                          const Tolerances& tol = {}, double xtol_rel = 1e-5,
                          double seed = 0.05) {
  detail::MassCurve mass(c, g, grid, tol);
  const detail::ExceedSearch s = detail::find_mass_exceeding(
      mass, std::numeric_limits<double>::infinity(), seed, xtol_rel);
  return {s.x_peak, s.mass_peak};
}

namespace detail {

/// Most negative contact strength at which the trapped family still reaches
/// unit mass, bisected between the failing request and zero attraction (where
/// arbitrarily large mass is available). Coarse on purpose: this runs only to
/// attach evidence to a no-solution report.
inline double trapped_reachable_c(double c_req, double g, const RadialGrid& grid,
                                  const Tolerances& tol) {
  double lo = c_req;
  double hi = 0.5 * c_req;
  for (int k = 0;; ++k) {
    if (peak_mass(hi, g, grid, tol, 1e-3).mass >= 1.0) break;
    lo = hi;
    hi *= 0.5;
    if (k >= 40) return hi;
  }
  while (std::abs(lo - hi) > 0.01 * std::abs(hi)) {
    const double mid = 0.5 * (lo + hi);
    (peak_mass(mid, g, grid, tol, 1e-3).mass >= 1.0 ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace detail

/// Stationary state at the requested parameters by outward shooting.
///
/// Free case (g = 0): solved on a fixed contact ray and mapped through the
/// scaling family, so the raw profile stays compact for any |c|. The ray is c
/// itself for |c| < 1 (mass target 1) and sign(c) otherwise (mass target
/// sqrt|c|).
///
/// Trapped case (g > 0): the amplitude is rooted directly against unit mass.
///
/// Requests beyond the fold raise no_solution_error carrying the reachable
/// contact strength as evidence; upper-branch requests need c < 0.
inline RadialSolution solve_shooting(const ModelParams& params, Branch branch,
                                     const Tolerances& tol = {},
                                     std::optional<RadialGrid> grid_opt = {}) {
  if (!(std::isfinite(params.c) && std::isfinite(params.g)))
    throw std::invalid_argument("solve_shooting: non-finite parameters");
  if (params.g < 0.0) throw std::invalid_argument("solve_shooting: need g >= 0");
  if (branch == Branch::upper && params.c >= 0.0)
    throw no_solution_error(
        "solve_shooting: the upper branch exists only for attractive contact (c < 0)",
        params.c, params.g, 0.0);

  const RadialGrid grid = grid_opt ? *grid_opt : default_grid(params);

  if (params.g == 0.0) {
    const bool small = std::abs(params.c) < 1.0;
    const double c_ray = small ? params.c : (params.c < 0.0 ? -1.0 : 1.0);
    const double target = small ? 1.0 : std::sqrt(std::abs(params.c));
    detail::MassCurve mass(c_ray, 0.0, grid, tol);
    const detail::AmplitudeRoot root =
        detail::amplitude_root(mass, target, branch, 0.05, tol);
    if (!root.ok)
      throw no_solution_error(
          "solve_shooting: no self-bound state at this contact strength", params.c,
          0.0, c_ray * root.reachable_mass * root.reachable_mass);
    const ShotProfile shot = shoot_profile(c_ray, 0.0, root.psi0, grid, tol);
    RadialSolution sol = normalize_selfbound(shot, c_ray, branch);
    sol.params.c = params.c;  // achieved mass differs from target by <= norm_root
    return sol;
  }

  detail::MassCurve mass(params.c, params.g, grid, tol);
  const detail::AmplitudeRoot root =
      detail::amplitude_root(mass, 1.0, branch, 0.05, tol);
  if (!root.ok)
    throw no_solution_error(
        "solve_shooting: trapped family peaks below unit mass", params.c, params.g,
        detail::trapped_reachable_c(params.c, params.g, grid, tol));
  const ShotProfile shot = shoot_profile(params.c, params.g, root.psi0, grid, tol);

  RadialSolution sol;
  sol.params = params;
  sol.grid = grid;
  sol.psi = shot.psi;
  sol.v_gravity = shot.v_gravity;
  sol.eps = shot.eps;
  sol.psi0 = shot.psi0;
  sol.branch = branch;
  sol.solver = SolverKind::shooting;
  return sol;
}

}  // namespace monobec
