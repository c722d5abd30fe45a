#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monobec/detail/opt.hpp"
#include "monobec/errors.hpp"
#include "monobec/observables.hpp"
#include "monobec/shooting.hpp"
#include "monobec/solution.hpp"
#include "monobec/types.hpp"
#include "monobec/variational.hpp"

namespace monobec {

/// One traced state along a branch sweep. Failed points stay in the dataset as
/// gaps (ok = false) so long sweeps remain inspectable.
struct BranchPoint {
  double psi0 = 0.0;  ///< continuation coordinate: center amplitude
  double c = 0.0;
  Branch branch = Branch::lower;
  bool ok = false;
  bool certified = false;
  ScaledObservables obs;  ///< valid when ok
  std::string error;      ///< failure reason when !ok
};

struct FoldPoint {
  double c_star = 0.0;
  double eps_star = 0.0;
  double amplitude_star = 0.0;  ///< continuation coordinate of the fold state
};

struct BranchDiagram {
  double g = 0.0;
  std::vector<BranchPoint> points;  ///< ordered by the amplitude coordinate
  std::optional<FoldPoint> fold;    ///< present when the sweep contains one
};

namespace detail {

/// Valley bracket plus golden refinement of a curve over positive amplitudes:
/// walk by factors of two (in whichever direction descends) until the curve
/// turns upward, then polish the interior minimum.
template <typename K>
MinimizeResult minimize_over_amplitude(K&& curve, double seed, double xtol_rel) {
  double x = seed, kx = curve(x);
  double xr = 2.0 * x, kr = curve(xr);
  double xl = 0.0, kl = 0.0;
  if (kr >= kx) {
    xl = 0.5 * x;
    kl = curve(xl);
    int guard = 0;
    while (kl <= kx) {
      xr = x;
      kr = kx;
      x = xl;
      kx = kl;
      xl *= 0.5;
      kl = curve(xl);
      if (++guard > 90)
        throw convergence_error(
            "fold search: no interior minimum toward zero amplitude", guard);
    }
  } else {
    xl = x;
    kl = kx;
    x = xr;
    kx = kr;
    int guard = 0;
    for (;;) {
      const double xn = 2.0 * x;
      const double kn = curve(xn);
      if (kn > kx) {
        xr = xn;
        kr = kn;
        break;
      }
      xl = x;
      kl = kx;
      x = xn;
      kx = kn;
      if (++guard > 70)
        throw convergence_error(
            "fold search: curve keeps descending with amplitude", guard);
    }
  }
  return golden_minimize(curve, xl, xr, xtol_rel, 0.0);
}

/// Contact strength at which the trapped family carries unit mass for a given
/// center amplitude. Regular across the fold, which is why sweeps use the
/// amplitude as their coordinate. Successive calls chain their own bracket.
class TrappedCRoot {
 public:
  TrappedCRoot(double g, const RadialGrid& grid, const Tolerances& tol)
      : g_(g), grid_(grid), tol_(tol) {}

  double operator()(double psi0) {
    auto f = [&](double c) {
      const ShotProfile s = shoot_profile(c, g_, psi0, grid_, tol_, hint_);
      hint_ = s.w0;
      return s.mass - 1.0;
    };
    double lo = guess_ - span_, hi = guess_ + span_;
    double flo = 0.0, fhi = 0.0;
    if (!expand_bracket(f, lo, hi, flo, fhi, -1e7, 1e7))
      throw bracket_error(
          "amplitude-to-contact map: no unit-mass contact strength in range");
    const double c = find_root(f, lo, hi, flo, fhi,
                               1e-11 * std::max(1.0, std::abs(hi)), tol_.norm_root);
    guess_ = c;
    span_ = std::max(0.05, 0.05 * std::abs(c));
    return c;
  }

 private:
  double g_;
  RadialGrid grid_;
  Tolerances tol_;
  std::optional<double> hint_;
  double guess_ = 0.0;
  double span_ = 1.0;
};

}  // namespace detail

/// Fold of the solution family at trap strength g: the minimum of the contact
/// strength over the amplitude coordinate, golden-refined. Free case: one shot
/// per probe on the attractive ray (c = -mass^2). Trapped case: one unit-mass
/// contact root per probe.
inline FoldPoint locate_fold(double g, const Tolerances& tol = {},
                             std::optional<RadialGrid> grid_opt = {},
                             double seed = 0.05) {
  if (!(g >= 0.0) || !std::isfinite(g))
    throw std::invalid_argument("locate_fold: need finite g >= 0");
  const RadialGrid grid = grid_opt ? *grid_opt : default_grid(ModelParams{0.0, g});

  if (g == 0.0) {
    std::optional<double> hint;
    auto curve = [&](double a) {
      const ShotProfile s = shoot_profile(-1.0, 0.0, a, grid, tol, hint);
      hint = s.w0;
      return -(s.mass * s.mass);
    };
    const detail::MinimizeResult res =
        detail::minimize_over_amplitude(curve, seed, 1e-5);
    const ShotProfile s = shoot_profile(-1.0, 0.0, res.x, grid, tol, hint);
    const RadialSolution sol = normalize_selfbound(s, -1.0, Branch::lower);
    return {res.f, sol.eps, sol.psi0};
  }

  detail::TrappedCRoot croot(g, grid, tol);
  auto curve = [&](double a) { return croot(a); };
  const detail::MinimizeResult res = detail::minimize_over_amplitude(curve, seed, 1e-5);
  const ShotProfile s = shoot_profile(res.f, g, res.x, grid, tol);
  return {res.f, s.eps, res.x};
}

/// Fold of the Gaussian model located with the same valley machinery, on the
/// exact curve c(sigma) that makes each width stationary. Serves as an
/// independent check of the refinement pipeline: at g = 0 the minimum is
/// -3 pi / 8 in closed form.
inline FoldPoint locate_fold_variational(double g, double xtol_rel = 1e-7,
                                         double seed = 1.0) {
  if (!(g >= 0.0) || !std::isfinite(g))
    throw std::invalid_argument("locate_fold_variational: need finite g >= 0");
  auto curve = [&](double s) {
    return (3.0 * g * g * std::pow(s, 5) + gauss::gravity_coef * s * s - 3.0 * s) /
           (3.0 * gauss::contact_coef);
  };
  const detail::MinimizeResult res =
      detail::minimize_over_amplitude(curve, seed, xtol_rel);
  const double eps = variational_observables(res.f, g, res.x).chemical_potential;
  return {res.f, eps, res.x};
}

/// Sweep the solution family over a geometric amplitude ladder.
///
/// Free case (g = 0): one shot per point on the given contact ray (+-1), mapped
/// through the scaling family; the traced c spans the ray's whole sign. Trapped
/// case: the ray is ignored and each amplitude is mapped to the contact
/// strength with unit mass, which covers repulsion, attraction and both
/// branches in a single pass.
///
/// Points where the solver fails are recorded as gaps. When the traced c has
/// an interior minimum the fold is golden-refined and points are tagged lower
/// (left of it) or upper (right of it).
inline BranchDiagram trace_branch(double g, double psi0_lo, double psi0_hi,
                                  std::size_t steps, double ray = -1.0,
                                  const Tolerances& tol = {},
                                  std::optional<RadialGrid> grid_opt = {}) {
  if (!(g >= 0.0) || !std::isfinite(g))
    throw std::invalid_argument("trace_branch: need finite g >= 0");
  if (!(psi0_lo > 0.0) || !(psi0_hi >= psi0_lo))
    throw std::invalid_argument(
        "trace_branch: amplitude window must be positive and ordered");
  if (steps < 1) throw std::invalid_argument("trace_branch: need at least one step");
  if (g == 0.0 && ray != -1.0 && ray != 1.0)
    throw std::invalid_argument("trace_branch: ray must be -1 or +1");

  const RadialGrid grid = grid_opt ? *grid_opt : default_grid(ModelParams{0.0, g});
  BranchDiagram diagram;
  diagram.g = g;

  std::vector<double> amps(steps);
  for (std::size_t i = 0; i < steps; ++i)
    amps[i] = steps == 1 ? psi0_lo
                         : psi0_lo * std::pow(psi0_hi / psi0_lo,
                                              static_cast<double>(i) /
                                                  static_cast<double>(steps - 1));

  std::optional<double> hint;
  detail::TrappedCRoot croot(g, grid, tol);

  for (double a : amps) {
    BranchPoint pt;
    pt.psi0 = a;
    try {
      RadialSolution sol;
      if (g == 0.0) {
        const ShotProfile s = shoot_profile(ray, 0.0, a, grid, tol, hint);
        hint = s.w0;
        sol = normalize_selfbound(s, ray, Branch::lower);
      } else {
        const double c = croot(a);
        const ShotProfile s = shoot_profile(c, g, a, grid, tol);
        sol.params = ModelParams{c, g};
        sol.grid = grid;
        sol.psi = s.psi;
        sol.v_gravity = s.v_gravity;
        sol.eps = s.eps;
        sol.psi0 = s.psi0;
        sol.branch = Branch::lower;
        sol.solver = SolverKind::shooting;
      }
      pt.psi0 = sol.psi0;
      pt.c = sol.params.c;
      pt.obs = compute_observables(sol);
      pt.certified = consistency_report(sol, tol).certified;
      pt.ok = true;
    } catch (const error& e) {
      pt.error = e.what();
    }
    diagram.points.push_back(pt);
  }

  // fold detection on the traced contact strength
  std::size_t kmin = steps, first_ok = steps, last_ok = steps;
  for (std::size_t i = 0; i < steps; ++i) {
    if (!diagram.points[i].ok) continue;
    if (first_ok == steps) first_ok = i;
    last_ok = i;
    if (kmin == steps || diagram.points[i].c < diagram.points[kmin].c) kmin = i;
  }

  // Branch tags live in the raw amplitude coordinate of the ladder; the fold
  // record reports the delivered center amplitude instead (they differ for
  // the free family, whose states are rescaled after the shot).
  double split_raw = std::numeric_limits<double>::infinity();

  if (kmin != steps && kmin != first_ok && kmin != last_ok) {
    split_raw = amps[kmin];
    const double wl = amps[kmin - 1];
    const double wr = amps[kmin + 1];
    try {
      FoldPoint fold;
      if (g == 0.0) {
        auto curve = [&](double a) {
          const ShotProfile s = shoot_profile(ray, 0.0, a, grid, tol, hint);
          hint = s.w0;
          return ray * s.mass * s.mass;
        };
        const detail::MinimizeResult res =
            detail::golden_minimize(curve, wl, wr, 1e-5, 0.0);
        const ShotProfile s = shoot_profile(ray, 0.0, res.x, grid, tol, hint);
        const RadialSolution sol = normalize_selfbound(s, ray, Branch::lower);
        fold = {res.f, sol.eps, sol.psi0};
        split_raw = res.x;
      } else {
        auto curve = [&](double a) { return croot(a); };
        const detail::MinimizeResult res =
            detail::golden_minimize(curve, wl, wr, 1e-5, 0.0);
        const ShotProfile s = shoot_profile(res.f, g, res.x, grid, tol);
        fold = {res.f, s.eps, res.x};
        split_raw = res.x;
      }
      diagram.fold = fold;
    } catch (const error&) {
      // fold refinement is best effort; the sweep data stands on its own
    }
  } else if (kmin != steps && kmin == first_ok && first_ok != last_ok &&
             diagram.points[first_ok].c < 0.0) {
    // contact strength ascends through the whole attractive window: the sweep
    // starts past the fold, every point sits on the upper branch
    split_raw = 0.0;
  }
  // remaining shapes (descending c, repulsive windows, single point) are the
  // lower branch throughout: split_raw stays at +infinity

  for (std::size_t i = 0; i < steps; ++i)
    diagram.points[i].branch = amps[i] <= split_raw ? Branch::lower : Branch::upper;

  return diagram;
}

struct FoldCurvePoint {
  double g = 0.0;
  bool ok = false;
  FoldPoint numeric;
  FoldPoint variational;
  std::string error;
};

/// Fold location as a function of trap strength, with the Gaussian-model curve
/// alongside. Warm-starts each numeric search from its predecessor's fold
/// amplitude; failures are recorded as gaps.
inline std::vector<FoldCurvePoint> fold_curve(const std::vector<double>& g_values,
                                              const Tolerances& tol = {},
                                              std::optional<RadialGrid> grid_opt = {}) {
  std::vector<FoldCurvePoint> out;
  double seed = 0.05;
  for (double g : g_values) {
    FoldCurvePoint row;
    row.g = g;
    try {
      row.numeric = locate_fold(g, tol, grid_opt, seed);
      row.variational = locate_fold_variational(g);
      row.ok = true;
      seed = row.numeric.amplitude_star;
    } catch (const error& e) {
      row.error = e.what();
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace monobec
