#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "monobec/grid.hpp"
#include "monobec/quadrature.hpp"
#include "monobec/solution.hpp"
#include "monobec/types.hpp"

namespace monobec {

/// Energy split of a state psi with its self-potential v_gravity:
///   kinetic = int |psi'|^2 dV
///   trap    = g^2 int r^2 rho dV
///   contact = 4 pi c int rho^2 dV
///   gravity = (1/2) int v_gravity rho dV   (the double-count half)
/// plus the derived scalars (total energy, rms radius, peak density).
/// chemical_potential is copied from the solution, not recomputed, so
/// consistency_report can use it as an independent cross-check.
inline ScaledObservables compute_observables(const RadialSolution& sol) {
  const RadialGrid& g = sol.grid;
  if (sol.psi.grid.n != g.n || sol.v_gravity.grid.n != g.n)
    throw std::invalid_argument("compute_observables: field/grid size mismatch");

  const auto dpsi = derivative(sol.psi.values, g.h(), OriginParity::even);
  RadialField kin_d(g), trap_d(g), contact_d(g), grav_d(g), r2rho(g);
  for (std::size_t i = 0; i < g.n; ++i) {
    const double r = g.r(i);
    const double rho = sol.psi[i] * sol.psi[i];
    kin_d[i] = dpsi[i] * dpsi[i];
    trap_d[i] = sol.params.g * sol.params.g * r * r * rho;
    contact_d[i] = rho * rho;
    grav_d[i] = sol.v_gravity[i] * rho;
    r2rho[i] = r * r * rho;
  }

  ScaledObservables o;
  o.kinetic = volume_integral(kin_d);
  o.trap = volume_integral(trap_d);
  o.contact = 4.0 * std::numbers::pi * sol.params.c * volume_integral(contact_d);
  o.gravity = 0.5 * volume_integral(grav_d);
  o.energy = o.kinetic + o.trap + o.contact + o.gravity;
  o.chemical_potential = sol.eps;
  o.rms_radius = std::sqrt(std::max(0.0, volume_integral(r2rho)));
  o.peak_density = sol.psi[0] * sol.psi[0];
  return o;
}

/// Relative defect of the eigenvalue identity
///   eps = E_kin + E_trap + 2 E_contact + 2 E_gravity.
inline double chemical_potential_defect(double eps, const ScaledObservables& o) {
  const double rhs = o.kinetic + o.trap + 2.0 * o.contact + 2.0 * o.gravity;
  const double scale = std::max({std::abs(eps), std::abs(o.kinetic) + std::abs(o.trap) +
                                               2.0 * std::abs(o.contact) +
                                               2.0 * std::abs(o.gravity), 1e-300});
  return std::abs(eps - rhs) / scale;
}

/// Relative defect of the virial relation
///   2 E_kin - 2 E_trap + 3 E_contact + E_gravity = 0,
/// normalized by the sum of the term magnitudes.
inline double virial_defect(const ScaledObservables& o) {
  const double lhs = 2.0 * o.kinetic - 2.0 * o.trap + 3.0 * o.contact + o.gravity;
  const double scale = std::max(2.0 * std::abs(o.kinetic) + 2.0 * std::abs(o.trap) +
                                    3.0 * std::abs(o.contact) + std::abs(o.gravity),
                                1e-300);
  return std::abs(lhs) / scale;
}

/// Pointwise defect of the stationary equation
///   [-Lap + g^2 r^2 + 8 pi c rho + v_gravity] psi = eps psi
/// as a volume-weighted rms, relative to the rms of eps psi, over the region
/// where the profile still carries weight.
inline double relative_residual(const RadialSolution& sol) {
  const RadialGrid& g = sol.grid;
  const double h = g.h();
  const auto d1 = derivative(sol.psi.values, h, OriginParity::even);
  const auto d2 = second_derivative(sol.psi.values, h, OriginParity::even);

  // Trust region: stop a few stencil widths before the profile drops to
  // 1e-4 of the center value. Past that the delivered tail is an asymptotic
  // patch, and finite differences straddling the junction see its kink.
  const double floor_amp = 1e-4 * std::abs(sol.psi0);
  std::size_t imax = g.n;
  for (std::size_t i = 0; i < g.n; ++i) {
    if (std::abs(sol.psi[i]) < floor_amp) {
      imax = i;
      break;
    }
  }
  double num = 0.0, den = 0.0;
  // Laplacian of an even field at the origin is 3 psi''(0).
  for (std::size_t i = 0; i + 3 < g.n && i + 3 < imax; ++i) {
    const double r = g.r(i);
    const double lap = (i == 0) ? 3.0 * d2[0] : d2[i] + 2.0 / r * d1[i];
    const double pot = sol.params.g * sol.params.g * r * r +
                       8.0 * std::numbers::pi * sol.params.c * sol.psi[i] * sol.psi[i] +
                       sol.v_gravity[i];
    const double lhs = -lap + pot * sol.psi[i];
    const double rhs = sol.eps * sol.psi[i];
    const double w = r * r + h * h;  // volume weight, kept nonzero at the origin
    num += w * (lhs - rhs) * (lhs - rhs);
    den += w * rhs * rhs;
  }
  if (den <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(num / den);
}

/// How closely v_gravity matches its monopole far field -2 M / r at the grid
/// edge; |defect| small certifies the potential carries the full mass.
inline double tail_defect(const RadialSolution& sol) {
  const double mass = norm3d(sol.psi);
  const double expected = -2.0 * mass / sol.grid.r_max;
  return std::abs(sol.v_gravity[sol.grid.n - 1] / expected - 1.0);
}

/// Bundle of the self-consistency diagnostics run on every delivered state.
struct ConsistencyReport {
  double norm = 0.0;                  ///< int rho dV, should be 1
  double chem_identity_rel = 0.0;
  double virial_rel = 0.0;
  double residual_rel = 0.0;
  double tail_rel = 0.0;
  bool certified = false;
};

inline ConsistencyReport consistency_report(const RadialSolution& sol,
                                            const Tolerances& tol = {}) {
  const ScaledObservables o = compute_observables(sol);
  ConsistencyReport rep;
  rep.norm = norm3d(sol.psi);
  rep.chem_identity_rel = chemical_potential_defect(sol.eps, o);
  rep.virial_rel = virial_defect(o);
  rep.residual_rel = relative_residual(sol);
  rep.tail_rel = tail_defect(sol);
  rep.certified = std::abs(rep.norm - 1.0) <= tol.norm_unit &&
                  rep.chem_identity_rel <= tol.chem_identity &&
                  rep.virial_rel <= tol.virial &&
                  rep.residual_rel <= tol.residual && rep.tail_rel <= tol.tail;
  return rep;
}

/// Strong-coupling limit for the trapped gas (g fixed to 1 by the scaling):
/// kinetic pressure dropped, leaving an exactly solvable density
///   rho(r) = sin(r / sqrt(c)) / (4 pi^2 c r)  for r <= pi sqrt(c), else 0.
/// Valid for c > 0; the cloud radius is pi sqrt(c).
inline double tf_radius(double c) { return std::numbers::pi * std::sqrt(c); }

inline double tf_peak_density(double c) {
  return 1.0 / (4.0 * std::numbers::pi * std::numbers::pi * std::pow(c, 1.5));
}

inline double tf_chemical_potential(double c) {
  return -2.0 / (std::numbers::pi * std::sqrt(c));
}

inline double tf_energy(double c) { return -1.0 / (std::numbers::pi * std::sqrt(c)); }

inline double tf_contact_energy(double c) {
  return 1.0 / (2.0 * std::numbers::pi * std::sqrt(c));
}

inline double tf_gravity_energy(double c) {
  return -1.5 / (std::numbers::pi * std::sqrt(c));
}

inline RadialField tf_density_profile(double c, const RadialGrid& grid) {
  if (!(c > 0.0)) throw std::invalid_argument("tf_density_profile: need c > 0");
  const double rc = tf_radius(c);
  const double sc = std::sqrt(c);
  return make_field(grid, [&](double r) {
    if (r >= rc) return 0.0;
    if (r == 0.0) return tf_peak_density(c);
    return std::sin(r / sc) / (4.0 * std::numbers::pi * std::numbers::pi * c * r);
  });
}

}  // namespace monobec
