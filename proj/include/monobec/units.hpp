#pragma once

#include <cmath>
#include <stdexcept>

#include "monobec/types.hpp"

namespace monobec {

/// SI description of a condensate with an induced 1/r attraction.
struct PhysicalContext {
  double N = 1.0;       ///< particle number
  double mass = 0.0;    ///< atomic mass [kg]
  double u = 0.0;       ///< strength of the -u/r pair attraction [J m]
  double a = 0.0;       ///< s-wave scattering length [m]
  double omega0 = 0.0;  ///< trap angular frequency [1/s]
};

/// Natural length/energy scales of the 1/r attraction, plus the
/// dimensionless trap strength at N = 1.
struct AtomicUnits {
  double a_u = 0.0;    ///< length unit hbar^2 / (m u) [m]
  double E_u = 0.0;    ///< energy unit hbar^2 / (2 m a_u^2) [J]
  double gamma = 0.0;  ///< hbar omega0 / E_u
};

namespace constants {
inline constexpr double hbar = 1.054571817e-34;       // [J s]
inline constexpr double light_speed = 2.99792458e8;   // [m/s]
inline constexpr double epsilon0 = 8.8541878128e-12;  // [F/m]
}  // namespace constants

inline AtomicUnits atomic_units(const PhysicalContext& ctx) {
  if (!(ctx.mass > 0.0) || !(ctx.u > 0.0))
    throw std::invalid_argument("atomic_units: mass and u must be positive");
  AtomicUnits out;
  out.a_u = constants::hbar * constants::hbar / (ctx.mass * ctx.u);
  out.E_u = constants::hbar * constants::hbar /
            (2.0 * ctx.mass * out.a_u * out.a_u);
  out.gamma = constants::hbar * ctx.omega0 / out.E_u;
  return out;
}

/// Collapse (N, a/a_u, gamma) onto the two scaled control parameters
/// c = N^2 a/a_u and g = gamma/N^2.
inline ModelParams to_scaled(double N, double a_over_au, double gamma) {
  if (!(N > 0.0)) throw std::invalid_argument("to_scaled: N must be positive");
  if (gamma < 0.0) throw std::invalid_argument("to_scaled: gamma must be >= 0");
  return ModelParams{N * N * a_over_au, gamma / (N * N)};
}

inline ModelParams to_scaled(const PhysicalContext& ctx) {
  const AtomicUnits au = atomic_units(ctx);
  return to_scaled(ctx.N, ctx.a / au.a_u, au.gamma);
}

/// Map observables of the scaled (N = 1) solution to the N-particle system:
/// energies scale with N^3, the chemical potential with N^2, the cloud radius
/// with 1/N and the central density with N^4.
inline ScaledObservables rescale_observables(const ScaledObservables& o, double N) {
  if (!(N > 0.0))
    throw std::invalid_argument("rescale_observables: N must be positive");
  const double n2 = N * N;
  const double n3 = n2 * N;
  ScaledObservables out;
  out.energy = o.energy * n3;
  out.chemical_potential = o.chemical_potential * n2;
  out.rms_radius = o.rms_radius / N;
  out.peak_density = o.peak_density * n2 * n2;
  out.kinetic = o.kinetic * n3;
  out.trap = o.trap * n3;
  out.contact = o.contact * n3;
  out.gravity = o.gravity * n3;
  return out;
}

/// Strength u of the laser-induced 1/r attraction for intensity I [W/m^2],
/// wave number k [1/m] and static polarizability alpha [C^2 m^2 / J]:
///   u = (11/4pi) I k^2 alpha^2 / (c eps0^2).
inline double interaction_strength_from_laser(double intensity, double wave_number,
                                              double polarizability) {
  using namespace constants;
  const double pi = 3.14159265358979323846;
  return 11.0 / (4.0 * pi) * intensity * wave_number * wave_number *
         polarizability * polarizability / (light_speed * epsilon0 * epsilon0);
}

}  // namespace monobec
