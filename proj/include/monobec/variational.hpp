#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "monobec/detail/opt.hpp"
#include "monobec/grid.hpp"
#include "monobec/types.hpp"

namespace monobec {

/// Gaussian trial state psi_sigma(r) = (pi sigma^2)^{-3/4} exp(-r^2 / 2 sigma^2).
/// Its energy functional in the scaled units is
///   E(sigma) = 3/(2 sigma^2) + (3/2) g^2 sigma^2
///            + sqrt(2/pi) c / sigma^3 - sqrt(2/pi) / sigma,
/// with kinetic, trap, contact and monopolar terms in that order.
namespace gauss {
inline constexpr double kinetic_coef = 1.5;
inline constexpr double trap_coef = 1.5;
inline const double contact_coef = std::sqrt(2.0 / std::numbers::pi);
inline const double gravity_coef = std::sqrt(2.0 / std::numbers::pi);
}  // namespace gauss

struct GaussianEnergy {
  double energy = 0.0;
  double denergy_dsigma = 0.0;
};

inline GaussianEnergy gaussian_energy(double c, double g, double sigma) {
  if (!(sigma > 0.0))
    throw std::invalid_argument("gaussian_energy: sigma must be positive");
  const double s = sigma;
  const double kc = gauss::contact_coef, kg = gauss::gravity_coef;
  GaussianEnergy out;
  out.energy = gauss::kinetic_coef / (s * s) + gauss::trap_coef * g * g * s * s +
               kc * c / (s * s * s) - kg / s;
  out.denergy_dsigma = -2.0 * gauss::kinetic_coef / (s * s * s) +
                       2.0 * gauss::trap_coef * g * g * s -
                       3.0 * kc * c / (s * s * s * s) + kg / (s * s);
  return out;
}

inline double gaussian_energy_second_derivative(double c, double g, double sigma) {
  const double s = sigma;
  return 6.0 * gauss::kinetic_coef / (s * s * s * s) + 2.0 * gauss::trap_coef * g * g +
         12.0 * gauss::contact_coef * c / std::pow(s, 5) -
         2.0 * gauss::gravity_coef / (s * s * s);
}

enum class StationaryKind { minimum, maximum };

struct VariationalPoint {
  double sigma = 0.0;
  double energy = 0.0;
  StationaryKind kind = StationaryKind::minimum;
};

namespace detail {

/// Stationarity of the Gaussian energy is P(sigma) = sigma^4 dE/dsigma = 0 with
///   P(s) = 3 g^2 s^5 + kg s^2 - 3 s - 3 kc c.
/// P'' > 0 on s > 0, so P is convex there and has at most two positive roots.
inline double gauss_p(double c, double g, double s) {
  return 3.0 * g * g * std::pow(s, 5) + gauss::gravity_coef * s * s - 3.0 * s -
         3.0 * gauss::contact_coef * c;
}

inline double gauss_dp(double g, double s) {
  return 15.0 * g * g * s * s * s * s + 2.0 * gauss::gravity_coef * s - 3.0;
}

/// Positive root of P' (the convexity minimum of P); closed bracket since
/// P'(0) = -3 < 0 and P' is increasing.
inline double gauss_p_argmin(double g) {
  double lo = 0.0;
  double hi = 3.0 / (2.0 * gauss::gravity_coef);  // root at g = 0, upper bound otherwise
  if (gauss_dp(g, hi) < 0.0) hi *= 2.0;           // paranoia, not reachable for g >= 0
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gauss_dp(g, mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline double bisect_gauss_p(double c, double g, double lo, double hi) {
  double flo = gauss_p(c, g, lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = gauss_p(c, g, mid);
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// All stationary widths of the Gaussian energy in [sigma_lo, sigma_hi],
/// ordered by sigma. For c < 0 the smaller root is the energy maximum
/// (the barrier against collapse), the larger one the metastable minimum.
inline std::vector<VariationalPoint> gaussian_stationary_points(double c, double g,
                                                                double sigma_lo = 1e-4,
                                                                double sigma_hi = 1e4) {
  if (!(sigma_lo > 0.0) || !(sigma_hi > sigma_lo))
    throw std::invalid_argument("gaussian_stationary_points: bad sigma window");

  std::vector<double> roots;
  const double p_lo = detail::gauss_p(c, g, sigma_lo);
  const double p_hi = detail::gauss_p(c, g, sigma_hi);
  const double sm = detail::gauss_p_argmin(g);
  const double p_sm = detail::gauss_p(c, g, sm);

  if (sm > sigma_lo && sm < sigma_hi && p_lo > 0.0 && p_sm < 0.0) {
    // convex dip: one root each side of the minimum of P
    roots.push_back(detail::bisect_gauss_p(c, g, sigma_lo, sm));
    if (p_hi > 0.0) roots.push_back(detail::bisect_gauss_p(c, g, sm, sigma_hi));
  } else if (p_lo < 0.0 && p_hi > 0.0) {
    roots.push_back(detail::bisect_gauss_p(c, g, sigma_lo, sigma_hi));
  } else if (p_lo > 0.0 && p_hi < 0.0) {
    roots.push_back(detail::bisect_gauss_p(c, g, sigma_lo, sigma_hi));
  }

  std::vector<VariationalPoint> out;
  for (double s : roots) {
    VariationalPoint p;
    p.sigma = s;
    p.energy = gaussian_energy(c, g, s).energy;
    p.kind = gaussian_energy_second_derivative(c, g, s) >= 0.0
                 ? StationaryKind::minimum
                 : StationaryKind::maximum;
    out.push_back(p);
  }
  return out;
}

/// Scalar observables of the Gaussian state of width sigma.
inline ScaledObservables variational_observables(double c, double g, double sigma) {
  if (!(sigma > 0.0))
    throw std::invalid_argument("variational_observables: sigma must be positive");
  const double s = sigma;
  ScaledObservables o;
  o.kinetic = gauss::kinetic_coef / (s * s);
  o.trap = gauss::trap_coef * g * g * s * s;
  o.contact = gauss::contact_coef * c / (s * s * s);
  o.gravity = -gauss::gravity_coef / s;
  o.energy = o.kinetic + o.trap + o.contact + o.gravity;
  o.chemical_potential = o.kinetic + o.trap + 2.0 * o.contact + 2.0 * o.gravity;
  o.rms_radius = s * std::sqrt(1.5);
  o.peak_density = std::pow(std::numbers::pi * s * s, -1.5);
  return o;
}

struct VariationalFold {
  double c_star = 0.0;
  double sigma_star = 0.0;
};

/// Fold of the Gaussian model: the c at which its two stationary widths merge.
/// The merge width solves P'(sigma) = 0 (independent of c); c follows from
/// P(sigma) = 0. At g = 0 this is c = -3 pi / 8.
inline VariationalFold variational_fold(double g) {
  if (g < 0.0) throw std::invalid_argument("variational_fold: g must be >= 0");
  const double s = detail::gauss_p_argmin(g);
  const double c = (3.0 * g * g * std::pow(s, 5) + gauss::gravity_coef * s * s -
                    3.0 * s) / (3.0 * gauss::contact_coef);
  return VariationalFold{c, s};
}

/// Unit-norm Gaussian sampled on a grid; seed profile for the SCF solver.
inline RadialField gaussian_field(double sigma, const RadialGrid& grid) {
  const double amp = std::pow(std::numbers::pi * sigma * sigma, -0.75);
  return make_field(grid, [&](double r) {
    return amp * std::exp(-r * r / (2.0 * sigma * sigma));
  });
}

}  // namespace monobec
