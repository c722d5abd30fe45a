#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <monobec/observables.hpp>
#include <monobec/poisson.hpp>
#include <monobec/variational.hpp>

using namespace monobec;
constexpr double pi = std::numbers::pi;

TEST_CASE("Gaussian energy matches a grid-quadrature evaluation") {
  const double c = -0.8, g = 0.3, sigma = 1.1;
  const RadialGrid grid{40.0, 8001};

  RadialSolution sol;
  sol.params = ModelParams{c, g};
  sol.grid = grid;
  sol.psi = gaussian_field(sigma, grid);
  RadialField density = sol.psi;
  for (double& x : density.values) x *= x;
  sol.v_gravity = poisson_gravity(density);

  const ScaledObservables o = compute_observables(sol);
  const GaussianEnergy ge = gaussian_energy(c, g, sigma);
  CHECK(ge.energy == Catch::Approx(o.energy).epsilon(1e-8));
}

TEST_CASE("energy derivatives are consistent with finite differences") {
  const double c = -0.6, g = 0.4, sigma = 1.7, d = 1e-5;
  const GaussianEnergy mid = gaussian_energy(c, g, sigma);
  const double ep = gaussian_energy(c, g, sigma + d).energy;
  const double em = gaussian_energy(c, g, sigma - d).energy;
  CHECK(mid.denergy_dsigma == Catch::Approx((ep - em) / (2.0 * d)).epsilon(1e-8));

  const double dp = gaussian_energy(c, g, sigma + d).denergy_dsigma;
  const double dm = gaussian_energy(c, g, sigma - d).denergy_dsigma;
  CHECK(gaussian_energy_second_derivative(c, g, sigma) ==
        Catch::Approx((dp - dm) / (2.0 * d)).epsilon(1e-7));
}

TEST_CASE("pure self-bound width and energy in closed form") {
  const auto pts = gaussian_stationary_points(0.0, 0.0);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].kind == StationaryKind::minimum);
  CHECK(pts[0].sigma == Catch::Approx(3.0 * std::sqrt(pi / 2.0)).epsilon(1e-10));
  CHECK(pts[0].energy == Catch::Approx(-1.0 / (3.0 * pi)).epsilon(1e-12));
}

TEST_CASE("attraction below the fold: barrier and metastable pair") {
  const auto pts = gaussian_stationary_points(-0.5, 0.0);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].sigma < pts[1].sigma);
  CHECK(pts[0].kind == StationaryKind::maximum);
  CHECK(pts[1].kind == StationaryKind::minimum);
  CHECK(pts[0].energy > pts[1].energy);
  for (const VariationalPoint& p : pts)
    CHECK(std::abs(gaussian_energy(-0.5, 0.0, p.sigma).denergy_dsigma) < 1e-9);
}

TEST_CASE("past the fold the stationary set is empty") {
  CHECK(gaussian_stationary_points(-2.0, 0.0).empty());
  CHECK(gaussian_stationary_points(-3.0 * pi / 8.0 - 1e-6, 0.0).empty());
  CHECK(gaussian_stationary_points(-3.0 * pi / 8.0 + 1e-6, 0.0).size() == 2);
}

TEST_CASE("root-count bisection recovers the closed-form fold") {
  double lo = -2.0, hi = -0.5;  // empty at lo, two roots at hi
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (gaussian_stationary_points(mid, 0.0).empty()) lo = mid;
    else hi = mid;
  }
  CHECK(hi == Catch::Approx(-3.0 * pi / 8.0).margin(1e-6));
}

TEST_CASE("fold of the Gaussian model") {
  const VariationalFold f0 = variational_fold(0.0);
  CHECK(f0.c_star == Catch::Approx(-3.0 * pi / 8.0).margin(1e-8));
  CHECK(f0.sigma_star == Catch::Approx(1.5 * std::sqrt(pi / 2.0)).margin(1e-7));

  const VariationalFold f1 = variational_fold(1.0);
  CHECK(std::abs(f1.c_star) < std::abs(f0.c_star));
}

TEST_CASE("a trap plus repulsion leaves a single minimum") {
  const auto pts = gaussian_stationary_points(1.0, 1.0);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].kind == StationaryKind::minimum);
}

TEST_CASE("Gaussian trial field is unit-normalized") {
  const RadialGrid grid{40.0, 8001};
  const RadialField psi = gaussian_field(2.1, grid);
  CHECK(norm3d(psi) == Catch::Approx(1.0).margin(1e-10));
  CHECK(psi[0] == Catch::Approx(std::pow(pi * 2.1 * 2.1, -0.75)).epsilon(1e-12));
}
