#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include <monobec/grid.hpp>
#include <monobec/poisson.hpp>
#include <monobec/quadrature.hpp>

using namespace monobec;
constexpr double pi = std::numbers::pi;

TEST_CASE("composite integration is exact on cubics") {
  // even interval count: pure Simpson
  {
    std::vector<double> f(101);
    const double h = 0.01;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double x = h * static_cast<double>(i);
      f[i] = x * x * x - 2.0 * x + 1.0;
    }
    CHECK(integrate(f, h) == Catch::Approx(0.25 - 1.0 + 1.0).margin(1e-14));
  }
  // odd interval count exercises the 3/8 block
  {
    std::vector<double> f(102);
    const double h = 1.0 / 101.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double x = h * static_cast<double>(i);
      f[i] = x * x * x;
    }
    CHECK(integrate(f, h) == Catch::Approx(0.25).margin(1e-14));
  }
}

TEST_CASE("integration converges at fourth order on smooth data") {
  auto quad = [](std::size_t n) {
    std::vector<double> f(n);
    const double h = 1.0 / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
      f[i] = std::sin(h * static_cast<double>(i));
    return integrate(f, h);
  };
  const double exact = 1.0 - std::cos(1.0);
  const double e1 = std::abs(quad(101) - exact);
  const double e2 = std::abs(quad(201) - exact);
  CHECK(e2 < e1 / 8.0);
  CHECK(e1 < 1e-9);
}

TEST_CASE("cumulative integral tracks the definite integral") {
  const std::size_t n = 501;
  const double h = 2.0 / static_cast<double>(n - 1);
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = h * static_cast<double>(i);
    f[i] = std::exp(-x) * x;
  }
  const std::vector<double> cum = cumulative_integral(f, h);
  REQUIRE(cum.size() == n);
  CHECK(cum[0] == 0.0);
  // exact antiderivative of x e^{-x} is 1 - (1+x) e^{-x}
  for (std::size_t i : {n / 4, n / 2, n - 1}) {
    const double x = h * static_cast<double>(i);
    const double exact = 1.0 - (1.0 + x) * std::exp(-x);
    CHECK(cum[i] == Catch::Approx(exact).margin(1e-8));
  }
}

TEST_CASE("derivatives honor the origin parity") {
  const RadialGrid grid{10.0, 2001};
  const double h = grid.h();
  std::vector<double> f(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double r = grid.r(i);
    f[i] = std::exp(-r * r);
  }
  const std::vector<double> d1 = derivative(f, h, OriginParity::even);
  const std::vector<double> d2 = second_derivative(f, h, OriginParity::even);
  CHECK(d1[0] == 0.0);
  CHECK(d2[0] == Catch::Approx(-2.0).margin(1e-8));
  for (std::size_t i : {std::size_t{40}, std::size_t{400}, std::size_t{1200}}) {
    const double r = grid.r(i);
    const double e = std::exp(-r * r);
    CHECK(d1[i] == Catch::Approx(-2.0 * r * e).margin(1e-8));
    CHECK(d2[i] == Catch::Approx((4.0 * r * r - 2.0) * e).margin(1e-7));
  }
}

TEST_CASE("volume integral of a unit Gaussian density") {
  const RadialGrid grid{40.0, 8001};
  const double sigma = 1.3;
  const RadialField rho = make_field(grid, [&](double r) {
    return std::exp(-r * r / (sigma * sigma)) /
           (std::pow(pi, 1.5) * sigma * sigma * sigma);
  });
  CHECK(volume_integral(rho) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("interaction potential of a Gaussian mass matches erf/r") {
  const RadialGrid grid{40.0, 8001};
  const double sigma = 1.1;
  const RadialField rho = make_field(grid, [&](double r) {
    return std::exp(-r * r / (sigma * sigma)) /
           (std::pow(pi, 1.5) * sigma * sigma * sigma);
  });
  const RadialField v = poisson_gravity(rho);
  // closed form: v(r) = -2 erf(r/sigma)/r, with v(0) = -4/(sqrt(pi) sigma)
  CHECK(v[0] == Catch::Approx(-4.0 / (std::sqrt(pi) * sigma)).margin(1e-8));
  for (std::size_t i : {std::size_t{200}, std::size_t{1000}, std::size_t{4000}}) {
    const double r = grid.r(i);
    CHECK(v[i] == Catch::Approx(-2.0 * std::erf(r / sigma) / r).margin(1e-8));
  }
  // far field sees the whole mass
  CHECK(v[grid.n - 1] == Catch::Approx(-2.0 / grid.r_max).margin(1e-10));
}

TEST_CASE("interaction potential of a uniform ball") {
  const RadialGrid grid{40.0, 8001};
  const double R = 5.0;
  const double rho0 = 3.0 / (4.0 * pi * R * R * R);  // unit total mass
  const RadialField rho =
      make_field(grid, [&](double r) { return r <= R ? rho0 : 0.0; });
  const RadialField v = poisson_gravity(rho);
  // inside: -4 pi rho0 (R^2 - r^2/3); outside: -2/r. The hard edge costs the
  // quadrature ~1e-3 locally, so the margins stay coarse here.
  CHECK(v[0] == Catch::Approx(-4.0 * pi * rho0 * R * R).margin(2e-3));
  const std::size_t i_in = 400;  // r = 2
  const double r_in = grid.r(i_in);
  CHECK(v[i_in] ==
        Catch::Approx(-4.0 * pi * rho0 * (R * R - r_in * r_in / 3.0)).margin(2e-3));
  const std::size_t i_out = 4000;  // r = 20
  CHECK(v[i_out] == Catch::Approx(-2.0 / grid.r(i_out)).margin(2e-4));
}

TEST_CASE("interaction potential is linear in the density") {
  const RadialGrid grid{20.0, 2001};
  const RadialField rho = make_field(grid, [](double r) {
    return std::exp(-r) * (1.0 + 0.5 * std::sin(r));
  });
  RadialField rho3 = rho;
  for (double& x : rho3.values) x *= 3.0;
  const RadialField v1 = poisson_gravity(rho);
  const RadialField v3 = poisson_gravity(rho3);
  for (std::size_t i : {std::size_t{0}, std::size_t{500}, std::size_t{2000}})
    CHECK(v3[i] == Catch::Approx(3.0 * v1[i]).epsilon(1e-13));
}

TEST_CASE("interaction potential satisfies its radial field equation") {
  // Lap v = 8 pi rho, checked with finite differences away from the origin
  const RadialGrid grid{40.0, 8001};
  const double sigma = 1.4;
  const RadialField rho = make_field(grid, [&](double r) {
    return std::exp(-r * r / (sigma * sigma));
  });
  const RadialField v = poisson_gravity(rho);
  const std::vector<double> d1 = derivative(v.values, grid.h(), OriginParity::even);
  const std::vector<double> d2 =
      second_derivative(v.values, grid.h(), OriginParity::even);
  for (std::size_t i : {std::size_t{300}, std::size_t{900}, std::size_t{2500}}) {
    const double r = grid.r(i);
    const double lap = d2[i] + 2.0 / r * d1[i];
    CHECK(lap == Catch::Approx(8.0 * pi * rho[i]).margin(1e-6));
  }
}

TEST_CASE("negative density is rejected") {
  const RadialGrid grid{10.0, 101};
  const RadialField bad = make_field(grid, [](double r) { return 0.5 - r; });
  CHECK_THROWS_AS(poisson_gravity(bad), std::invalid_argument);
}
