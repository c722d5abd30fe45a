#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <monobec/observables.hpp>
#include <monobec/shooting.hpp>

using namespace monobec;

TEST_CASE("raw shot carries a self-consistent interaction potential") {
  const RadialGrid grid{40.0, 8001};
  const ShotProfile s = shoot_profile(-1.0, 0.0, 0.2, grid);
  CHECK(s.mass > 0.0);
  CHECK(s.eps < 0.0);
  CHECK(s.cut >= 16);
  // the delivered potential must close the field equation seen by the tail:
  // at the boundary it is the monopole of the enclosed mass
  const double v_tail = s.v_gravity[grid.n - 1];
  CHECK(v_tail == Catch::Approx(-2.0 * s.mass / grid.r_max).epsilon(1e-3));
}

TEST_CASE("scaling map delivers unit mass and preserves the equation") {
  const RadialGrid grid{40.0, 8001};
  const ShotProfile s = shoot_profile(-1.0, 0.0, 0.35, grid);
  const RadialSolution sol = normalize_selfbound(s, -1.0, Branch::lower);

  CHECK(norm3d(sol.psi) == Catch::Approx(1.0).margin(1e-7));
  CHECK(sol.params.c == Catch::Approx(-s.mass * s.mass).epsilon(1e-12));
  CHECK(sol.grid.r_max == Catch::Approx(grid.r_max * s.mass).epsilon(1e-14));
  // certification re-derives the residual against the scaled parameters, so a
  // pass here validates the map end to end
  const ConsistencyReport rep = consistency_report(sol);
  CHECK(rep.certified);
}

TEST_CASE("both branches at c = -0.5, ordered as expected") {
  const ModelParams params{-0.5, 0.0};
  const RadialSolution lo = solve_shooting(params, Branch::lower);
  const RadialSolution hi = solve_shooting(params, Branch::upper);

  CHECK(lo.params.c == -0.5);
  CHECK(hi.params.c == -0.5);
  CHECK(consistency_report(lo).certified);
  CHECK(consistency_report(hi).certified);

  const ScaledObservables ol = compute_observables(lo);
  const ScaledObservables oh = compute_observables(hi);
  CHECK(ol.energy < oh.energy);
  CHECK(lo.psi0 < hi.psi0);
  CHECK(ol.rms_radius > oh.rms_radius);
}

TEST_CASE("free repulsive and plain self-bound states certify") {
  for (double c : {0.0, 1.0}) {
    const RadialSolution sol = solve_shooting(ModelParams{c, 0.0}, Branch::lower);
    CHECK(sol.params.c == c);
    CHECK(consistency_report(sol).certified);
    CHECK(sol.eps < 0.0);
  }
}

TEST_CASE("past the free fold there is no solution, with evidence") {
  try {
    solve_shooting(ModelParams{-2.0, 0.0}, Branch::lower);
    FAIL("expected no_solution_error");
  } catch (const no_solution_error& e) {
    CHECK(e.c_requested == -2.0);
    CHECK(e.g == 0.0);
    CHECK(e.c_reachable == Catch::Approx(-1.0251).margin(0.01));
  }
}

TEST_CASE("upper branch needs attraction") {
  CHECK_THROWS_AS(solve_shooting(ModelParams{0.5, 0.0}, Branch::upper),
                  no_solution_error);
}

TEST_CASE("trapped gas: solutions on both sides of zero coupling") {
  for (double c : {-0.3, 0.0, 2.0}) {
    const RadialSolution sol = solve_shooting(ModelParams{c, 1.0}, Branch::lower);
    CHECK(sol.params.c == c);
    CHECK(consistency_report(sol).certified);
  }
}

TEST_CASE("trapped gas past its fold reports the reachable coupling") {
  try {
    solve_shooting(ModelParams{-3.0, 1.0}, Branch::lower);
    FAIL("expected no_solution_error");
  } catch (const no_solution_error& e) {
    CHECK(e.c_requested == -3.0);
    CHECK(e.g == 1.0);
    CHECK(e.c_reachable < 0.0);
    CHECK(e.c_reachable > -1.1);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(solve_shooting(ModelParams{std::nan(""), 0.0}, Branch::lower),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_shooting(ModelParams{0.0, -1.0}, Branch::lower),
                  std::invalid_argument);
  const RadialGrid grid{40.0, 8001};
  CHECK_THROWS_AS(shoot_profile(0.0, 0.0, -0.2, grid), std::invalid_argument);
  CHECK_THROWS_AS(shoot_profile(0.0, 0.0, 0.0, grid), std::invalid_argument);
}

TEST_CASE("peak of the mass curve sits at the free fold") {
  const RadialGrid grid{40.0, 8001};
  const PeakMass pm = peak_mass(-1.0, 0.0, grid);
  // c* = -peak^2 on the unit attractive ray
  CHECK(-pm.mass * pm.mass == Catch::Approx(-1.0251).margin(0.002));
}
