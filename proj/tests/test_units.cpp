#include <catch2/catch_amalgamated.hpp>

#include <monobec/units.hpp>

using namespace monobec;

TEST_CASE("parameter reduction collapses N into two knobs") {
  const ModelParams p = to_scaled(1000.0, 1e-6, 0.0);
  CHECK(p.c == Catch::Approx(1.0).epsilon(1e-14));
  CHECK(p.g == 0.0);

  const ModelParams q = to_scaled(2000.0, -2.5e-7, 4e6);
  CHECK(q.c == Catch::Approx(-1.0).epsilon(1e-14));
  CHECK(q.g == Catch::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(to_scaled(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(to_scaled(10.0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("length and energy units follow from the pair attraction") {
  PhysicalContext ctx;
  ctx.N = 1.0;
  ctx.mass = 1.41922e-25;  // a heavy alkali atom [kg]
  ctx.u = 1.0e-62;         // [J m]
  ctx.omega0 = 0.0;

  const AtomicUnits au = atomic_units(ctx);
  // a_u = hbar^2/(m u), evaluated independently
  const double hbar2 = 1.054571817e-34 * 1.054571817e-34;
  CHECK(au.a_u == Catch::Approx(hbar2 / (ctx.mass * ctx.u)).epsilon(1e-14));
  // E_u equals the kinetic scale at the length a_u
  CHECK(au.E_u == Catch::Approx(hbar2 / (2.0 * ctx.mass * au.a_u * au.a_u))
                      .epsilon(1e-14));
  CHECK(au.gamma == 0.0);

  // doubling u halves the length unit and quadruples the energy unit
  PhysicalContext ctx2 = ctx;
  ctx2.u *= 2.0;
  const AtomicUnits au2 = atomic_units(ctx2);
  CHECK(au2.a_u == Catch::Approx(au.a_u / 2.0).epsilon(1e-14));
  CHECK(au2.E_u == Catch::Approx(au.E_u * 4.0).epsilon(1e-14));

  CHECK_THROWS_AS(atomic_units(PhysicalContext{}), std::invalid_argument);
}

TEST_CASE("observable rescaling to N particles") {
  ScaledObservables o;
  o.energy = -0.25;
  o.chemical_potential = -0.75;
  o.rms_radius = 3.5;
  o.peak_density = 0.02;
  o.kinetic = 0.3;
  o.trap = 0.1;
  o.contact = -0.05;
  o.gravity = -0.6;

  const double N = 10.0;
  const ScaledObservables r = rescale_observables(o, N);
  CHECK(r.energy == Catch::Approx(-0.25 * 1e3).epsilon(1e-14));
  CHECK(r.chemical_potential == Catch::Approx(-0.75 * 1e2).epsilon(1e-14));
  CHECK(r.rms_radius == Catch::Approx(0.35).epsilon(1e-14));
  CHECK(r.peak_density == Catch::Approx(0.02 * 1e4).epsilon(1e-14));
  CHECK(r.kinetic == Catch::Approx(0.3 * 1e3).epsilon(1e-14));
  CHECK(r.trap == Catch::Approx(0.1 * 1e3).epsilon(1e-14));
  CHECK(r.contact == Catch::Approx(-0.05 * 1e3).epsilon(1e-14));
  CHECK(r.gravity == Catch::Approx(-0.6 * 1e3).epsilon(1e-14));

  CHECK_THROWS_AS(rescale_observables(o, 0.0), std::invalid_argument);
}

TEST_CASE("laser-induced attraction strength") {
  // pin at unit inputs: 11/(4 pi c eps0^2), evaluated by hand
  const double u = interaction_strength_from_laser(1.0, 1.0, 1.0);
  CHECK(u == Catch::Approx(3.72447e13).epsilon(1e-4));
  // quadratic in k and alpha, linear in intensity
  CHECK(interaction_strength_from_laser(2.0, 1.0, 1.0) ==
        Catch::Approx(2.0 * u).epsilon(1e-14));
  CHECK(interaction_strength_from_laser(1.0, 3.0, 1.0) ==
        Catch::Approx(9.0 * u).epsilon(1e-14));
  CHECK(interaction_strength_from_laser(1.0, 1.0, 2.0) ==
        Catch::Approx(4.0 * u).epsilon(1e-14));
}
