#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include <monobec/continuation.hpp>

using namespace monobec;
constexpr double pi = std::numbers::pi;

TEST_CASE("free-gas fold location") {
  const FoldPoint f = locate_fold(0.0);
  CHECK(f.c_star == Catch::Approx(-1.0251).margin(0.002));
  CHECK(f.eps_star < 0.0);
  CHECK(f.amplitude_star > 0.0);
}

TEST_CASE("Gaussian surrogate fold through the same refinement machinery") {
  const FoldPoint f = locate_fold_variational(0.0);
  CHECK(f.c_star == Catch::Approx(-3.0 * pi / 8.0).margin(1e-6));
  // the surrogate overestimates the reach of the attractive branch
  const FoldPoint n = locate_fold(0.0);
  CHECK(std::abs(f.c_star) > std::abs(n.c_star));
}

TEST_CASE("free sweep crosses the fold with consistent structure") {
  const BranchDiagram d = trace_branch(0.0, 0.05, 1.2, 17);
  REQUIRE(d.points.size() == 17);
  for (const BranchPoint& p : d.points) REQUIRE(p.ok);

  REQUIRE(d.fold.has_value());
  CHECK(d.fold->c_star == Catch::Approx(-1.0251).margin(0.002));

  // the traced coupling dips exactly once
  int sign_changes = 0;
  for (std::size_t i = 2; i < d.points.size(); ++i) {
    const double d1 = d.points[i - 1].c - d.points[i - 2].c;
    const double d2 = d.points[i].c - d.points[i - 1].c;
    if (d1 < 0.0 && d2 > 0.0) ++sign_changes;
    CHECK_FALSE((d1 > 0.0 && d2 < 0.0));  // no interior maximum
  }
  CHECK(sign_changes == 1);

  // tags split at the fold amplitude
  for (const BranchPoint& p : d.points) {
    if (p.psi0 < 0.9 * d.fold->amplitude_star) CHECK(p.branch == Branch::lower);
    if (p.psi0 > 1.1 * d.fold->amplitude_star) CHECK(p.branch == Branch::upper);
  }

  // eigenvalue and energy vary continuously along the sweep; the geometric
  // ladder keeps relative gaps bounded even on the steep deep-attraction flank
  for (std::size_t i = 1; i < d.points.size(); ++i) {
    const double scale =
        std::max(1.0, std::abs(d.points[i - 1].obs.chemical_potential));
    CHECK(std::abs(d.points[i].obs.chemical_potential -
                   d.points[i - 1].obs.chemical_potential) < 0.9 * scale);
    CHECK(std::abs(d.points[i].obs.energy - d.points[i - 1].obs.energy) <
          0.9 * scale);
  }

  // at matched coupling the upper branch carries more energy
  std::vector<const BranchPoint*> lower, upper;
  for (const BranchPoint& p : d.points)
    (p.branch == Branch::lower ? lower : upper).push_back(&p);
  REQUIRE(lower.size() >= 2);
  REQUIRE(upper.size() >= 2);
  for (const BranchPoint* u : upper) {
    for (std::size_t i = 1; i < lower.size(); ++i) {
      const double c0 = lower[i - 1]->c, c1 = lower[i]->c;
      if ((u->c - c0) * (u->c - c1) <= 0.0) {
        const double t = (u->c - c0) / (c1 - c0);
        const double e_low = lower[i - 1]->obs.energy +
                             t * (lower[i]->obs.energy - lower[i - 1]->obs.energy);
        CHECK(u->obs.energy > e_low);
      }
    }
  }

  // tangency: the eigenvalue slope against c blows up near the fold
  const std::size_t m = d.points.size();
  auto slope = [&](std::size_t i) {
    return std::abs((d.points[i].obs.chemical_potential -
                     d.points[i - 1].obs.chemical_potential) /
                    (d.points[i].c - d.points[i - 1].c));
  };
  std::size_t knee = 1;
  double cmin = d.points[0].c;
  for (std::size_t i = 1; i < m; ++i)
    if (d.points[i].c < cmin) { cmin = d.points[i].c; knee = i; }
  CHECK(slope(knee) > 5.0 * std::min(slope(1), slope(m - 1)));
}

TEST_CASE("degenerate single-point sweep") {
  const BranchDiagram d = trace_branch(0.0, 0.1, 0.1, 1);
  REQUIRE(d.points.size() == 1);
  CHECK(d.points[0].ok);
  CHECK_FALSE(d.fold.has_value());
  CHECK(d.points[0].branch == Branch::lower);
}

TEST_CASE("repulsive ray sweep stays on one branch") {
  const BranchDiagram d = trace_branch(0.0, 0.05, 0.8, 7, +1.0);
  REQUIRE(d.points.size() == 7);
  CHECK_FALSE(d.fold.has_value());
  for (const BranchPoint& p : d.points) {
    REQUIRE(p.ok);
    CHECK(p.c > 0.0);
    CHECK(p.branch == Branch::lower);
  }
  // coupling grows monotonically with amplitude on this ray
  for (std::size_t i = 1; i < d.points.size(); ++i)
    CHECK(d.points[i].c > d.points[i - 1].c);
}

TEST_CASE("trapped sweep covers repulsion through the attractive flank") {
  // The window starts where the cloud still fits the default box: below
  // amplitude 0.125 the matched coupling exceeds ~30 and the wide repulsive
  // profile runs into the grid edge, which rightly voids certification.
  const BranchDiagram d = trace_branch(1.0, 0.125, 0.8, 7);
  REQUIRE(d.points.size() == 7);
  for (const BranchPoint& p : d.points) {
    REQUIRE(p.ok);
    CHECK(p.certified);
  }
  CHECK(d.points.front().c > d.points.back().c);
}

TEST_CASE("fold curve shrinks with confinement and stays under the surrogate") {
  const std::vector<double> gs = {0.0, 0.5};
  const auto rows = fold_curve(gs);
  REQUIRE(rows.size() == 2);
  for (const FoldCurvePoint& r : rows) {
    REQUIRE(r.ok);
    CHECK(std::abs(r.variational.c_star) > std::abs(r.numeric.c_star));
  }
  CHECK(std::abs(rows[1].numeric.c_star) < std::abs(rows[0].numeric.c_star));
}

TEST_CASE("trapped fold depends continuously on weak confinement") {
  const double c0 = locate_fold(0.0).c_star;
  const double c1 = locate_fold(0.01).c_star;
  const double c2 = locate_fold(0.02).c_star;
  // linear extrapolation from the two trapped points lands on the free value
  const double extrap = 2.0 * c1 - c2;
  CHECK(extrap == Catch::Approx(c0).margin(5e-3));
  CHECK(std::abs(c1) < std::abs(c0));
  CHECK(std::abs(c2) < std::abs(c1));
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(trace_branch(0.0, -0.1, 1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(trace_branch(0.0, 1.0, 0.5, 5), std::invalid_argument);
  CHECK_THROWS_AS(trace_branch(0.0, 0.1, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(trace_branch(-1.0, 0.1, 1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(trace_branch(0.0, 0.1, 1.0, 5, 2.0), std::invalid_argument);
}
