#pragma once

#include <cmath>
#include <numbers>

#include "monobec/grid.hpp"
#include "monobec/types.hpp"

namespace monobec {

/// One certified stationary state of the scaled problem. psi is unit-norm and
/// nodeless, v_gravity is its self-consistent monopolar potential (vanishing
/// at infinity), eps the stationary eigenvalue.
struct RadialSolution {
  ModelParams params;
  RadialGrid grid;
  RadialField psi;
  RadialField v_gravity;
  double eps = 0.0;
  Branch branch = Branch::lower;
  SolverKind solver = SolverKind::shooting;
  double psi0 = 0.0;  ///< central amplitude psi(0)
};

/// Grid wide enough for the ground state at the given parameters, at node
/// spacing 1/200. The base window [0, 40] holds every self-bound profile in
/// raw coordinates; a trapped cloud with strong repulsion grows like
/// pi sqrt(c), so the window follows it with margin.
inline RadialGrid default_grid(const ModelParams& p) {
  double r_max = 40.0;
  if (p.g > 0.0 && p.c > 0.0)
    r_max = std::max(r_max, std::ceil(1.15 * std::numbers::pi * std::sqrt(p.c) + 12.0));
  return RadialGrid{r_max, static_cast<std::size_t>(std::llround(r_max * 200.0)) + 1};
}

}  // namespace monobec
