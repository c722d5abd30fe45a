// Solve the self-bound gas on both sides of the fold at c = -0.5 and print a
// coarse profile table plus the observable set for each branch.

#include <cstdio>

#include <monobec/monobec.hpp>

int main() {
  using namespace monobec;
  const ModelParams params{-0.5, 0.0};

  for (Branch br : {Branch::lower, Branch::upper}) {
    const RadialSolution sol = solve_shooting(params, br);
    const ScaledObservables o = compute_observables(sol);
    const ConsistencyReport rep = consistency_report(sol);

    std::printf("branch=%s eps=%.8f E=%.8f rms=%.6f peak=%.6f certified=%d\n",
                to_string(br), sol.eps, o.energy, o.rms_radius, o.peak_density,
                rep.certified ? 1 : 0);
    std::printf("  r        psi          v_gravity\n");
    for (std::size_t i = 0; i < sol.grid.n; i += sol.grid.n / 8)
      std::printf("  %-8.3f %-12.6e %-12.6e\n", sol.grid.r(i), sol.psi[i],
                  sol.v_gravity[i]);
  }
  return 0;
}
