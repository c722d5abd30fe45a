// Locate the tangent bifurcation of the attractive gas, free and trapped, and
// show how the Gaussian model overestimates its reach.

#include <cstdio>

#include <monobec/monobec.hpp>

int main() {
  using namespace monobec;

  const FoldPoint free_fold = locate_fold(0.0);
  const FoldPoint free_gauss = locate_fold_variational(0.0);
  std::printf("g=0    numeric c*=%.6f (eps*=%.6f)   gaussian c*=%.6f\n",
              free_fold.c_star, free_fold.eps_star, free_gauss.c_star);

  for (double g : {0.2, 1.0}) {
    const FoldPoint f = locate_fold(g);
    const FoldPoint v = locate_fold_variational(g);
    std::printf("g=%-4g numeric c*=%.6f (eps*=%.6f)   gaussian c*=%.6f\n", g,
                f.c_star, f.eps_star, v.c_star);
  }
  return 0;
}
