#pragma once

#include <cstddef>
#include <string>

namespace monobec {

/// The two dimensionless control parameters of the scaled problem.
///   c : contact strength (attractive for c < 0)
///   g : trap strength (g = 0 means free, self-bound regime)
struct ModelParams {
  double c = 0.0;
  double g = 0.0;
};

/// Which solution of the two-branch structure is meant.
enum class Branch { lower, upper };

inline const char* to_string(Branch b) {
  return b == Branch::lower ? "lower" : "upper";
}

/// Which numerical method produced a solution.
enum class SolverKind { shooting, scf };

inline const char* to_string(SolverKind s) {
  return s == SolverKind::shooting ? "shooting" : "scf";
}

/// Scalar observables of one stationary state, in scaled units.
struct ScaledObservables {
  double energy = 0.0;             ///< total mean-field energy
  double chemical_potential = 0.0; ///< eigenvalue of the stationary equation
  double rms_radius = 0.0;
  double peak_density = 0.0;       ///< |psi(0)|^2
  double kinetic = 0.0;
  double trap = 0.0;
  double contact = 0.0;
  double gravity = 0.0;
};

/// Numerical tolerances shared across the solvers. Defaults reproduce the
/// shipped test and acceptance suites.
struct Tolerances {
  double w0_abs = 1e-12;      ///< bisection width on the shooting launch value
  double eps_abs = 0.0;       ///< bisection width on the linear eigenvalue; 0 = to the last ulp
  double norm_root = 1e-9;    ///< |norm - target| in the amplitude root-find
  double scf_psi = 1e-9;      ///< L2 change of psi between SCF iterates
  double scf_eps = 1e-9;      ///< eigenvalue change between SCF iterates
  int scf_max_iter = 800;
  double fold_c = 1e-6;       ///< stop width on c in fold refinement
  double norm_unit = 1e-7;    ///< |norm - 1| on a delivered state
  double residual = 1e-6;     ///< relative stationary-equation residual
  double chem_identity = 1e-6;///< relative chemical-potential identity defect
  double virial = 1e-4;      ///< relative virial defect
  double tail = 1e-6;         ///< |r V_g(r_max)/(-2 M) - 1| tail check
};

}  // namespace monobec
