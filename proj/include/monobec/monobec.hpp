#pragma once

// Ground states of a self-gravitating dilute condensate: shooting and
// self-consistent-field solvers on a radial grid, observables with internal
// consistency certification, a Gaussian variational model, and branch/fold
// continuation across the tangent bifurcation.

#include "monobec/continuation.hpp"
#include "monobec/coupled.hpp"
#include "monobec/errors.hpp"
#include "monobec/grid.hpp"
#include "monobec/numerov.hpp"
#include "monobec/observables.hpp"
#include "monobec/poisson.hpp"
#include "monobec/quadrature.hpp"
#include "monobec/scf.hpp"
#include "monobec/shooting.hpp"
#include "monobec/solution.hpp"
#include "monobec/types.hpp"
#include "monobec/units.hpp"
#include "monobec/variational.hpp"
