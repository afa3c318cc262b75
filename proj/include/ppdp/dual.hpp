#pragma once

#include "ppdp/primal.hpp"
#include "ppdp/solver.hpp"

namespace ppdp {

/// Basic procedure of the dual problem: Dunagan-Vempala steps on
/// z = P_A y over all indices with z_k <= 0. Checks v > 0 before z >= 0.
BpOutcome dual_bp(const ProjectionFactors& f, const BpOptions& opts = {});

/// Main algorithm of the dual problem: rescales the row space by doubling
/// cut columns; columns with d_i >= 2^L are zeroed in place.
Certificate dual_ma(const Matrix& a, const SolverOptions& opts = {});

}  // namespace ppdp
