#pragma once

#include "ppdp/primal.hpp"
#include "ppdp/solver.hpp"

namespace ppdp {

/// Terminating cases of the primal-dual basic procedure.
///  2: v1 > 0, 1: z1 > 0, 4: v2 > 0 with r == n, 3: z2 > 0,
/// -1: dual-side cut J1 (row space of A1), -2: primal-side cut J2
/// (null space of A2).
struct PpdpBpOutcome {
  int kind = 0;
  Vector y1, z1, v1;
  Vector y2, v2, z2;
  IndexSet cut1;
  IndexSet cut2;
  std::size_t iterations = 0;
};

/// One primal-dual basic procedure call. Either factor pointer may be null
/// to run a single side; y1/y2 continue from the caller's iterates.
PpdpBpOutcome ppdp_bp(const ProjectionFactors* dual_side,
                      const ProjectionFactors* primal_side, const Vector& y1,
                      const Vector& y2, const BpOptions& opts);

/// Primal-dual main algorithm. Always returns a verified primal or dual
/// certificate, or throws.
Certificate ppdp_ma(const Matrix& a, const SolverOptions& opts = {});

}  // namespace ppdp
