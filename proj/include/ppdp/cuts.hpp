#pragma once

#include <vector>

#include "ppdp/matrix.hpp"

namespace ppdp {

/// Primal cuts read the row-space vector v; dual cuts read the null-space
/// vector z. The bound formula is the same for both.
enum class CutSpace { Primal, Dual };

struct CutResult {
  IndexSet j;
  /// bound_j for every coordinate; +inf where the coordinate is treated as
  /// zero and no bound is defined.
  std::vector<double> bounds;
  double threshold = 0.5;
};

/// |w_j| <= kZeroCoordinateRatio * ||w||_inf counts as a zero coordinate.
inline constexpr double kZeroCoordinateRatio = 1e-12;

/// 1^T [v / (-v_j)]^+. Throws ZeroCoordinate when v_j is (numerically) zero.
double bound_primal(const Vector& v, Index j);
/// 1^T [z / (-z_j)]^+ for the normalized dual system.
double bound_dual(const Vector& z, Index j);

/// All indices whose bound is at most 1/2, computed in O(n).
/// Throws EmptyCut if none qualifies.
CutResult find_cut(const Vector& ref, CutSpace space);

/// find_cut without the EmptyCut check.
CutResult evaluate_cut(const Vector& ref);

}  // namespace ppdp
