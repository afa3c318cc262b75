#pragma once

#include <functional>
#include <optional>

#include "ppdp/certificate.hpp"
#include "ppdp/matrix.hpp"
#include "ppdp/projection.hpp"

namespace ppdp {

/// Primal side: updates v = Q_A y and rescales the null space.
/// Dual side: updates z = P_A y and rescales the row space.
enum class Side { Primal, Dual };

enum class BpCase { Cut = 0, PrimalFeasible = 1, DualFeasible = 2 };

struct StepRecord {
  Side side;
  std::size_t iteration;
  Index active_columns;
  double step_size;
  double alpha;
  double threshold;
  double norm_sq_before;
  double norm_sq_after;
  Index k_size;
};

struct BpRecord {
  Side side;
  std::size_t iterations;
  Index active_columns;
  Index total_columns;
};

struct CutRecord {
  Side side;
  /// Matrix whose projection produced the cut (active columns only).
  const Eigen::MatrixXd& current;
  const IndexSet& j;
};

/// Optional instrumentation; empty functions cost nothing.
struct Observers {
  std::function<void(const StepRecord&)> on_step;
  std::function<void(const BpRecord&)> on_bp;
  std::function<void(const CutRecord&)> on_cut;
};

inline constexpr double kDefaultStepSize = 1.8;
inline constexpr double kDefaultPositivityTol = 1e-11;

struct BpOptions {
  double step_size = kDefaultStepSize;
  /// 0 selects 10 r^3.
  std::size_t max_iters = 0;
  /// n of the original problem, for the "r == n" dual test; 0 means r.
  Index original_columns = 0;
  /// w_i > tol * ||w||_inf counts as strictly positive.
  double positivity_tol = kDefaultPositivityTol;
  const Observers* observers = nullptr;
};

struct BpOutcome {
  BpCase kind = BpCase::Cut;
  Vector y;
  Vector v;
  Vector z;
  /// Cut indices into the active columns.
  IndexSet cut;
  std::size_t iterations = 0;
  double threshold = 0.0;
};

enum class BitLengthRule { Hadamard, Encoding };

struct SolverOptions {
  double step_size = kDefaultStepSize;
  std::optional<int> bit_length;
  BitLengthRule bit_length_rule = BitLengthRule::Hadamard;
  std::size_t max_iters = 0;
  double positivity_tol = kDefaultPositivityTol;
  double feas_tol = kDefaultFeasTol;
  double dual_tol = kDefaultDualTol;
  double rank_tol = 0.0;
  Observers observers;
};

/// Throws InvalidArgument("step size out of (0,2)") when c is not in (0, 2).
void validate_step_size(double c);

int resolve_bit_length(const Matrix& a, const SolverOptions& opts);

std::size_t default_max_iters(Index r, double step_size);

}  // namespace ppdp
