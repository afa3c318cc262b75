#pragma once

#include <functional>

#include "ppdp/solver.hpp"

namespace ppdp {

/// Column scaling of the main algorithms. d_i = 2^exponent_i; eliminated
/// columns have d_i = 0 and belong to H.
class ScalingState {
 public:
  ScalingState(Index n, int bit_length);

  Index size() const noexcept { return static_cast<Index>(exponent_.size()); }
  int bit_length() const noexcept { return bit_length_; }
  /// tau = 2^-L.
  double tau() const;
  int exponent(Index i) const { return exponent_[static_cast<std::size_t>(i)]; }
  bool eliminated(Index i) const {
    return eliminated_[static_cast<std::size_t>(i)];
  }
  /// d_i, or 0 for i in H. May underflow for very large L.
  double d(Index i) const;
  Vector d() const;
  IndexSet eliminated_set() const;
  const IndexSet& active() const noexcept { return active_; }

  /// d_J *= 2^delta for J given as positions in active().
  void shift(const IndexSet& j_local, int delta);
  void shift_all(int delta);
  /// d_i *= 2^delta for original indices i; eliminated ones are skipped.
  void shift_original(const IndexSet& indices, int delta);
  /// Moves every active i with d_i <= tau into H. Returns how many moved.
  Index eliminate_below_tau();
  /// Moves every active i with d_i >= 2^L into H. Returns how many moved.
  Index eliminate_above_inverse_tau();
  /// Largest exponent among active columns (0 when none).
  int max_active_exponent() const;

  /// A restricted to active columns, column t scaled by
  /// 2^(exponent - max_active_exponent). Uniform rescaling leaves it fixed.
  Eigen::MatrixXd scaled_active(const Eigen::MatrixXd& a) const;
  /// A with eliminated columns zeroed instead of removed.
  Eigen::MatrixXd scaled_zeroed(const Eigen::MatrixXd& a) const;
  /// x_i = d_i w_t for active i = active()[t], 0 for eliminated i,
  /// up to the common factor 2^-max_active_exponent.
  Vector expand(const Vector& w_active, Index n_total) const;
  /// Same for a full-length w (columns kept in place).
  Vector expand_full(const Vector& w_full) const;

 private:
  std::vector<int> exponent_;
  std::vector<bool> eliminated_;
  IndexSet active_;
  int bit_length_;
};

/// Basic procedure of the primal algorithm: Dunagan-Vempala steps on
/// v = Q_A y over all indices with v_k <= 0.
BpOutcome primal_bp(const ProjectionFactors& f, const BpOptions& opts = {});

/// Any basic procedure that honours the BpOutcome contract of primal_bp.
using PrimalBasicProcedure =
    std::function<BpOutcome(const ProjectionFactors&, const BpOptions&)>;

/// Main algorithm of the primal problem: rescales the null space by halving
/// cut columns and deletes columns with d_i <= 2^-L.
Certificate primal_ma(const Matrix& a, const SolverOptions& opts = {});
Certificate primal_ma(const Matrix& a, const SolverOptions& opts,
                      const PrimalBasicProcedure& bp);

}  // namespace ppdp
