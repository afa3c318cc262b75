#pragma once

#include <cstdint>

#include "ppdp/matrix.hpp"

namespace ppdp {

enum class Subspace { Null, Row };

/// Cached rank-revealing QR of A^T truncated to the numerical rank.
///
/// Q_A = V V^T and P_A = I - V V^T are applied through the orthonormal
/// n x rank basis V of the row space,
/// so each application costs O(n * rank) <= O(mn) and no n x n projection
/// is ever formed. Immutable after construction.
class ProjectionFactors {
 public:
  ProjectionFactors() = default;

  Index rows() const noexcept { return rows_; }
  /// Active column count r.
  Index cols() const noexcept { return cols_; }
  Index rank() const noexcept { return basis_.cols(); }
  double rank_tolerance() const noexcept { return rank_tol_; }
  /// True when A had no nonzero entry: Q_A = 0 and P_A = I.
  bool zero_matrix() const noexcept { return zero_matrix_; }
  bool rank_deficient() const noexcept { return rank() < rows_; }
  /// Expected absolute error of an applied projection per unit input norm,
  /// max(m, n) * eps * |R_00| / |R_kk| with k the last kept pivot.
  double noise() const noexcept { return noise_; }

  /// Orthonormal basis of the row space, n x rank.
  const Eigen::MatrixXd& row_basis() const noexcept { return basis_; }

  Vector apply_q(const Vector& y) const;
  Vector apply_p(const Vector& y) const;

  /// Q_A 1_K or P_A 1_K without materializing the projection.
  Vector indicator_sum(const IndexSet& k, Subspace space) const;

  /// w = (A A^T)^+ A y, so that A^T w = Q_A y.
  Vector row_space_coefficients(const Vector& y) const;

  friend ProjectionFactors compute_projection_factors(const Eigen::MatrixXd&,
                                                      double);

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  Eigen::MatrixXd basis_;
  Eigen::MatrixXd r_lead_;
  Eigen::VectorXi permutation_;
  double rank_tol_ = 0.0;
  double noise_ = 0.0;
  bool zero_matrix_ = false;
};

/// rank_tol = 0 selects max(m, n) * eps * |R_00|, the leading pivot
/// standing in for sigma_max.
ProjectionFactors compute_projection_factors(const Eigen::MatrixXd& a,
                                             double rank_tol = 0.0);
ProjectionFactors compute_projection_factors(const Matrix& a,
                                             double rank_tol = 0.0);

Vector apply_q(const ProjectionFactors& f, const Vector& y);
Vector apply_p(const ProjectionFactors& f, const Vector& y);

/// Throws EmptyIndexSet or IndexOutOfRange on bad K.
Vector project_indicator_sum(const ProjectionFactors& f, const IndexSet& k,
                             Subspace space);

/// Sampling lower estimate of rho(Q) = max_{|x|=1} min_i <x, q_i/|q_i|>
/// over the columns of Q_A (Row) or P_A (Null). Zero columns are skipped.
/// Deterministic for a fixed seed.
double estimate_rho(const ProjectionFactors& f, Subspace space,
                    std::size_t samples, std::uint64_t seed);

}  // namespace ppdp
