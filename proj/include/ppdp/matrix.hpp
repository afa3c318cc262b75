#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ppdp {

using Vector = Eigen::VectorXd;
using Index = Eigen::Index;
/// Column indices, 0-based, kept sorted ascending.
using IndexSet = std::vector<Index>;

/// Dense problem datum A (m x n). Entries are finite; when the
/// integer-source flag is set every entry is an exact integer.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(Eigen::MatrixXd entries, bool integer_source = false);

  static Matrix from_rows(
      std::initializer_list<std::initializer_list<double>> rows,
      bool integer_source = true);
  static Matrix identity(Index n);

  Index rows() const noexcept { return entries_.rows(); }
  Index cols() const noexcept { return entries_.cols(); }
  double operator()(Index i, Index j) const { return entries_(i, j); }
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  bool integer_source() const noexcept { return integer_source_; }
  bool is_zero() const { return entries_.isZero(0.0); }

  /// Max absolute row sum.
  double inf_norm() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.entries_.rows() == b.entries_.rows() &&
           a.entries_.cols() == b.entries_.cols() &&
           a.entries_ == b.entries_ && a.integer_source_ == b.integer_source_;
  }

 private:
  Eigen::MatrixXd entries_;
  bool integer_source_ = false;
};

/// Throws InvalidArgument unless 1 <= m <= n, the shape every solver expects.
void require_problem_shape(const Matrix& a);

/// Encoding-length surrogate: sum over entries of 1 + ceil(log2(|a_ij| + 1)),
/// plus n + m.
int encoding_length(const Matrix& a);

/// Bit length certified by Hadamard's inequality: the smallest L with
/// 2^L > 4 * n * prod_i max(1, ||row_i||_2). Large enough that any positive
/// coordinate of a normalized extreme solution of either Ax = 0, x >= 0 or
/// A^T u > 0 exceeds 2^-L.
int hadamard_bit_length(const Matrix& a);

}  // namespace ppdp
