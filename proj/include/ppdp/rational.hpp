#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "ppdp/matrix.hpp"

/// Exact rational linear algebra for the oracles. Shares no code with the
/// floating-point solver path.
namespace ppdp::rational {

using Rational = mpq_class;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Exact conversion: every double is a dyadic rational.
  static RationalMatrix from_eigen(const Eigen::MatrixXd& a);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RationalMatrix columns(const std::vector<std::size_t>& idx) const;
  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using RationalVector = std::vector<Rational>;

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);

/// Basis of {x : A x = 0}, one vector per free column.
std::vector<RationalVector> null_space(const RationalMatrix& a);

/// The unique solution of A x = b, or nullopt when there is none or it is
/// not unique.
std::optional<RationalVector> solve_unique(const RationalMatrix& a,
                                           const RationalVector& b);

struct SupportResult {
  bool feasible = false;
  std::vector<std::size_t> support;
};

/// Maximum support of A x = 0, x >= 0: the union of the supports S for which
/// null(A_S) is one-dimensional and spanned by a strictly positive vector
/// (the extreme rays of the cone). Enumerates all 2^n subsets.
SupportResult max_support(const RationalMatrix& a);

/// Inverse of a square nonsingular matrix, nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

}  // namespace ppdp::rational
