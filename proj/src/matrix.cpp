#include "ppdp/matrix.hpp"

#include <cmath>

#include "ppdp/error.hpp"

namespace ppdp {

Matrix::Matrix(Eigen::MatrixXd entries, bool integer_source)
    : entries_(std::move(entries)), integer_source_(integer_source) {
  if (!entries_.allFinite()) {
    throw Error(ErrorCode::NonFiniteInput, "matrix has NaN or infinite entries");
  }
  if (integer_source_) {
    for (Index j = 0; j < entries_.cols(); ++j) {
      for (Index i = 0; i < entries_.rows(); ++i) {
        if (entries_(i, j) != std::round(entries_(i, j))) {
          throw Error(ErrorCode::InvalidArgument,
                      "integer-source matrix has a fractional entry");
        }
      }
    }
  }
}

Matrix Matrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows,
    bool integer_source) {
  const auto m = static_cast<Index>(rows.size());
  const auto n = m == 0 ? Index{0} : static_cast<Index>(rows.begin()->size());
  Eigen::MatrixXd entries(m, n);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n) {
      throw Error(ErrorCode::DimensionMismatch, "ragged row list");
    }
    Index j = 0;
    for (double value : row) {
      entries(i, j++) = value;
    }
    ++i;
  }
  return Matrix(std::move(entries), integer_source);
}

Matrix Matrix::identity(Index n) {
  return Matrix(Eigen::MatrixXd::Identity(n, n), true);
}

double Matrix::inf_norm() const {
  if (entries_.size() == 0) return 0.0;
  return entries_.cwiseAbs().rowwise().sum().maxCoeff();
}

void require_problem_shape(const Matrix& a) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw Error(ErrorCode::InvalidArgument, "matrix must have m >= 1 and n >= 1");
  }
  if (a.rows() > a.cols()) {
    throw Error(ErrorCode::InvalidArgument, "problem matrix needs m <= n");
  }
}

int encoding_length(const Matrix& a) {
  double total = static_cast<double>(a.rows() + a.cols());
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      total += 1.0 + std::ceil(std::log2(std::abs(a(i, j)) + 1.0));
    }
  }
  return static_cast<int>(total);
}

int hadamard_bit_length(const Matrix& a) {
  double log_bound = std::log2(4.0 * static_cast<double>(a.cols()));
  for (Index i = 0; i < a.rows(); ++i) {
    log_bound += std::log2(std::max(1.0, a.entries().row(i).norm()));
  }
  return static_cast<int>(std::floor(log_bound)) + 1;
}

}  // namespace ppdp
