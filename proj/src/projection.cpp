#include "ppdp/projection.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "ppdp/error.hpp"

namespace ppdp {

namespace {

void check_length(const ProjectionFactors& f, const Vector& y) {
  if (y.size() != f.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector length " + std::to_string(y.size()) +
                    " does not match column count " + std::to_string(f.cols()));
  }
}

// Columns of the projection with norm at or below this are treated as zero.
constexpr double kZeroColumnNorm = 1e-10;

}  // namespace

ProjectionFactors compute_projection_factors(const Eigen::MatrixXd& a,
                                             double rank_tol) {
  if (rank_tol < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "rank tolerance must be >= 0");
  }
  if (!a.allFinite()) {
    throw Error(ErrorCode::NonFiniteInput, "matrix has NaN or infinite entries");
  }
  ProjectionFactors f;
  f.rows_ = a.rows();
  f.cols_ = a.cols();
  if (a.size() == 0 || a.isZero(0.0)) {
    f.zero_matrix_ = a.size() > 0;
    f.basis_.resize(a.cols(), 0);
    f.rank_tol_ = rank_tol;
    return f;
  }

  // Column-pivoted QR of A^T: A^T P = Q R. The leading rank columns of Q
  // span the row space; |R_00| estimates sigma_max.
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a.transpose());
  const Index k = std::min(a.rows(), a.cols());
  const Vector diag = qr.matrixQR().diagonal().head(k).cwiseAbs();
  const double lead = diag.size() > 0 ? diag(0) : 0.0;
  f.rank_tol_ = rank_tol > 0.0 ? rank_tol
                               : static_cast<double>(std::max(a.rows(), a.cols())) *
                                     std::numeric_limits<double>::epsilon() * lead;
  Index rank = 0;
  while (rank < k && diag(rank) > f.rank_tol_) {
    ++rank;
  }
  f.basis_ = qr.householderQ() * Eigen::MatrixXd::Identity(a.cols(), rank);
  f.r_lead_ = qr.matrixQR().topLeftCorner(rank, rank).triangularView<Eigen::Upper>();
  f.permutation_ = qr.colsPermutation().indices();
  // Subspace error of a backward-stable QR grows like eps * sigma_max / sigma_min.
  if (rank > 0) {
    f.noise_ = static_cast<double>(std::max(a.rows(), a.cols())) *
               std::numeric_limits<double>::epsilon() * lead / diag(rank - 1);
  }
  return f;
}

ProjectionFactors compute_projection_factors(const Matrix& a, double rank_tol) {
  return compute_projection_factors(a.entries(), rank_tol);
}

Vector ProjectionFactors::apply_q(const Vector& y) const {
  check_length(*this, y);
  if (rank() == 0) return Vector::Zero(cols_);
  return basis_ * (basis_.transpose() * y);
}

Vector ProjectionFactors::apply_p(const Vector& y) const {
  return y - apply_q(y);
}

Vector ProjectionFactors::indicator_sum(const IndexSet& k, Subspace space) const {
  Vector coeff = Vector::Zero(rank());
  for (Index idx : k) {
    coeff += basis_.row(idx).transpose();
  }
  Vector q = basis_ * coeff;
  if (space == Subspace::Row) return q;
  Vector p = -q;
  for (Index idx : k) {
    p(idx) += 1.0;
  }
  return p;
}

Vector ProjectionFactors::row_space_coefficients(const Vector& y) const {
  check_length(*this, y);
  if (rank() == 0) return Vector::Zero(rows_);
  // u = P [R11^{-1} Q1^T y; 0] gives A^T u = Q1 Q1^T y.
  const Vector t = r_lead_.triangularView<Eigen::Upper>().solve(basis_.transpose() * y);
  Vector u = Vector::Zero(rows_);
  for (Index i = 0; i < rank(); ++i) u(permutation_(i)) = t(i);
  return u;
}

Vector apply_q(const ProjectionFactors& f, const Vector& y) { return f.apply_q(y); }

Vector apply_p(const ProjectionFactors& f, const Vector& y) { return f.apply_p(y); }

Vector project_indicator_sum(const ProjectionFactors& f, const IndexSet& k,
                             Subspace space) {
  if (k.empty()) {
    throw Error(ErrorCode::EmptyIndexSet, "indicator set K is empty");
  }
  for (Index idx : k) {
    if (idx < 0 || idx >= f.cols()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "index " + std::to_string(idx) + " outside [0, " +
                      std::to_string(f.cols()) + ")");
    }
  }
  return f.indicator_sum(k, space);
}

double estimate_rho(const ProjectionFactors& f, Subspace space,
                    std::size_t samples, std::uint64_t seed) {
  if (samples == 0) {
    throw Error(ErrorCode::InvalidArgument, "estimate_rho needs samples >= 1");
  }
  const Index n = f.cols();
  const Eigen::MatrixXd& basis = f.row_basis();

  // Column norms of the chosen projection; zero columns drop out of the min.
  std::vector<Index> live;
  std::vector<double> norms;
  for (Index i = 0; i < n; ++i) {
    double norm = 0.0;
    if (space == Subspace::Row) {
      norm = basis.row(i).norm();
    } else {
      Vector col = -(basis * basis.row(i).transpose());
      col(i) += 1.0;
      norm = col.norm();
    }
    if (norm > kZeroColumnNorm) {
      live.push_back(i);
      norms.push_back(norm);
    }
  }
  if (live.empty()) {
    throw Error(ErrorCode::ZeroColumns, "every projection column is zero");
  }

  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double best = -std::numeric_limits<double>::infinity();
  Vector x(n);
  for (std::size_t s = 0; s < samples; ++s) {
    for (Index i = 0; i < n; ++i) x(i) = normal(engine);
    const double len = x.norm();
    if (len == 0.0) continue;
    x /= len;
    const Vector w = basis.transpose() * x;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < live.size(); ++t) {
      const Index i = live[t];
      const double q_part = basis.row(i).dot(w);
      const double inner = space == Subspace::Row ? q_part : x(i) - q_part;
      worst = std::min(worst, inner / norms[t]);
    }
    best = std::max(best, worst);
  }
  return best;
}

}  // namespace ppdp
