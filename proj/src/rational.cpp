#include "ppdp/rational.hpp"

#include "ppdp/error.hpp"

namespace ppdp::rational {

RationalMatrix RationalMatrix::from_eigen(const Eigen::MatrixXd& a) {
  RationalMatrix out(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(a.cols()));
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(a(i, j));
    }
  }
  return out;
}

RationalMatrix RationalMatrix::columns(const std::vector<std::size_t>& idx) const {
  RationalMatrix out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t t = 0; t < idx.size(); ++t) out(i, t) = (*this)(i, idx[t]);
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "rational product shape mismatch");
  }
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& lhs = (*this)(i, k);
      if (lhs == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += lhs * other(k, j);
    }
  }
  return out;
}

std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pick = row;
    while (pick < a.rows() && a(pick, col) == 0) ++pick;
    if (pick == a.rows()) continue;
    if (pick != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pick, j), a(row, j));
    }
    const Rational lead = a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) /= lead;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rational factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix copy = a;
  return rref(copy).size();
}

std::vector<RationalVector> null_space(const RationalMatrix& a) {
  RationalMatrix r = a;
  const std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(a.cols());
    x[free] = 1;
    for (std::size_t t = 0; t < pivots.size(); ++t) x[pivots[t]] = -r(t, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RationalVector> solve_unique(const RationalMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  }
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  if (pivots.size() != a.cols()) return std::nullopt;
  RationalVector x(a.cols());
  for (std::size_t t = 0; t < pivots.size(); ++t) x[pivots[t]] = aug(t, a.cols());
  return x;
}

SupportResult max_support(const RationalMatrix& a) {
  const std::size_t n = a.cols();
  if (n >= 24) throw Error(ErrorCode::InstanceTooLarge, "support enumeration limited to n < 24");
  std::vector<bool> in_union(n, false);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::uint64_t{1} << j)) s.push_back(j);
    }
    // An extreme ray needs a one-dimensional kernel, so |S| <= rank + 1.
    if (s.size() > a.rows() + 1) continue;
    const std::vector<RationalVector> kernel = null_space(a.columns(s));
    if (kernel.size() != 1) continue;
    const RationalVector& g = kernel.front();
    const int sign = sgn(g.front());
    bool uniform = sign != 0;
    for (const Rational& value : g) uniform = uniform && sgn(value) == sign;
    if (!uniform) continue;
    for (std::size_t j : s) in_union[j] = true;
  }
  SupportResult out;
  for (std::size_t j = 0; j < n; ++j) {
    if (in_union[j]) out.support.push_back(j);
  }
  out.feasible = !out.support.empty();
  return out;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "inverse needs a square matrix");
  }
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

}  // namespace ppdp::rational
