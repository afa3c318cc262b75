#include <algorithm>
#include <cmath>
#include <limits>

#include "ppdp/error.hpp"
#include "ppdp/primal.hpp"

namespace ppdp {

ScalingState::ScalingState(Index n, int bit_length)
    : exponent_(static_cast<std::size_t>(n), 0),
      eliminated_(static_cast<std::size_t>(n), false),
      bit_length_(bit_length) {
  active_.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) active_[static_cast<std::size_t>(i)] = i;
}

double ScalingState::tau() const { return std::ldexp(1.0, -bit_length_); }

double ScalingState::d(Index i) const {
  return eliminated(i) ? 0.0 : std::ldexp(1.0, exponent(i));
}

Vector ScalingState::d() const {
  Vector out(size());
  for (Index i = 0; i < size(); ++i) out(i) = d(i);
  return out;
}

IndexSet ScalingState::eliminated_set() const {
  IndexSet h;
  for (Index i = 0; i < size(); ++i) {
    if (eliminated(i)) h.push_back(i);
  }
  return h;
}

void ScalingState::shift(const IndexSet& j_local, int delta) {
  for (Index t : j_local) {
    if (t < 0 || t >= static_cast<Index>(active_.size())) {
      throw Error(ErrorCode::IndexOutOfRange, "cut index outside active columns");
    }
    exponent_[static_cast<std::size_t>(active_[static_cast<std::size_t>(t)])] += delta;
  }
}

void ScalingState::shift_all(int delta) {
  for (Index i : active_) exponent_[static_cast<std::size_t>(i)] += delta;
}

void ScalingState::shift_original(const IndexSet& indices, int delta) {
  for (Index i : indices) {
    if (i < 0 || i >= size()) {
      throw Error(ErrorCode::IndexOutOfRange, "cut index outside matrix columns");
    }
    if (!eliminated(i)) exponent_[static_cast<std::size_t>(i)] += delta;
  }
}

namespace {

template <typename Pred>
Index eliminate_if(std::vector<int>& exponent, std::vector<bool>& eliminated,
                   IndexSet& active, Pred pred) {
  Index moved = 0;
  IndexSet kept;
  kept.reserve(active.size());
  for (Index i : active) {
    if (pred(exponent[static_cast<std::size_t>(i)])) {
      eliminated[static_cast<std::size_t>(i)] = true;
      ++moved;
    } else {
      kept.push_back(i);
    }
  }
  active = std::move(kept);
  return moved;
}

}  // namespace

Index ScalingState::eliminate_below_tau() {
  const int limit = -bit_length_;
  return eliminate_if(exponent_, eliminated_, active_,
                      [limit](int e) { return e <= limit; });
}

Index ScalingState::eliminate_above_inverse_tau() {
  const int limit = bit_length_;
  return eliminate_if(exponent_, eliminated_, active_,
                      [limit](int e) { return e >= limit; });
}

int ScalingState::max_active_exponent() const {
  if (active_.empty()) return 0;
  int best = std::numeric_limits<int>::min();
  for (Index i : active_) best = std::max(best, exponent_[static_cast<std::size_t>(i)]);
  return best;
}

Eigen::MatrixXd ScalingState::scaled_active(const Eigen::MatrixXd& a) const {
  const int top = max_active_exponent();
  Eigen::MatrixXd out(a.rows(), static_cast<Index>(active_.size()));
  for (std::size_t t = 0; t < active_.size(); ++t) {
    const Index i = active_[t];
    out.col(static_cast<Index>(t)) =
        a.col(i) * std::ldexp(1.0, exponent_[static_cast<std::size_t>(i)] - top);
  }
  return out;
}

Eigen::MatrixXd ScalingState::scaled_zeroed(const Eigen::MatrixXd& a) const {
  const int top = max_active_exponent();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(a.rows(), a.cols());
  for (Index i : active_) {
    out.col(i) = a.col(i) * std::ldexp(1.0, exponent_[static_cast<std::size_t>(i)] - top);
  }
  return out;
}

Vector ScalingState::expand(const Vector& w_active, Index n_total) const {
  const int top = max_active_exponent();
  Vector x = Vector::Zero(n_total);
  for (std::size_t t = 0; t < active_.size(); ++t) {
    const Index i = active_[t];
    x(i) = std::ldexp(w_active(static_cast<Index>(t)),
                      exponent_[static_cast<std::size_t>(i)] - top);
  }
  return x;
}

Vector ScalingState::expand_full(const Vector& w_full) const {
  const int top = max_active_exponent();
  Vector x = Vector::Zero(w_full.size());
  for (Index i : active_) {
    x(i) = std::ldexp(w_full(i), exponent_[static_cast<std::size_t>(i)] - top);
  }
  return x;
}

}  // namespace ppdp
