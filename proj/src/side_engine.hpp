#pragma once

#include <algorithm>
#include <cmath>

#include "ppdp/cuts.hpp"
#include "ppdp/projection.hpp"
#include "ppdp/solver.hpp"

namespace ppdp::detail {

// Positivity is judged against the scale of y, the vector w was split
// from: a component of y that projects to roundoff must not count.

/// Every w_i > tol * scale.
inline bool strictly_positive(const Vector& w, double tol, double scale) {
  return w.size() > 0 && scale > 0.0 && w.minCoeff() > tol * scale;
}

/// Every w_i >= -tol * scale and some |w_i| > tol * scale.
inline bool nonnegative(const Vector& w, double tol, double scale) {
  return w.size() > 0 && scale > 0.0 && w.minCoeff() >= -tol * scale &&
         w.cwiseAbs().maxCoeff() > tol * scale;
}

/// Norm below which a projected indicator sum is roundoff: the exact
/// vector may be zero, and stepping along noise would blow y up.
inline double negligible_norm(const ProjectionFactors& f) {
  return std::max(1e-14, 10.0 * f.noise());
}

/// Positivity tolerance relative to ||y||_inf, never below the noise of the
/// factorization that produced the tested vector.
inline double positivity_tolerance(const ProjectionFactors& f, double tol) {
  return std::max(tol, 10.0 * f.noise());
}

/// threshold = 1 / (2 r^{3/2}).
inline double bp_threshold(Index r) {
  const double rr = static_cast<double>(r);
  return 1.0 / (2.0 * rr * std::sqrt(rr));
}

/// One side of a basic procedure: the iterate y and its split y = v + z,
/// with multi-index Dunagan-Vempala steps on v (primal side, row space) or
/// on z (dual side, null space).
class SideEngine {
 public:
  struct Direction {
    IndexSet k;
    Vector dir;
    double norm = 0.0;
    double alpha = 0.0;
  };

  SideEngine(const ProjectionFactors& f, Side side, double step_size,
             const Observers* observers)
      : f_(&f),
        side_(side),
        c_(step_size),
        threshold_(bp_threshold(f.cols())),
        observers_(observers) {}

  void reset(const Vector& y) {
    y_ = y;
    refresh();
  }

  /// Recomputes the split from y, discarding accumulated drift.
  void refresh() {
    if (side_ == Side::Primal) {
      v_ = f_->apply_q(y_);
      z_ = y_ - v_;
    } else {
      z_ = f_->apply_p(y_);
      v_ = y_ - z_;
    }
  }

  const Vector& y() const noexcept { return y_; }
  const Vector& v() const noexcept { return v_; }
  const Vector& z() const noexcept { return z_; }
  /// The vector driven toward zero: v on the primal side, z on the dual side.
  const Vector& updated() const noexcept { return side_ == Side::Primal ? v_ : z_; }
  double threshold() const noexcept { return threshold_; }
  double scale() const { return y_.cwiseAbs().maxCoeff(); }
  Index columns() const noexcept { return f_->cols(); }

  Direction direction() const {
    Direction d;
    const Vector& w = updated();
    for (Index i = 0; i < w.size(); ++i) {
      if (w(i) <= 0.0) d.k.push_back(i);
    }
    if (d.k.empty()) return d;
    d.dir = f_->indicator_sum(d.k, side_ == Side::Primal ? Subspace::Row : Subspace::Null);
    d.norm = d.dir.norm();
    // A direction at roundoff level leaves alpha = 0, which selects the cut.
    if (d.norm > negligible_norm(*f_) * std::sqrt(static_cast<double>(d.k.size()))) {
      d.alpha = d.dir.dot(w) / d.norm;
    }
    return d;
  }

  bool accepts(const Direction& d) const { return d.alpha <= -threshold_; }

  void step(const Direction& d, std::size_t iteration) {
    const double before = observers_ && observers_->on_step ? updated().squaredNorm() : 0.0;
    const double scale = c_ * d.alpha / d.norm;
    for (Index k : d.k) y_(k) -= scale;
    if (side_ == Side::Primal) {
      v_ -= scale * d.dir;
      z_ = y_ - v_;
    } else {
      z_ -= scale * d.dir;
      v_ = y_ - z_;
    }
    if (observers_ && observers_->on_step) {
      observers_->on_step(StepRecord{side_, iteration, f_->cols(), c_, d.alpha, threshold_,
                                     before, updated().squaredNorm(),
                                     static_cast<Index>(d.k.size())});
    }
  }

  CutResult cut() const {
    return find_cut(updated(), side_ == Side::Primal ? CutSpace::Primal : CutSpace::Dual);
  }

 private:
  const ProjectionFactors* f_;
  Side side_;
  double c_;
  double threshold_;
  const Observers* observers_;
  Vector y_, v_, z_;
};

}  // namespace ppdp::detail
