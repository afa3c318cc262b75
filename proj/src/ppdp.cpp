#include "ppdp/ppdp.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "ppdp/error.hpp"
#include "side_engine.hpp"

namespace ppdp {

using detail::SideEngine;
using detail::strictly_positive;

namespace {

/// Recomputes a side whose vectors were updated incrementally and reports
/// false, so the caller re-evaluates before committing to an outcome.
bool confirm(SideEngine& e, bool& fresh) {
  if (fresh) return true;
  e.refresh();
  fresh = true;
  return false;
}

}  // namespace

PpdpBpOutcome ppdp_bp(const ProjectionFactors* dual_side, const ProjectionFactors* primal_side,
                      const Vector& y1, const Vector& y2, const BpOptions& opts) {
  validate_step_size(opts.step_size);
  if (!dual_side && !primal_side) {
    throw Error(ErrorCode::InvalidArgument, "primal-dual basic procedure needs a side");
  }
  const double tol1 =
      dual_side ? detail::positivity_tolerance(*dual_side, opts.positivity_tol) : 0.0;
  const double tol2 =
      primal_side ? detail::positivity_tolerance(*primal_side, opts.positivity_tol) : 0.0;

  std::optional<SideEngine> s1, s2;
  Index width = 0;
  if (dual_side) {
    if (dual_side->cols() < 1 || y1.size() != dual_side->cols()) {
      throw Error(ErrorCode::DimensionMismatch, "y1 does not match the dual-side matrix");
    }
    s1.emplace(*dual_side, Side::Dual, opts.step_size, opts.observers);
    s1->reset(y1);
    width = std::max(width, dual_side->cols());
  }
  if (primal_side) {
    if (primal_side->cols() < 1 || y2.size() != primal_side->cols()) {
      throw Error(ErrorCode::DimensionMismatch, "y2 does not match the primal-side matrix");
    }
    s2.emplace(*primal_side, Side::Primal, opts.step_size, opts.observers);
    s2->reset(y2);
    width = std::max(width, primal_side->cols());
  }
  const Index r = primal_side ? primal_side->cols() : 0;
  const Index n = opts.original_columns > 0 ? opts.original_columns : width;
  const std::size_t limit =
      opts.max_iters > 0 ? opts.max_iters : default_max_iters(width, opts.step_size);

  PpdpBpOutcome out;
  auto finish = [&](int kind) {
    out.kind = kind;
    if (s1) {
      out.y1 = s1->y();
      out.z1 = s1->z();
      out.v1 = s1->v();
    } else {
      out.y1 = y1;
    }
    if (s2) {
      out.y2 = s2->y();
      out.v2 = s2->v();
      out.z2 = s2->z();
    } else {
      out.y2 = y2;
    }
    if (opts.observers && opts.observers->on_bp) {
      if (s1) opts.observers->on_bp(BpRecord{Side::Dual, out.iterations, s1->columns(), n});
      if (s2) opts.observers->on_bp(BpRecord{Side::Primal, out.iterations, r, n});
    }
    return out;
  };

  bool fresh1 = true;
  bool fresh2 = true;
  while (true) {
    if (s1) {
      if (strictly_positive(s1->v(), tol1, s1->scale())) {
        if (confirm(*s1, fresh1)) return finish(2);
        continue;
      }
      if (strictly_positive(s1->z(), tol1, s1->scale())) {
        if (confirm(*s1, fresh1)) return finish(1);
        continue;
      }
    }
    if (s2) {
      if (r == n && strictly_positive(s2->v(), tol2, s2->scale())) {
        if (confirm(*s2, fresh2)) return finish(4);
        continue;
      }
      if (strictly_positive(s2->z(), tol2, s2->scale())) {
        if (confirm(*s2, fresh2)) return finish(3);
        continue;
      }
    }
    if (out.iterations >= limit) {
      throw Error(ErrorCode::IterationLimitExceeded,
                  "primal-dual basic procedure exceeded " + std::to_string(limit) +
                      " iterations");
    }
    if (s1) {
      SideEngine::Direction d = s1->direction();
      if (!s1->accepts(d) && !confirm(*s1, fresh1)) d = s1->direction();
      if (!s1->accepts(d)) {
        out.cut1 = s1->cut().j;
        return finish(-1);
      }
      s1->step(d, out.iterations);
      fresh1 = false;
    }
    if (s2) {
      SideEngine::Direction d = s2->direction();
      if (!s2->accepts(d) && !confirm(*s2, fresh2)) d = s2->direction();
      if (!s2->accepts(d)) {
        out.cut2 = s2->cut().j;
        return finish(-2);
      }
      s2->step(d, out.iterations);
      fresh2 = false;
    }
    ++out.iterations;
  }
}

Certificate ppdp_ma(const Matrix& a, const SolverOptions& opts) {
  require_problem_shape(a);
  validate_step_size(opts.step_size);
  const auto start = std::chrono::steady_clock::now();
  const Index n = a.cols();
  const int bit_length = resolve_bit_length(a, opts);

  // Side 1 rescales the row space (dual system), side 2 the null space.
  ScalingState d1(n, bit_length);
  ScalingState d2(n, bit_length);
  bool alive1 = true;
  bool alive2 = true;
  bool stale1 = true;
  bool stale2 = true;
  ProjectionFactors f1, f2;
  Eigen::MatrixXd a1, a2;
  const Vector y_start = Vector::Constant(n, 1.0 / static_cast<double>(n));
  Vector y1 = y_start;
  Vector y2 = y_start;

  Certificate cert;
  cert.stats.bit_length = bit_length;

  BpOptions bp_opts;
  bp_opts.step_size = opts.step_size;
  bp_opts.max_iters = opts.max_iters;
  bp_opts.original_columns = n;
  bp_opts.positivity_tol = opts.positivity_tol;
  bp_opts.observers = &opts.observers;

  while (true) {
    if (!alive1 && !alive2) {
      throw Error(ErrorCode::NumericalBreakdown,
                  "both sides of the primal-dual algorithm exhausted their scaling budget");
    }
    if (alive1 && stale1) {
      a1 = d1.scaled_zeroed(a.entries());
      f1 = compute_projection_factors(a1, opts.rank_tol);
      ++cert.stats.factorizations;
      if (f1.rank() < a.rows()) cert.stats.rank_collapse = true;
      stale1 = false;
    }
    if (alive2 && stale2) {
      a2 = d2.scaled_active(a.entries());
      f2 = compute_projection_factors(a2, opts.rank_tol);
      ++cert.stats.factorizations;
      if (f2.rank() < a.rows()) cert.stats.rank_collapse = true;
      stale2 = false;
    }

    const PpdpBpOutcome out =
        ppdp_bp(alive1 ? &f1 : nullptr, alive2 ? &f2 : nullptr, y1, y2, bp_opts);
    ++cert.stats.bp_calls;
    cert.stats.bp_iterations += out.iterations;
    cert.stats.max_bp_iterations = std::max(cert.stats.max_bp_iterations, out.iterations);

    if (out.kind > 0) {
      cert.ppdp_case = out.kind;
      switch (out.kind) {
        case 1:
          cert.kind = CertificateKind::PrimalFeasible;
          cert.x = d1.expand_full(out.z1);
          break;
        case 2:
          cert.kind = CertificateKind::DualFeasible;
          cert.u = f1.row_space_coefficients(out.y1);
          break;
        case 3:
          cert.kind = CertificateKind::PrimalFeasible;
          cert.x = d2.expand(out.z2, n);
          break;
        default:
          cert.kind = CertificateKind::DualFeasible;
          cert.u = f2.row_space_coefficients(out.y2);
          break;
      }
      if (cert.kind == CertificateKind::PrimalFeasible) {
        cert.report = verify_primal(a, cert.x, opts.feas_tol);
        cert.support = positive_support(cert.x);
      } else {
        cert.report = verify_dual(a, cert.u, opts.dual_tol);
      }
      break;
    }

    ++cert.stats.rescaling_rounds;
    if (out.kind == -1) {
      if (opts.observers.on_cut) opts.observers.on_cut(CutRecord{Side::Dual, a1, out.cut1});
      y2 = out.y2;
      IndexSet live;
      for (Index i : out.cut1) {
        if (!d1.eliminated(i)) live.push_back(i);
      }
      d1.shift_original(live, 1);
      // A uniform doubling leaves P_{A1} unchanged and the factors valid.
      if (live.size() != d1.active().size()) stale1 = true;
      // Some d1_i >= 2^L certifies that A^T u > 0 has no solution; the
      // primal side alone finishes the job.
      if (live.empty() || d1.eliminate_above_inverse_tau() > 0) {
        alive1 = false;
        cert.note = "dual side exhausted; primal side continued alone";
      }
      y1 = y_start;
    } else {
      if (opts.observers.on_cut) opts.observers.on_cut(CutRecord{Side::Primal, a2, out.cut2});
      y1 = out.y1;
      const bool uniform = out.cut2.size() == d2.active().size();
      d2.shift(out.cut2, -1);
      if (!uniform) stale2 = true;
      if (d2.eliminate_below_tau() > 0) stale2 = true;
      if (d2.active().empty()) {
        alive2 = false;
        cert.note = "primal side exhausted; dual side continued alone";
      } else {
        y2 = Vector::Constant(static_cast<Index>(d2.active().size()),
                              1.0 / static_cast<double>(d2.active().size()));
      }
    }
  }

  cert.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  if (!cert.report.pass) {
    throw Error(ErrorCode::NumericalBreakdown,
                "primal-dual algorithm produced a certificate that fails verification");
  }
  return cert;
}

}  // namespace ppdp
