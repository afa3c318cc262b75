#include "ppdp/dual.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "ppdp/error.hpp"
#include "side_engine.hpp"

namespace ppdp {

using detail::nonnegative;
using detail::SideEngine;
using detail::strictly_positive;

BpOutcome dual_bp(const ProjectionFactors& f, const BpOptions& opts) {
  validate_step_size(opts.step_size);
  const Index n = f.cols();
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "basic procedure needs at least one column");
  }
  const std::size_t limit =
      opts.max_iters > 0 ? opts.max_iters : default_max_iters(n, opts.step_size);
  const double tol = detail::positivity_tolerance(f, opts.positivity_tol);

  SideEngine engine(f, Side::Dual, opts.step_size, opts.observers);
  engine.reset(Vector::Constant(n, 1.0 / static_cast<double>(n)));

  BpOutcome out;
  out.threshold = engine.threshold();
  auto finish = [&](BpCase kind) {
    out.kind = kind;
    out.y = engine.y();
    out.v = engine.v();
    out.z = engine.z();
    if (opts.observers && opts.observers->on_bp) {
      opts.observers->on_bp(BpRecord{Side::Dual, out.iterations, n, n});
    }
    return out;
  };

  bool fresh = true;
  while (true) {
    if (strictly_positive(engine.v(), tol, engine.scale())) {
      if (!fresh) {
        engine.refresh();
        fresh = true;
        continue;
      }
      return finish(BpCase::DualFeasible);
    }
    if (nonnegative(engine.z(), tol, engine.scale())) {
      if (!fresh) {
        engine.refresh();
        fresh = true;
        continue;
      }
      return finish(BpCase::PrimalFeasible);
    }
    const SideEngine::Direction d = engine.direction();
    if (!engine.accepts(d)) {
      if (!fresh) {
        engine.refresh();
        fresh = true;
        continue;
      }
      out.cut = engine.cut().j;
      return finish(BpCase::Cut);
    }
    if (out.iterations >= limit) {
      throw Error(ErrorCode::IterationLimitExceeded,
                  "dual basic procedure exceeded " + std::to_string(limit) + " iterations");
    }
    engine.step(d, out.iterations);
    ++out.iterations;
    fresh = false;
  }
}

namespace {

void record_bp(SolveStats& stats, std::size_t iterations, std::size_t repeats = 1) {
  stats.bp_calls += repeats;
  stats.bp_iterations += iterations * repeats;
  stats.max_bp_iterations = std::max(stats.max_bp_iterations, iterations);
}

}  // namespace

Certificate dual_ma(const Matrix& a, const SolverOptions& opts) {
  require_problem_shape(a);
  validate_step_size(opts.step_size);
  const auto start = std::chrono::steady_clock::now();
  const Index n = a.cols();
  const int bit_length = resolve_bit_length(a, opts);

  ScalingState scaling(n, bit_length);
  Certificate cert;
  cert.stats.bit_length = bit_length;

  ProjectionFactors factors;
  Eigen::MatrixXd current;
  bool stale = true;

  BpOptions bp_opts;
  bp_opts.step_size = opts.step_size;
  bp_opts.max_iters = opts.max_iters;
  bp_opts.positivity_tol = opts.positivity_tol;
  bp_opts.observers = &opts.observers;

  auto declare_dual_infeasible = [&](const char* why) {
    cert.kind = CertificateKind::Infeasible;
    cert.infeasible_system = System::Dual;
    cert.note = why;
  };

  while (true) {
    if (scaling.active().empty()) {
      declare_dual_infeasible("every column reached d_i >= 2^L");
      break;
    }
    if (stale) {
      current = scaling.scaled_zeroed(a.entries());
      factors = compute_projection_factors(current, opts.rank_tol);
      ++cert.stats.factorizations;
      if (factors.rank() < a.rows()) cert.stats.rank_collapse = true;
      stale = false;
    }
    const BpOutcome out = dual_bp(factors, bp_opts);
    record_bp(cert.stats, out.iterations);

    if (out.kind == BpCase::DualFeasible) {
      cert.kind = CertificateKind::DualFeasible;
      cert.u = factors.row_space_coefficients(out.y);
      cert.report = verify_dual(a, cert.u, opts.dual_tol);
      break;
    }
    if (out.kind == BpCase::PrimalFeasible) {
      // z >= 0 up to tolerance; round the tiny negatives to zero.
      Vector x = scaling.expand_full(out.z).cwiseMax(0.0);
      VerificationReport report = verify_primal(a, x, opts.feas_tol);
      if (!report.pass && !scaling.eliminated_set().empty()) {
        // z lives on zeroed columns only; some d_i already reached 2^L.
        declare_dual_infeasible("z >= 0 is carried by zeroed columns");
        break;
      }
      cert.kind = CertificateKind::PrimalFeasible;
      cert.x = std::move(x);
      cert.report = std::move(report);
      cert.support = positive_support(cert.x);
      break;
    }

    if (opts.observers.on_cut) {
      opts.observers.on_cut(CutRecord{Side::Dual, current, out.cut});
    }
    IndexSet live;
    for (Index i : out.cut) {
      if (!scaling.eliminated(i)) live.push_back(i);
    }
    if (live.empty()) {
      declare_dual_infeasible("cut falls on zeroed columns only");
      break;
    }
    if (live.size() == scaling.active().size()) {
      // Doubling every live column leaves P_A unchanged; apply all the
      // identical rounds up to the first column reaching 2^L at once.
      int rounds = std::numeric_limits<int>::max();
      for (Index i : scaling.active()) rounds = std::min(rounds, bit_length - scaling.exponent(i));
      rounds = std::max(rounds, 1);
      scaling.shift_all(rounds);
      cert.stats.rescaling_rounds += static_cast<std::size_t>(rounds);
      record_bp(cert.stats, out.iterations, static_cast<std::size_t>(rounds - 1));
    } else {
      scaling.shift_original(live, 1);
      ++cert.stats.rescaling_rounds;
      stale = true;
    }
    if (scaling.eliminate_above_inverse_tau() > 0) stale = true;
  }

  cert.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  if ((cert.kind == CertificateKind::PrimalFeasible ||
       cert.kind == CertificateKind::DualFeasible) &&
      !cert.report.pass) {
    throw Error(ErrorCode::NumericalBreakdown,
                "dual main algorithm produced a certificate that fails verification");
  }
  return cert;
}

}  // namespace ppdp
