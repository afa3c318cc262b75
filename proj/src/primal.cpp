#include "ppdp/primal.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "ppdp/error.hpp"
#include "side_engine.hpp"

namespace ppdp {

using detail::SideEngine;
using detail::strictly_positive;

BpOutcome primal_bp(const ProjectionFactors& f, const BpOptions& opts) {
  validate_step_size(opts.step_size);
  const Index r = f.cols();
  if (r < 1) {
    throw Error(ErrorCode::InvalidArgument, "basic procedure needs at least one column");
  }
  const Index n = opts.original_columns > 0 ? opts.original_columns : r;
  const std::size_t limit =
      opts.max_iters > 0 ? opts.max_iters : default_max_iters(r, opts.step_size);
  const double tol = detail::positivity_tolerance(f, opts.positivity_tol);

  SideEngine engine(f, Side::Primal, opts.step_size, opts.observers);
  engine.reset(Vector::Constant(r, 1.0 / static_cast<double>(r)));

  BpOutcome out;
  out.threshold = engine.threshold();
  auto finish = [&](BpCase kind) {
    out.kind = kind;
    out.y = engine.y();
    out.v = engine.v();
    out.z = engine.z();
    if (opts.observers && opts.observers->on_bp) {
      opts.observers->on_bp(BpRecord{Side::Primal, out.iterations, r, n});
    }
    return out;
  };

  // Terminal tests and cut decisions are confirmed on vectors recomputed
  // from y, so incremental drift can never produce a false outcome.
  bool fresh = true;
  while (true) {
    if (strictly_positive(engine.z(), tol, engine.scale())) {
      if (!fresh) {
        engine.refresh();
        fresh = true;
        continue;
      }
      return finish(BpCase::PrimalFeasible);
    }
    if (r == n && strictly_positive(engine.v(), tol, engine.scale())) {
      if (!fresh) {
        engine.refresh();
        fresh = true;
        continue;
      }
      return finish(BpCase::DualFeasible);
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
                  "primal basic procedure exceeded " + std::to_string(limit) + " iterations");
    }
    engine.step(d, out.iterations);
    ++out.iterations;
    fresh = false;
  }
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void record_bp(SolveStats& stats, std::size_t iterations, std::size_t repeats = 1) {
  stats.bp_calls += repeats;
  stats.bp_iterations += iterations * repeats;
  stats.max_bp_iterations = std::max(stats.max_bp_iterations, iterations);
}

}  // namespace

Certificate primal_ma(const Matrix& a, const SolverOptions& opts) {
  return primal_ma(a, opts, [](const ProjectionFactors& f, const BpOptions& bp_opts) {
    return primal_bp(f, bp_opts);
  });
}

Certificate primal_ma(const Matrix& a, const SolverOptions& opts,
                      const PrimalBasicProcedure& bp) {
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
  bp_opts.original_columns = n;
  bp_opts.positivity_tol = opts.positivity_tol;
  bp_opts.observers = &opts.observers;

  while (true) {
    if (scaling.active().empty()) {
      cert.kind = CertificateKind::Infeasible;
      cert.infeasible_system = System::Primal;
      cert.note = "every column reached d_i <= 2^-L";
      break;
    }
    if (stale) {
      current = scaling.scaled_active(a.entries());
      factors = compute_projection_factors(current, opts.rank_tol);
      ++cert.stats.factorizations;
      if (factors.rank() < a.rows()) cert.stats.rank_collapse = true;
      stale = false;
    }
    bp_opts.max_iters = opts.max_iters;
    const BpOutcome out = bp(factors, bp_opts);
    record_bp(cert.stats, out.iterations);

    if (out.kind == BpCase::PrimalFeasible) {
      cert.kind = CertificateKind::PrimalFeasible;
      cert.x = scaling.expand(out.z, n);
      cert.report = verify_primal(a, cert.x, opts.feas_tol);
      cert.support = positive_support(cert.x);
      break;
    }
    if (out.kind == BpCase::DualFeasible) {
      cert.kind = CertificateKind::DualFeasible;
      cert.u = factors.row_space_coefficients(out.y);
      cert.report = verify_dual(a, cert.u, opts.dual_tol);
      break;
    }

    if (opts.observers.on_cut) {
      opts.observers.on_cut(CutRecord{Side::Primal, current, out.cut});
    }
    const auto r = static_cast<Index>(scaling.active().size());
    if (static_cast<Index>(out.cut.size()) == r) {
      // Halving every active column leaves Q_A unchanged, so the basic
      // procedure would repeat the same cut until the first column drops
      // below tau. Apply all of those rounds at once.
      int rounds = std::numeric_limits<int>::max();
      for (Index i : scaling.active()) rounds = std::min(rounds, scaling.exponent(i) + bit_length);
      rounds = std::max(rounds, 1);
      scaling.shift_all(-rounds);
      cert.stats.rescaling_rounds += static_cast<std::size_t>(rounds);
      record_bp(cert.stats, out.iterations, static_cast<std::size_t>(rounds - 1));
    } else {
      scaling.shift(out.cut, -1);
      ++cert.stats.rescaling_rounds;
      stale = true;
    }
    if (scaling.eliminate_below_tau() > 0) stale = true;
  }

  cert.stats.wall_ms = elapsed_ms(start);
  if ((cert.kind == CertificateKind::PrimalFeasible ||
       cert.kind == CertificateKind::DualFeasible) &&
      !cert.report.pass) {
    throw Error(ErrorCode::NumericalBreakdown,
                "primal main algorithm produced a certificate that fails verification");
  }
  return cert;
}

}  // namespace ppdp
