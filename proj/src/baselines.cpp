#include "ppdp/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "ppdp/cuts.hpp"
#include "ppdp/error.hpp"
#include "side_engine.hpp"

namespace ppdp {

using detail::SideEngine;
using detail::strictly_positive;

std::optional<RuleTag> parse_rule(std::string_view name) {
  if (name == "von-neumann") return RuleTag::VonNeumann;
  if (name == "perceptron") return RuleTag::Perceptron;
  if (name == "dunagan-vempala") return RuleTag::DunaganVempala;
  if (name == "multi-dv") return RuleTag::MultiIndexDV;
  return std::nullopt;
}

std::string to_string(RuleTag tag) {
  switch (tag) {
    case RuleTag::VonNeumann: return "von-neumann";
    case RuleTag::Perceptron: return "perceptron";
    case RuleTag::DunaganVempala: return "dunagan-vempala";
    case RuleTag::MultiIndexDV: return "multi-dv";
  }
  return "unknown";
}

std::pair<Vector, Vector> von_neumann_step(const Vector& y, const Vector& x,
                                           const Vector& a_k, Index k) {
  if (y.size() != a_k.size()) {
    throw Error(ErrorCode::DimensionMismatch, "y and a_k differ in length");
  }
  if (k < 0 || k >= x.size()) throw Error(ErrorCode::IndexOutOfRange, "k outside x");
  const Vector diff = y - a_k;
  const double denom = diff.squaredNorm();
  if (denom == 0.0) throw Error(ErrorCode::DegenerateDirection, "y equals a_k");
  const double beta = std::clamp(y.dot(diff) / denom, 0.0, 1.0);
  Vector x_new = (1.0 - beta) * x;
  x_new(k) += beta;
  return {(1.0 - beta) * y + beta * a_k, std::move(x_new)};
}

std::pair<Vector, Vector> perceptron_step(const Vector& y, const Vector& x,
                                          const Vector& a_k, Index k) {
  if (y.size() != a_k.size()) {
    throw Error(ErrorCode::DimensionMismatch, "y and a_k differ in length");
  }
  if (k < 0 || k >= x.size()) throw Error(ErrorCode::IndexOutOfRange, "k outside x");
  Vector x_new = x;
  x_new(k) += 1.0;
  return {y + a_k, std::move(x_new)};
}

Vector dunagan_vempala_step(const Vector& y, const Vector& a_k) {
  if (y.size() != a_k.size()) {
    throw Error(ErrorCode::DimensionMismatch, "y and a_k differ in length");
  }
  const double norm_sq = a_k.squaredNorm();
  if (norm_sq == 0.0) throw Error(ErrorCode::ZeroColumn, "a_k is zero");
  return y - (y.dot(a_k) / norm_sq) * a_k;
}

namespace {

struct SingleChoice {
  Index k = -1;
  Vector q;
  double alpha = 0.0;
};

// Most negative v_k among usable columns, lowest index on ties.
SingleChoice choose_single(const ProjectionFactors& f, const Vector& v) {
  SingleChoice best;
  double best_value = 0.0;
  for (Index k = 0; k < v.size(); ++k) {
    if (v(k) > 0.0) continue;
    if (best.k >= 0 && v(k) >= best_value) continue;
    Vector q = f.indicator_sum({k}, Subspace::Row);
    const double norm = q.norm();
    if (norm <= detail::negligible_norm(f)) continue;
    best.k = k;
    best.q = std::move(q);
    best.alpha = v(k) / norm;
    best_value = v(k);
  }
  return best;
}

}  // namespace

BaselineRun run_baseline_bp(const ProjectionFactors& f, const UpdateRule& rule,
                            std::size_t budget, const BpOptions& opts) {
  if (rule.tag == RuleTag::MultiIndexDV || rule.tag == RuleTag::DunaganVempala) {
    validate_step_size(rule.step_size);
  }
  const Index r = f.cols();
  if (r < 1) {
    throw Error(ErrorCode::InvalidArgument, "basic procedure needs at least one column");
  }
  const Index n = opts.original_columns > 0 ? opts.original_columns : r;
  const std::size_t limit = budget > 0 ? budget : default_max_iters(r, rule.step_size);
  const double tol = detail::positivity_tolerance(f, opts.positivity_tol);

  // The multi-index rule shares the engine of the primal basic procedure;
  // single-index rules keep y and v = Q_A y here.
  SideEngine engine(f, Side::Primal, rule.step_size, opts.observers);
  engine.reset(Vector::Constant(r, 1.0 / static_cast<double>(r)));
  Vector y = engine.y();
  Vector v = engine.v();
  const bool multi = rule.tag == RuleTag::MultiIndexDV;

  BaselineRun run;
  BpOutcome& out = run.outcome;
  out.threshold = engine.threshold();
  auto finish = [&](BpCase kind) {
    out.kind = kind;
    out.y = multi ? engine.y() : y;
    out.v = multi ? engine.v() : v;
    out.z = out.y - out.v;
    return run;
  };
  auto refresh = [&] {
    if (multi) {
      engine.refresh();
    } else {
      v = f.apply_q(y);
    }
  };

  bool fresh = true;
  while (true) {
    const Vector& cur_v = multi ? engine.v() : v;
    const Vector& cur_y = multi ? engine.y() : y;
    const Vector z = cur_y - cur_v;
    const double scale = cur_y.cwiseAbs().maxCoeff();
    const bool primal = strictly_positive(z, tol, scale);
    const bool dual = !primal && r == n && strictly_positive(cur_v, tol, scale);
    if (primal || dual) {
      if (!fresh) {
        refresh();
        fresh = true;
        continue;
      }
      return finish(primal ? BpCase::PrimalFeasible : BpCase::DualFeasible);
    }

    SideEngine::Direction multi_dir;
    SingleChoice single;
    double alpha = 0.0;
    if (multi) {
      multi_dir = engine.direction();
      alpha = multi_dir.alpha;
    } else {
      single = choose_single(f, v);
      alpha = single.alpha;
    }
    const bool usable = multi ? !multi_dir.k.empty() && multi_dir.norm > 0.0 && alpha < 0.0
                              : single.k >= 0;
    if (alpha > -out.threshold || !usable) {
      if (!fresh) {
        refresh();
        fresh = true;
        continue;
      }
      const CutResult cut = evaluate_cut(cur_v);
      if (!cut.j.empty()) {
        out.cut = cut.j;
        return finish(BpCase::Cut);
      }
      if (!usable) {
        throw Error(ErrorCode::NumericalBreakdown,
                    "basic procedure has neither a step nor a cut");
      }
    }
    if (out.iterations >= limit) {
      run.budget_exhausted = true;
      out.kind = BpCase::Cut;
      out.y = cur_y;
      out.v = cur_v;
      out.z = cur_y - cur_v;
      return run;
    }

    const double before = cur_v.squaredNorm();
    Index k_size = 1;
    if (multi) {
      engine.step(multi_dir, out.iterations);
      k_size = static_cast<Index>(multi_dir.k.size());
    } else {
      const Index k = single.k;
      switch (rule.tag) {
        case RuleTag::VonNeumann: {
          auto [v_new, y_new] = von_neumann_step(v, y, single.q, k);
          v = std::move(v_new);
          y = std::move(y_new);
          break;
        }
        case RuleTag::Perceptron: {
          auto [v_new, y_new] = perceptron_step(v, y, single.q, k);
          v = std::move(v_new);
          y = std::move(y_new);
          break;
        }
        default: {
          // q_k^T v = v_k since Q_A is symmetric and idempotent.
          const double beta = -rule.step_size * v(k) / single.q.squaredNorm();
          v += beta * single.q;
          y(k) += beta;
          break;
        }
      }
      if (opts.observers && opts.observers->on_step) {
        opts.observers->on_step(StepRecord{Side::Primal, out.iterations, r, rule.step_size, alpha,
                                           out.threshold, before, v.squaredNorm(), 1});
      }
    }
    run.trace.push_back(TraceRow{out.iterations, (multi ? engine.v() : v).squaredNorm(), alpha,
                                 k_size});
    ++out.iterations;
    fresh = false;
  }
}

PrimalBasicProcedure baseline_procedure(UpdateRule rule, std::size_t budget) {
  return [rule, budget](const ProjectionFactors& f, const BpOptions& opts) {
    BaselineRun run = run_baseline_bp(f, rule, budget, opts);
    if (run.budget_exhausted) {
      throw Error(ErrorCode::BudgetExhausted,
                  to_string(rule.tag) + " basic procedure used its budget of " +
                      std::to_string(run.outcome.iterations) + " iterations");
    }
    if (opts.observers && opts.observers->on_bp) {
      opts.observers->on_bp(BpRecord{Side::Primal, run.outcome.iterations, f.cols(),
                                     opts.original_columns > 0 ? opts.original_columns
                                                               : f.cols()});
    }
    return std::move(run.outcome);
  };
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& trace) {
  out << "iteration,norm_sq,alpha,k_size\n";
  for (const TraceRow& row : trace) {
    out << row.iteration << ',' << row.norm_sq << ',' << row.alpha << ',' << row.k_size << '\n';
  }
}

}  // namespace ppdp
