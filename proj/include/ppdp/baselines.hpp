#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppdp/primal.hpp"
#include "ppdp/solver.hpp"

namespace ppdp {

enum class RuleTag { VonNeumann, Perceptron, DunaganVempala, MultiIndexDV };

struct UpdateRule {
  RuleTag tag = RuleTag::MultiIndexDV;
  /// Relaxation for the Dunagan-Vempala rules; ignored by the others.
  double step_size = kDefaultStepSize;
};

/// "von-neumann", "perceptron", "dunagan-vempala", "multi-dv".
std::optional<RuleTag> parse_rule(std::string_view name);
std::string to_string(RuleTag tag);

/// y' = (1 - beta) y + beta a_k, x' = (1 - beta) x + beta e_k with beta
/// minimizing ||y'|| on the segment. Throws DegenerateDirection if y == a_k.
std::pair<Vector, Vector> von_neumann_step(const Vector& y, const Vector& x,
                                           const Vector& a_k, Index k);

/// y' = y + a_k, x' = x + e_k.
std::pair<Vector, Vector> perceptron_step(const Vector& y, const Vector& x,
                                          const Vector& a_k, Index k);

/// y' = y + beta a_k with beta = -<y, a_k> / ||a_k||^2, so <y', a_k> = 0.
/// Throws ZeroColumn if a_k = 0.
Vector dunagan_vempala_step(const Vector& y, const Vector& a_k);

struct TraceRow {
  std::size_t iteration;
  double norm_sq;
  double alpha;
  Index k_size;
};

struct BaselineRun {
  BpOutcome outcome;
  std::vector<TraceRow> trace;
  bool budget_exhausted = false;
};

/// Runs a basic procedure in the row space of A with the given update rule.
/// Single-index rules pick the most negative v_k (lowest index on ties).
/// A cut is attempted whenever the step's normalized progress alpha is above
/// -threshold; an empty cut falls back to taking the step. budget = 0 uses
/// the default iteration guard.
BaselineRun run_baseline_bp(const ProjectionFactors& f, const UpdateRule& rule,
                            std::size_t budget, const BpOptions& opts = {});

/// Adapter for primal_ma; throws BudgetExhausted when the budget runs out.
PrimalBasicProcedure baseline_procedure(UpdateRule rule, std::size_t budget);

/// CSV with header "iteration,norm_sq,alpha,k_size".
void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& trace);

}  // namespace ppdp
