#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppdp/baselines.hpp"
#include "ppdp/certificate.hpp"
#include "ppdp/instances.hpp"
#include "ppdp/solver.hpp"

namespace ppdp {

enum class Mode { Primal, Dual, Ppdp, Baseline };

struct ModeSpec {
  Mode mode = Mode::Ppdp;
  RuleTag rule = RuleTag::MultiIndexDV;
  /// Budget per basic procedure call for baseline modes; 0 = default guard.
  std::size_t budget = 0;
};

/// "primal", "dual", "ppdp" or "baseline:<rule>".
std::optional<ModeSpec> parse_mode(std::string_view name);
std::string to_string(const ModeSpec& mode);

/// Dispatches to primal_ma, dual_ma, ppdp_ma or primal_ma with a baseline
/// basic procedure.
Certificate solve(const Matrix& a, const ModeSpec& mode,
                  const SolverOptions& opts);

struct NamedInstance {
  std::string name;
  std::uint64_t seed = 0;
  Matrix a;
};

std::vector<NamedInstance> generate_corpus(const GeneratorSpec& spec);

struct BenchRun {
  std::string instance;
  std::uint64_t seed = 0;
  std::string mode;
  /// Class label: true when Ax = 0, x >= 0, x != 0 is feasible.
  bool feasible = false;
  std::string kind;
  bool verified = false;
  double wall_ms = 0.0;
  std::size_t bp_iterations = 0;
  std::size_t rescaling_rounds = 0;
  std::string error;
};

struct BenchCell {
  std::string mode;
  std::string instance_class;
  std::size_t count = 0;
  std::size_t failures = 0;
  double median_ms = 0.0;
  double mean_ms = 0.0;
  double median_bp_iterations = 0.0;
  double mean_rescaling_rounds = 0.0;
};

struct BenchResult {
  std::vector<BenchRun> runs;
  std::vector<BenchCell> cells;
  std::size_t feasible_instances = 0;
  std::size_t infeasible_instances = 0;
};

/// Labels every instance by a verified primal-dual certificate, then times
/// each mode. Throws InvalidArgument for an empty corpus or mode list.
BenchResult run_bench(const std::vector<NamedInstance>& corpus,
                      const std::vector<ModeSpec>& modes,
                      const SolverOptions& opts);

double median(std::vector<double> values);

void write_table(std::ostream& out, const BenchResult& result);
void write_csv(std::ostream& out, const BenchResult& result);
nlohmann::json to_json(const BenchResult& result);

}  // namespace ppdp
