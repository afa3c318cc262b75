#include "ppdp/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "ppdp/dual.hpp"
#include "ppdp/error.hpp"
#include "ppdp/ppdp.hpp"
#include "ppdp/primal.hpp"

namespace ppdp {

std::optional<ModeSpec> parse_mode(std::string_view name) {
  ModeSpec spec;
  if (name == "primal") {
    spec.mode = Mode::Primal;
  } else if (name == "dual") {
    spec.mode = Mode::Dual;
  } else if (name == "ppdp") {
    spec.mode = Mode::Ppdp;
  } else if (name.substr(0, 9) == "baseline:") {
    const auto rule = parse_rule(name.substr(9));
    if (!rule) return std::nullopt;
    spec.mode = Mode::Baseline;
    spec.rule = *rule;
  } else {
    return std::nullopt;
  }
  return spec;
}

std::string to_string(const ModeSpec& mode) {
  switch (mode.mode) {
    case Mode::Primal: return "primal";
    case Mode::Dual: return "dual";
    case Mode::Ppdp: return "ppdp";
    case Mode::Baseline: return "baseline:" + to_string(mode.rule);
  }
  return "unknown";
}

Certificate solve(const Matrix& a, const ModeSpec& mode, const SolverOptions& opts) {
  switch (mode.mode) {
    case Mode::Primal: return primal_ma(a, opts);
    case Mode::Dual: return dual_ma(a, opts);
    case Mode::Ppdp: return ppdp_ma(a, opts);
    case Mode::Baseline:
      return primal_ma(a, opts,
                       baseline_procedure(UpdateRule{mode.rule, opts.step_size}, mode.budget));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown mode");
}

std::vector<NamedInstance> generate_corpus(const GeneratorSpec& spec) {
  std::vector<Matrix> matrices = generate(spec);
  std::vector<NamedInstance> corpus;
  corpus.reserve(matrices.size());
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const std::uint64_t seed = spec.seed + k;
    corpus.push_back(NamedInstance{"rand_" + std::to_string(spec.m) + "x" +
                                       std::to_string(spec.n) + "_s" + std::to_string(seed),
                                   seed, std::move(matrices[k])});
  }
  return corpus;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

namespace {

BenchRun record(const NamedInstance& inst, const ModeSpec& mode, bool feasible,
                const Certificate& cert) {
  BenchRun run;
  run.instance = inst.name;
  run.seed = inst.seed;
  run.mode = to_string(mode);
  run.feasible = feasible;
  run.kind = to_string(cert.kind);
  run.verified = cert.report.pass;
  run.wall_ms = cert.stats.wall_ms;
  run.bp_iterations = cert.stats.bp_iterations;
  run.rescaling_rounds = cert.stats.rescaling_rounds;
  // An Infeasible declaration must agree with the label to count as correct.
  if (cert.kind == CertificateKind::Infeasible) {
    run.verified = (cert.infeasible_system == System::Primal) != feasible;
  } else if ((cert.kind == CertificateKind::PrimalFeasible) != feasible) {
    run.verified = false;
  }
  return run;
}

}  // namespace

BenchResult run_bench(const std::vector<NamedInstance>& corpus,
                      const std::vector<ModeSpec>& modes, const SolverOptions& opts) {
  if (corpus.empty()) throw Error(ErrorCode::InvalidArgument, "empty corpus");
  if (modes.empty()) throw Error(ErrorCode::InvalidArgument, "no modes selected");

  BenchResult result;
  std::vector<bool> labels;
  std::vector<Certificate> labelling;
  labels.reserve(corpus.size());
  for (const NamedInstance& inst : corpus) {
    Certificate cert = ppdp_ma(inst.a, opts);
    const bool feasible = cert.kind == CertificateKind::PrimalFeasible;
    labels.push_back(feasible);
    (feasible ? result.feasible_instances : result.infeasible_instances) += 1;
    labelling.push_back(std::move(cert));
  }

  for (const ModeSpec& mode : modes) {
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      const NamedInstance& inst = corpus[k];
      if (mode.mode == Mode::Ppdp) {
        // The labelling run is exactly this solve.
        result.runs.push_back(record(inst, mode, labels[k], labelling[k]));
        continue;
      }
      try {
        result.runs.push_back(record(inst, mode, labels[k], solve(inst.a, mode, opts)));
      } catch (const Error& e) {
        BenchRun run;
        run.instance = inst.name;
        run.seed = inst.seed;
        run.mode = to_string(mode);
        run.feasible = labels[k];
        run.kind = "error";
        run.error = std::string(to_string(e.code())) + ": " + e.what();
        result.runs.push_back(std::move(run));
      }
    }
  }

  for (const ModeSpec& mode : modes) {
    const std::string name = to_string(mode);
    for (const bool feasible : {true, false}) {
      BenchCell cell;
      cell.mode = name;
      cell.instance_class = feasible ? "feasible" : "infeasible";
      std::vector<double> times, iterations, rounds;
      for (const BenchRun& run : result.runs) {
        if (run.mode != name || run.feasible != feasible) continue;
        ++cell.count;
        if (!run.error.empty() || !run.verified) {
          ++cell.failures;
          continue;
        }
        times.push_back(run.wall_ms);
        iterations.push_back(static_cast<double>(run.bp_iterations));
        rounds.push_back(static_cast<double>(run.rescaling_rounds));
      }
      if (!times.empty()) {
        const double count = static_cast<double>(times.size());
        cell.median_ms = median(times);
        cell.mean_ms = std::accumulate(times.begin(), times.end(), 0.0) / count;
        cell.median_bp_iterations = median(iterations);
        cell.mean_rescaling_rounds = std::accumulate(rounds.begin(), rounds.end(), 0.0) / count;
      }
      result.cells.push_back(cell);
    }
  }
  return result;
}

void write_table(std::ostream& out, const BenchResult& result) {
  char line[256];
  std::snprintf(line, sizeof line, "%-28s %-10s %5s %5s %12s %12s %12s %10s\n", "mode", "class",
                "n", "fail", "median_ms", "mean_ms", "median_iter", "mean_resc");
  out << line;
  for (const BenchCell& c : result.cells) {
    std::snprintf(line, sizeof line, "%-28s %-10s %5zu %5zu %12.3f %12.3f %12.1f %10.1f\n",
                  c.mode.c_str(), c.instance_class.c_str(), c.count, c.failures, c.median_ms,
                  c.mean_ms, c.median_bp_iterations, c.mean_rescaling_rounds);
    out << line;
  }
  out << "instances: " << result.feasible_instances << " feasible, "
      << result.infeasible_instances << " infeasible\n";
}

void write_csv(std::ostream& out, const BenchResult& result) {
  out << "instance,seed,mode,class,kind,verified,wall_ms,bp_iterations,rescaling_rounds,error\n";
  for (const BenchRun& r : result.runs) {
    std::string error = r.error;
    std::replace(error.begin(), error.end(), ',', ';');
    out << r.instance << ',' << r.seed << ',' << r.mode << ','
        << (r.feasible ? "feasible" : "infeasible") << ',' << r.kind << ','
        << (r.verified ? 1 : 0) << ',' << r.wall_ms << ',' << r.bp_iterations << ','
        << r.rescaling_rounds << ',' << error << '\n';
  }
}

nlohmann::json to_json(const BenchResult& result) {
  nlohmann::json runs = nlohmann::json::array();
  for (const BenchRun& r : result.runs) {
    nlohmann::json j = {{"instance", r.instance},
                        {"seed", r.seed},
                        {"mode", r.mode},
                        {"class", r.feasible ? "feasible" : "infeasible"},
                        {"kind", r.kind},
                        {"verified", r.verified},
                        {"wall_ms", r.wall_ms},
                        {"bp_iterations", r.bp_iterations},
                        {"rescaling_rounds", r.rescaling_rounds}};
    if (!r.error.empty()) j["error"] = r.error;
    runs.push_back(std::move(j));
  }
  nlohmann::json cells = nlohmann::json::array();
  for (const BenchCell& c : result.cells) {
    cells.push_back({{"mode", c.mode},
                     {"class", c.instance_class},
                     {"count", c.count},
                     {"failures", c.failures},
                     {"median_ms", c.median_ms},
                     {"mean_ms", c.mean_ms},
                     {"median_bp_iterations", c.median_bp_iterations},
                     {"mean_rescaling_rounds", c.mean_rescaling_rounds}});
  }
  return {{"feasible_instances", result.feasible_instances},
          {"infeasible_instances", result.infeasible_instances},
          {"cells", cells},
          {"runs", runs}};
}

}  // namespace ppdp
