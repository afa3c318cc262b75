// Command-line front end: solve one problem, generate corpora, benchmark.
//
// Exit codes: 0 primal feasible, 1 dual feasible (primal infeasible),
// 2 usage, input or solver error.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ppdp/bench.hpp"
#include "ppdp/error.hpp"
#include "ppdp/instances.hpp"

namespace fs = std::filesystem;

namespace {

struct Config {
  std::string mode = "ppdp";
  double c = ppdp::kDefaultStepSize;
  int bit_length = 0;
  std::size_t max_iters = 0;
  double tol = ppdp::kDefaultFeasTol;
  std::string input;
  ppdp::Index m = 50;
  ppdp::Index n = 100;
  long long lo = -100;
  long long hi = 100;
  std::uint64_t seed = 0;
  std::size_t count = 20;
  std::string modes = "primal,dual,ppdp";
  std::string format = "table";
  std::string out;
};

ppdp::SolverOptions solver_options(const Config& cfg) {
  ppdp::validate_step_size(cfg.c);
  ppdp::SolverOptions opts;
  opts.step_size = cfg.c;
  if (cfg.bit_length > 0) opts.bit_length = cfg.bit_length;
  opts.max_iters = cfg.max_iters;
  opts.feas_tol = cfg.tol;
  return opts;
}

ppdp::ModeSpec mode_or_throw(const std::string& name) {
  const auto mode = ppdp::parse_mode(name);
  if (!mode) throw ppdp::Error(ppdp::ErrorCode::InvalidArgument, "unknown mode '" + name + "'");
  return *mode;
}

// Writes to --out when given, stdout otherwise.
void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw ppdp::Error(ppdp::ErrorCode::IoError, "cannot write " + cfg.out);
  file << text;
}

int cmd_solve(const Config& cfg) {
  const ppdp::SolverOptions opts = solver_options(cfg);
  const ppdp::ModeSpec mode = mode_or_throw(cfg.mode);
  if (cfg.input.empty()) throw ppdp::Error(ppdp::ErrorCode::InvalidArgument, "--input is required");
  const ppdp::Problem problem = ppdp::read_problem(cfg.input);
  const ppdp::Matrix a = problem.b ? ppdp::reduce_general(problem.a, *problem.b) : problem.a;

  const ppdp::Certificate cert = ppdp::solve(a, mode, opts);
  const bool primal = cert.kind == ppdp::CertificateKind::PrimalFeasible ||
                      (cert.kind == ppdp::CertificateKind::Infeasible &&
                       cert.infeasible_system == ppdp::System::Dual);

  nlohmann::json report = ppdp::to_json(cert);
  report["mode"] = ppdp::to_string(mode);
  std::optional<ppdp::Vector> general;
  if (problem.b && cert.kind == ppdp::CertificateKind::PrimalFeasible) {
    general = ppdp::recover_general(cert.x);
    if (general) {
      report["general_solution"] = std::vector<double>(general->data(), general->data() + general->size());
    } else {
      report["general_solution"] = nullptr;
    }
  }

  if (cfg.format == "json") {
    emit(cfg, report.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "mode: " << ppdp::to_string(mode) << '\n'
         << "kind: " << ppdp::to_string(cert.kind);
    if (cert.kind == ppdp::CertificateKind::Infeasible) {
      text << " (" << (cert.infeasible_system == ppdp::System::Primal ? "primal" : "dual")
           << " system)";
    }
    text << '\n';
    if (cert.ppdp_case != 0) text << "case: " << cert.ppdp_case << '\n';
    const ppdp::VerificationReport& r = cert.report;
    text << "verified: " << (r.pass ? "yes" : "no") << " (" << r.kind << ", residual "
         << r.residual << ", min entry " << r.min_entry << ")\n";
    if (cert.kind == ppdp::CertificateKind::PrimalFeasible) {
      text << "x:";
      for (ppdp::Index i = 0; i < cert.x.size(); ++i) text << ' ' << cert.x(i);
      text << "\nsupport:";
      for (ppdp::Index i : cert.support) text << ' ' << i;
      text << '\n';
    } else if (cert.kind == ppdp::CertificateKind::DualFeasible) {
      text << "u:";
      for (ppdp::Index i = 0; i < cert.u.size(); ++i) text << ' ' << cert.u(i);
      text << '\n';
    }
    if (problem.b && cert.kind == ppdp::CertificateKind::PrimalFeasible) {
      if (general) {
        text << "general solution:";
        for (ppdp::Index i = 0; i < general->size(); ++i) text << ' ' << (*general)(i);
        text << '\n';
      } else {
        text << "general problem Ax = b, x >= 0 is infeasible\n";
      }
    }
    const ppdp::SolveStats& s = cert.stats;
    text << "bp iterations: " << s.bp_iterations << " in " << s.bp_calls << " calls\n"
         << "rescaling rounds: " << s.rescaling_rounds << " (L = " << s.bit_length << ")\n"
         << "wall ms: " << s.wall_ms << '\n';
    if (!cert.note.empty()) text << "note: " << cert.note << '\n';
    emit(cfg, text.str());
  }
  return primal ? 0 : 1;
}

std::vector<ppdp::NamedInstance> load_corpus(const Config& cfg) {
  std::vector<ppdp::NamedInstance> corpus;
  if (!cfg.input.empty()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(cfg.input)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
      ppdp::Problem p = ppdp::read_problem(file);
      corpus.push_back(ppdp::NamedInstance{file.stem().string(), 0, std::move(p.a)});
    }
    return corpus;
  }
  return ppdp::generate_corpus(
      ppdp::GeneratorSpec{cfg.m, cfg.n, cfg.lo, cfg.hi, cfg.seed, cfg.count});
}

int cmd_bench(const Config& cfg) {
  const ppdp::SolverOptions opts = solver_options(cfg);
  std::vector<ppdp::ModeSpec> modes;
  std::stringstream list(cfg.modes);
  for (std::string name; std::getline(list, name, ',');) {
    if (!name.empty()) modes.push_back(mode_or_throw(name));
  }
  const ppdp::BenchResult result = ppdp::run_bench(load_corpus(cfg), modes, opts);
  std::ostringstream text;
  if (cfg.format == "json") {
    text << ppdp::to_json(result).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    ppdp::write_csv(text, result);
  } else {
    ppdp::write_table(text, result);
  }
  emit(cfg, text.str());
  return 0;
}

int cmd_gen(const Config& cfg) {
  const ppdp::GeneratorSpec spec{cfg.m, cfg.n, cfg.lo, cfg.hi, cfg.seed, cfg.count};
  const std::vector<ppdp::Matrix> matrices = ppdp::generate(spec);
  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  fs::create_directories(dir);
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const std::uint64_t seed = cfg.seed + k;
    const fs::path file = dir / ("rand_" + std::to_string(cfg.m) + "x" + std::to_string(cfg.n) +
                                 "_s" + std::to_string(seed) + ".txt");
    ppdp::write_problem(file, matrices[k]);
    std::cout << file.string() << ' ' << cfg.m << ' ' << cfg.n << ' ' << seed << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projection-and-rescaling feasibility solver for Ax = 0, x >= 0"};
  app.require_subcommand(1);
  Config cfg;

  auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--c", cfg.c, "step size in (0,2)")->envname("PPDP_C");
    cmd->add_option("--L", cfg.bit_length, "bit length override")->envname("PPDP_L");
    cmd->add_option("--max-iters", cfg.max_iters, "iteration cap per basic procedure")
        ->envname("PPDP_MAX_ITERS");
    cmd->add_option("--tol", cfg.tol, "primal verification tolerance")->envname("PPDP_TOL");
    cmd->add_option("--format", cfg.format, "table, json or csv")->envname("PPDP_FORMAT");
    cmd->add_option("--out", cfg.out, "output file")->envname("PPDP_OUT");
  };
  auto add_generator_flags = [&](CLI::App* cmd) {
    cmd->add_option("--m", cfg.m, "rows")->envname("PPDP_M");
    cmd->add_option("--n", cfg.n, "columns")->envname("PPDP_N");
    cmd->add_option("--lo", cfg.lo, "smallest entry")->envname("PPDP_LO");
    cmd->add_option("--hi", cfg.hi, "largest entry")->envname("PPDP_HI");
    cmd->add_option("--seed", cfg.seed, "seed of the first matrix")->envname("PPDP_SEED");
    cmd->add_option("--count", cfg.count, "number of matrices")->envname("PPDP_COUNT");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve one problem file");
  add_solver_flags(solve);
  solve->add_option("--mode", cfg.mode, "primal, dual, ppdp or baseline:<rule>")
      ->envname("PPDP_MODE");
  solve->add_option("--input", cfg.input, "problem file")->envname("PPDP_INPUT");

  CLI::App* bench = app.add_subcommand("bench", "time solver modes on a corpus");
  add_solver_flags(bench);
  add_generator_flags(bench);
  bench->add_option("--modes", cfg.modes, "comma-separated modes")->envname("PPDP_MODES");
  bench->add_option("--input", cfg.input, "directory of problem files")->envname("PPDP_INPUT");

  CLI::App* gen = app.add_subcommand("gen", "write random integer matrices");
  add_generator_flags(gen);
  gen->add_option("--out", cfg.out, "output directory")->envname("PPDP_OUT");
  cfg.count = 1;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (bench->parsed() && bench->count("--count") == 0 && !std::getenv("PPDP_COUNT")) {
    cfg.count = 20;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg);
    if (bench->parsed()) return cmd_bench(cfg);
    return cmd_gen(cfg);
  } catch (const ppdp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
