#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "ppdp/matrix.hpp"

namespace ppdp {

enum class CertificateKind { PrimalFeasible, DualFeasible, Infeasible };

/// Which system an Infeasible certificate declares empty.
enum class System { Primal, Dual };

struct SolveStats {
  std::size_t bp_calls = 0;
  std::size_t bp_iterations = 0;
  std::size_t max_bp_iterations = 0;
  std::size_t rescaling_rounds = 0;
  std::size_t factorizations = 0;
  int bit_length = 0;
  double wall_ms = 0.0;
  bool rank_collapse = false;
};

struct VerificationReport {
  /// "primal", "dual" or "none".
  std::string kind = "none";
  bool pass = false;
  /// primal: ||A x||_inf / (||A||_inf ||x||_inf); dual: min_i (A^T u)_i / scale.
  double residual = 0.0;
  /// primal: min_i x_i / ||x||_inf; dual: min_i (A^T u)_i.
  double min_entry = 0.0;
  /// primal: ||x||_inf; dual: scale = ||A^T||_inf ||u||_inf.
  double scale = 0.0;
  IndexSet support;
};

/// Outcome of a main algorithm. x and support refer to the original column
/// indices of A; u has length m.
struct Certificate {
  CertificateKind kind = CertificateKind::Infeasible;
  System infeasible_system = System::Primal;
  Vector x;
  Vector u;
  IndexSet support;
  VerificationReport report;
  SolveStats stats;
  /// Terminating case of the primal-dual driver (1..4), 0 for other solvers.
  int ppdp_case = 0;
  std::string note;
};

inline constexpr double kDefaultFeasTol = 1e-9;
inline constexpr double kDefaultDualTol = 1e-10;

/// Passes iff, with x scaled to ||x||_inf = 1: ||Ax||_inf <= tol ||A||_inf,
/// min_i x_i >= -tol and x != 0. Throws DimensionMismatch.
VerificationReport verify_primal(const Matrix& a, const Vector& x,
                                 double tol = kDefaultFeasTol);

/// Passes iff min_i (A^T u)_i > tol * ||A^T||_inf * ||u||_inf.
VerificationReport verify_dual(const Matrix& a, const Vector& u,
                               double tol = kDefaultDualTol);

/// Indices i with x_i > 0.
IndexSet positive_support(const Vector& x);

struct OracleVerdict {
  bool feasible = false;
  IndexSet support;
};

/// Exact maximum support of Ax = 0, x >= 0 by rational enumeration of
/// candidate supports. Requires an integer matrix with m <= 4, n <= 8 and
/// |a_ij| <= 10, otherwise throws InstanceTooLarge.
OracleVerdict max_support_oracle(const Matrix& a);

/// [A | -b], the homogeneous form of Ax = b, x >= 0.
Matrix reduce_general(const Matrix& a, const Vector& b);

/// x_bar(0..n-1) / x_bar(n) when the last coordinate is positive.
std::optional<Vector> recover_general(const Vector& x_bar);

std::string to_string(CertificateKind kind);

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const SolveStats& stats);
nlohmann::json to_json(const Certificate& cert);

}  // namespace ppdp
