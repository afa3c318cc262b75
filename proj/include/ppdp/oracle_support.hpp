#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ppdp/matrix.hpp"
#include "ppdp/rational.hpp"

/// Test-support oracles that never touch the solver's linear algebra.
namespace ppdp::oracle {

inline constexpr const char* kOracleVersion = "ppdp-oracle-1";

struct ExplicitProjections {
  Eigen::MatrixXd p;
  Eigen::MatrixXd q;
  /// True when computed in exact rational arithmetic.
  bool exact = false;
};

/// P_A and Q_A as explicit n x n matrices. Rational when A is integer with
/// A A^T invertible and m <= 12; otherwise long double Gram-Schmidt with
/// reorthogonalization. Throws InstanceTooLarge for n > 64.
ExplicitProjections materialize_projections(const Matrix& a);

/// All m x n matrices over the entry set in lexicographic row-major order.
/// Throws InstanceTooLarge above 10^6 matrices.
std::vector<Matrix> enumerate_tiny_family(Index m, Index n,
                                          const std::vector<long long>& entries);

/// Exact max of x_j over {A x = 0, x in [0,1]^n} for every j, by vertex
/// enumeration. Throws InstanceTooLarge for n > 10.
std::vector<rational::Rational> normalized_primal_maxima(const Eigen::MatrixXd& a);

/// Exact sup of x_j over {x in row(A), x in (0,1]^n}; nullopt when that set
/// is empty. Throws InstanceTooLarge for n > 10.
std::optional<std::vector<rational::Rational>> normalized_dual_maxima(
    const Eigen::MatrixXd& a);

/// Exact feasibility of A^T u > 0.
bool dual_feasible_exact(const Eigen::MatrixXd& a);

struct GoldenRecord {
  std::string id;
  std::string operation;
  nlohmann::json input;
  std::string input_digest;
  nlohmann::json expected;
  std::string expected_digest;
  std::string provenance;
  std::string oracle_version = kOracleVersion;
};

/// FNV-1a 64 over the compact JSON dump, as 16 hex digits.
std::string digest(const nlohmann::json& value);

nlohmann::json to_json(const GoldenRecord& record);
GoldenRecord golden_from_json(const nlohmann::json& j);

/// Recomputes every golden record from the oracles in this module.
std::vector<GoldenRecord> compute_golden_records();

}  // namespace ppdp::oracle
