#include <gtest/gtest.h>

#include <random>

#include "ppdp/certificate.hpp"
#include "ppdp/cuts.hpp"
#include "ppdp/dual.hpp"
#include "ppdp/error.hpp"
#include "support.hpp"

namespace ppdp {
namespace {

using testing::random_integer_matrix;

Matrix identity_pair(Index k) {
  Eigen::MatrixXd a(k, 2 * k);
  a << Eigen::MatrixXd::Identity(k, k), -Eigen::MatrixXd::Identity(k, k);
  return Matrix(std::move(a), true);
}

TEST(DualBp, IdentityPairIsPrimalFeasible) {
  const auto f = compute_projection_factors(identity_pair(2));
  const BpOutcome out = dual_bp(f);
  EXPECT_EQ(out.kind, BpCase::PrimalFeasible);
  EXPECT_EQ(out.iterations, 0u);
  for (Index i = 0; i < 4; ++i) EXPECT_NEAR(out.z(i), 0.25, 1e-15);
}

TEST(DualBp, IdentityIsDualFeasible) {
  const auto f = compute_projection_factors(Matrix::identity(2));
  const BpOutcome out = dual_bp(f);
  EXPECT_EQ(out.kind, BpCase::DualFeasible);
  EXPECT_EQ(out.iterations, 0u);
}

TEST(DualBp, DualCheckComesFirstButFailsOnNullVector) {
  const auto f = compute_projection_factors(Matrix::from_rows({{1, -1}}));
  const BpOutcome out = dual_bp(f);
  EXPECT_EQ(out.kind, BpCase::PrimalFeasible);
  EXPECT_NEAR(out.v.cwiseAbs().maxCoeff(), 0.0, 1e-15);
}

TEST(DualBp, OutcomeContractAndDecrease) {
  std::mt19937_64 rng(31);
  const double c = 1.8;
  std::size_t steps = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Matrix a = random_integer_matrix(rng, 4, 10, 10);
    const auto f = compute_projection_factors(a);
    Observers obs;
    obs.on_step = [&](const StepRecord& s) {
      EXPECT_EQ(s.side, Side::Dual);
      const double n = static_cast<double>(s.active_columns);
      EXPECT_LE(s.norm_sq_after, s.norm_sq_before - (2 * c - c * c) / (4 * n * n * n) + 1e-12);
      ++steps;
    };
    BpOptions opts;
    opts.observers = &obs;
    const BpOutcome out = dual_bp(f, opts);
    EXPECT_GE(out.y.minCoeff(), 1.0 / 10.0 - 1e-15);
    switch (out.kind) {
      case BpCase::DualFeasible:
        EXPECT_GT(out.v.minCoeff(), 0.0);
        break;
      case BpCase::PrimalFeasible:
        EXPECT_GE(out.z.minCoeff(), -1e-11 * out.y.maxCoeff());
        break;
      case BpCase::Cut:
        ASSERT_FALSE(out.cut.empty());
        for (Index j : out.cut) EXPECT_LE(bound_dual(out.z, j), 0.5 + 1e-12);
        break;
    }
  }
  EXPECT_GT(steps, 50u);
}

TEST(DualMa, Identity) {
  const Certificate cert = dual_ma(Matrix::identity(2));
  ASSERT_EQ(cert.kind, CertificateKind::DualFeasible);
  EXPECT_TRUE(cert.report.pass);
  EXPECT_NEAR(cert.u(0), 0.5, 1e-12);
  EXPECT_NEAR(cert.u(1), 0.5, 1e-12);
}

TEST(DualMa, IdentityPair) {
  const Certificate cert = dual_ma(identity_pair(2));
  ASSERT_EQ(cert.kind, CertificateKind::PrimalFeasible);
  EXPECT_TRUE(cert.report.pass);
  for (Index i = 0; i < 4; ++i) EXPECT_NEAR(cert.x(i), 0.25, 1e-12);
}

TEST(DualMa, OnesRow) {
  const Certificate cert = dual_ma(Matrix::from_rows({{1, 1}}));
  ASSERT_EQ(cert.kind, CertificateKind::DualFeasible);
  ASSERT_EQ(cert.u.size(), 1);
  EXPECT_NEAR(cert.u(0), 0.5, 1e-12);
}

TEST(DualMa, VerdictMatchesOracle) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> pick_m(1, 3);
    const Index m = pick_m(rng);
    std::uniform_int_distribution<int> pick_n(static_cast<int>(m), 6);
    const Index n = pick_n(rng);
    const Matrix a = random_integer_matrix(rng, m, n, 3);
    const OracleVerdict truth = max_support_oracle(a);
    const Certificate cert = dual_ma(a);
    if (cert.kind == CertificateKind::Infeasible) {
      // Only the dual system may be declared empty, and only when it is.
      EXPECT_EQ(cert.infeasible_system, System::Dual);
      EXPECT_TRUE(truth.feasible) << "trial " << trial;
    } else {
      EXPECT_EQ(cert.kind == CertificateKind::PrimalFeasible, truth.feasible)
          << "trial " << trial;
      EXPECT_TRUE(cert.report.pass);
    }
    EXPECT_LE(cert.stats.rescaling_rounds,
              static_cast<std::size_t>(n) * static_cast<std::size_t>(cert.stats.bit_length));
  }
}

TEST(DualMa, NarrowConeIsDualFeasible) {
  // Columns spread over a half-plane; u = (1, 0) separates them.
  const Matrix a = Matrix::from_rows({{1, 1, 1, 1}, {-9, 9, 0, 2}});
  const Certificate cert = dual_ma(a);
  ASSERT_EQ(cert.kind, CertificateKind::DualFeasible);
  EXPECT_TRUE(verify_dual(a, cert.u).pass);
}

}  // namespace
}  // namespace ppdp
