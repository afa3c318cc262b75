#include <gtest/gtest.h>

#include <random>

#include "ppdp/certificate.hpp"
#include "ppdp/cuts.hpp"
#include "ppdp/error.hpp"
#include "ppdp/primal.hpp"
#include "support.hpp"

namespace ppdp {
namespace {

using testing::random_integer_matrix;

TEST(PrimalBp, NullSpaceVectorIsImmediatelyFeasible) {
  const auto f = compute_projection_factors(Matrix::from_rows({{1, -1}}));
  const BpOutcome out = primal_bp(f);
  EXPECT_EQ(out.kind, BpCase::PrimalFeasible);
  EXPECT_EQ(out.iterations, 0u);
  EXPECT_NEAR(out.z(0), 0.5, 1e-15);
  EXPECT_NEAR(out.z(1), 0.5, 1e-15);
}

TEST(PrimalBp, IdentityIsDualFeasible) {
  const auto f = compute_projection_factors(Matrix::identity(2));
  const BpOutcome out = primal_bp(f);
  EXPECT_EQ(out.kind, BpCase::DualFeasible);
  EXPECT_EQ(out.iterations, 0u);
  EXPECT_NEAR(out.v(0), 0.5, 1e-15);
}

TEST(PrimalBp, OnesRowIsDualFeasible) {
  const auto f = compute_projection_factors(Matrix::from_rows({{1, 1}}));
  const BpOutcome out = primal_bp(f);
  EXPECT_EQ(out.kind, BpCase::DualFeasible);
  EXPECT_EQ(out.iterations, 0u);
  EXPECT_NEAR(out.v(0), 0.5, 1e-15);
  EXPECT_NEAR(out.v(1), 0.5, 1e-15);
}

TEST(PrimalBp, NoDualVerdictAfterDeletion) {
  // Only the first column survives: v = y > 0 but r < n.
  const auto f = compute_projection_factors(Matrix::from_rows({{1}}));
  BpOptions opts;
  opts.original_columns = 3;
  const BpOutcome out = primal_bp(f, opts);
  EXPECT_EQ(out.kind, BpCase::Cut);
  EXPECT_EQ(out.cut, IndexSet{0});
}

TEST(PrimalBp, RejectsStepSize) {
  const auto f = compute_projection_factors(Matrix::identity(2));
  for (double c : {0.0, 2.0, 2.5, -1.0}) {
    BpOptions opts;
    opts.step_size = c;
    try {
      primal_bp(f, opts);
      FAIL() << c;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
      EXPECT_STREQ(e.what(), "step size out of (0,2)");
    }
  }
}

TEST(PrimalBp, IterationLimit) {
  std::mt19937_64 rng(11);
  bool hit = false;
  for (int trial = 0; trial < 50 && !hit; ++trial) {
    const Matrix a = random_integer_matrix(rng, 4, 8, 5);
    const auto f = compute_projection_factors(a);
    if (primal_bp(f).iterations < 2) continue;
    BpOptions opts;
    opts.max_iters = 1;
    try {
      primal_bp(f, opts);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::IterationLimitExceeded);
      hit = true;
    }
  }
  EXPECT_TRUE(hit);
}

TEST(PrimalBp, OutcomeContract) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix a = random_integer_matrix(rng, 3, 7, 4);
    const auto f = compute_projection_factors(a);
    const BpOutcome out = primal_bp(f);
    const double r = static_cast<double>(a.cols());
    EXPECT_GE(out.y.minCoeff(), 1.0 / r - 1e-15);
    EXPECT_LE((out.v + out.z - out.y).cwiseAbs().maxCoeff(), 1e-12);
    switch (out.kind) {
      case BpCase::PrimalFeasible:
        EXPECT_GT(out.z.minCoeff(), 0.0);
        break;
      case BpCase::DualFeasible:
        EXPECT_GT(out.v.minCoeff(), 0.0);
        break;
      case BpCase::Cut: {
        ASSERT_FALSE(out.cut.empty());
        for (Index j : out.cut) EXPECT_LE(bound_primal(out.v, j), 0.5 + 1e-12);
        break;
      }
    }
  }
}

TEST(PrimalBp, StepDecreaseAndMonotoneY) {
  std::mt19937_64 rng(17);
  const double c = 1.8;
  std::size_t steps = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = random_integer_matrix(rng, 5, 12, 20);
    const auto f = compute_projection_factors(a);
    Observers obs;
    obs.on_step = [&](const StepRecord& s) {
      const double r = static_cast<double>(s.active_columns);
      EXPECT_LE(s.norm_sq_after, s.norm_sq_before - (2 * c - c * c) / (4 * r * r * r) + 1e-12);
      EXPECT_LE(s.alpha, -s.threshold);
      ++steps;
    };
    BpOptions opts;
    opts.step_size = c;
    opts.observers = &obs;
    const BpOutcome out = primal_bp(f, opts);
    const double r = static_cast<double>(a.cols());
    EXPECT_LE(static_cast<double>(out.iterations), 4 * r * r / (2 * c - c * c));
  }
  EXPECT_GT(steps, 100u);
}

TEST(PrimalMa, NullSpaceVector) {
  const Matrix a = Matrix::from_rows({{1, -1}});
  const Certificate cert = primal_ma(a);
  ASSERT_EQ(cert.kind, CertificateKind::PrimalFeasible);
  EXPECT_TRUE(cert.report.pass);
  EXPECT_EQ(cert.support, (IndexSet{0, 1}));
  EXPECT_NEAR(cert.x(0) / cert.x(1), 1.0, 1e-12);
  EXPECT_EQ(cert.stats.rescaling_rounds, 0u);
}

TEST(PrimalMa, Identity) {
  const Certificate cert = primal_ma(Matrix::identity(2));
  ASSERT_EQ(cert.kind, CertificateKind::DualFeasible);
  EXPECT_TRUE(cert.report.pass);
  EXPECT_NEAR(cert.u(0), 0.5, 1e-12);
  EXPECT_NEAR(cert.u(1), 0.5, 1e-12);
}

TEST(PrimalMa, ForcedZeroCoordinate) {
  const Matrix a = Matrix::from_rows({{1, -1, 0}, {0, 0, 1}});
  const Certificate cert = primal_ma(a);
  ASSERT_EQ(cert.kind, CertificateKind::PrimalFeasible);
  EXPECT_TRUE(cert.report.pass);
  EXPECT_EQ(cert.support, (IndexSet{0, 1}));
  EXPECT_EQ(cert.x(2), 0.0);
  EXPECT_GT(cert.stats.rescaling_rounds, 0u);
}

TEST(PrimalMa, MaximumSupportOnTinyInstances) {
  std::mt19937_64 rng(23);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> pick_m(1, 3);
    const Index m = pick_m(rng);
    std::uniform_int_distribution<int> pick_n(static_cast<int>(m), 6);
    const Index n = pick_n(rng);
    const Matrix a = random_integer_matrix(rng, m, n, 3);
    const OracleVerdict truth = max_support_oracle(a);
    const Certificate cert = primal_ma(a);
    ASSERT_EQ(cert.kind == CertificateKind::PrimalFeasible, truth.feasible)
        << "trial " << trial;
    if (truth.feasible) {
      ++feasible;
      EXPECT_EQ(cert.support, truth.support) << "trial " << trial;
      EXPECT_TRUE(verify_primal(a, cert.x).pass);
    } else if (cert.kind == CertificateKind::DualFeasible) {
      EXPECT_TRUE(verify_dual(a, cert.u).pass);
    }
    EXPECT_LE(cert.stats.rescaling_rounds,
              static_cast<std::size_t>(n) * static_cast<std::size_t>(cert.stats.bit_length));
  }
  EXPECT_GT(feasible, 30);
}

TEST(PrimalMa, ZeroMatrixIsFeasibleEverywhere) {
  const Matrix a(Eigen::MatrixXd::Zero(2, 3), true);
  const Certificate cert = primal_ma(a);
  ASSERT_EQ(cert.kind, CertificateKind::PrimalFeasible);
  EXPECT_EQ(cert.support, (IndexSet{0, 1, 2}));
}

TEST(PrimalMa, CustomProcedureIsUsed) {
  int calls = 0;
  const Certificate cert =
      primal_ma(Matrix::from_rows({{1, -1}}), SolverOptions{},
                [&](const ProjectionFactors& f, const BpOptions& o) {
                  ++calls;
                  return primal_bp(f, o);
                });
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(cert.kind, CertificateKind::PrimalFeasible);
}

TEST(PrimalMa, ExplicitBitLengthBoundsRounds) {
  // x_3 is forced to zero; it is halved once per round until d_3 <= 2^-L.
  SolverOptions opts;
  opts.bit_length = 3;
  const Certificate cert = primal_ma(Matrix::from_rows({{1, -1, 0}, {0, 0, 1}}), opts);
  EXPECT_EQ(cert.stats.bit_length, 3);
  EXPECT_LE(cert.stats.rescaling_rounds, 3u * 3u);
  EXPECT_EQ(cert.support, (IndexSet{0, 1}));
}

TEST(PrimalMa, RejectsBadShapes) {
  EXPECT_THROW(primal_ma(Matrix::from_rows({{1}, {1}})), Error);
  SolverOptions opts;
  opts.step_size = 2.5;
  EXPECT_THROW(primal_ma(Matrix::identity(2), opts), Error);
}

TEST(ScalingState, ShiftAndEliminate) {
  ScalingState s(3, 2);
  EXPECT_DOUBLE_EQ(s.tau(), 0.25);
  s.shift({1}, -1);
  EXPECT_DOUBLE_EQ(s.d(1), 0.5);
  EXPECT_EQ(s.eliminate_below_tau(), 0);
  s.shift({1}, -1);
  EXPECT_EQ(s.eliminate_below_tau(), 1);
  EXPECT_EQ(s.active(), (IndexSet{0, 2}));
  EXPECT_EQ(s.eliminated_set(), IndexSet{1});
  EXPECT_EQ(s.d(1), 0.0);
  const Vector x = s.expand(Vector::Constant(2, 3.0), 3);
  EXPECT_EQ(x(1), 0.0);
  EXPECT_DOUBLE_EQ(x(0), 3.0);
}

}  // namespace
}  // namespace ppdp
