#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ppdp/error.hpp"
#include "ppdp/matrix.hpp"
#include "ppdp/oracle_support.hpp"
#include "ppdp/projection.hpp"
#include "support.hpp"

namespace ppdp {
namespace {

using testing::fraction_matrix;
using testing::fractions;
using testing::integer_matrix;
using testing::load_golden;

TEST(Matrix, RejectsNonFiniteEntries) {
  Eigen::MatrixXd a(1, 2);
  a << 1.0, std::nan("");
  try {
    Matrix m(a);
    FAIL() << "expected NonFiniteInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonFiniteInput);
  }
}

TEST(Matrix, IntegerFlagRequiresIntegers) {
  Eigen::MatrixXd a(1, 2);
  a << 1.0, 0.5;
  EXPECT_THROW(Matrix(a, true), Error);
  EXPECT_NO_THROW(Matrix(a, false));
}

TEST(Matrix, ProblemShape) {
  EXPECT_NO_THROW(require_problem_shape(Matrix::from_rows({{1, 2, 3}})));
  EXPECT_THROW(require_problem_shape(Matrix::from_rows({{1}, {2}})), Error);
  EXPECT_THROW(require_problem_shape(Matrix()), Error);
}

TEST(Matrix, BitLengths) {
  const Matrix a = Matrix::from_rows({{1, -1}});
  // 2 entries of 1 + ceil(log2 2) = 2 bits, plus n + m = 3.
  EXPECT_EQ(encoding_length(a), 7);
  // 2^L > 4 * 2 * sqrt(2) = 11.3.
  EXPECT_EQ(hadamard_bit_length(a), 4);
  EXPECT_EQ(hadamard_bit_length(Matrix::identity(3)), 4);
}

void expect_projection_matches(const std::string& id) {
  const auto record = load_golden(id);
  const Matrix a = integer_matrix(record.input.at("a"));
  const ProjectionFactors f = compute_projection_factors(a);
  const Eigen::MatrixXd q = fraction_matrix(record.expected.at("q"));
  const Eigen::MatrixXd p = fraction_matrix(record.expected.at("p"));
  for (Index j = 0; j < a.cols(); ++j) {
    const Vector e = Vector::Unit(a.cols(), j);
    EXPECT_LE((f.apply_q(e) - q.col(j)).cwiseAbs().maxCoeff(), 1e-12) << id;
    EXPECT_LE((f.apply_p(e) - p.col(j)).cwiseAbs().maxCoeff(), 1e-12) << id;
  }
}

TEST(Projection, MatchesExactProjections) {
  for (const char* id : {"projection_row_1_m1", "projection_identity_2", "projection_two_rows_3",
                         "projection_ones_2", "projection_i_minus_i_2"}) {
    expect_projection_matches(id);
  }
}

TEST(Projection, ApplyExamples) {
  for (const char* id : {"apply_row_1_m1_half", "apply_two_rows_e1", "apply_ones_initial",
                         "apply_i_minus_i_initial", "apply_identity_initial"}) {
    const auto record = load_golden(id);
    const ProjectionFactors f = compute_projection_factors(integer_matrix(record.input.at("a")));
    const Vector y = fractions(record.input.at("y"));
    EXPECT_LE((apply_q(f, y) - fractions(record.expected.at("v"))).cwiseAbs().maxCoeff(), 1e-12)
        << id;
    EXPECT_LE((apply_p(f, y) - fractions(record.expected.at("z"))).cwiseAbs().maxCoeff(), 1e-12)
        << id;
  }
}

TEST(Projection, IdentityIsWholeSpace) {
  const ProjectionFactors f = compute_projection_factors(Matrix::identity(2));
  const Vector y = Vector::Random(2);
  EXPECT_LE((f.apply_q(y) - y).norm(), 1e-15);
  EXPECT_LE(f.apply_p(y).norm(), 1e-15);
}

TEST(Projection, IndicatorSumExamples) {
  for (const char* id :
       {"indicator_row_1_m1_first", "indicator_identity_all", "indicator_two_rows_null_all"}) {
    const auto record = load_golden(id);
    const ProjectionFactors f = compute_projection_factors(integer_matrix(record.input.at("a")));
    const IndexSet k = testing::to_index_set(record.input.at("k"));
    const Subspace space = record.input.at("space") == "row" ? Subspace::Row : Subspace::Null;
    EXPECT_LE((project_indicator_sum(f, k, space) - fractions(record.expected.at("w")))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12)
        << id;
  }
}

TEST(Projection, IndicatorSumErrors) {
  const ProjectionFactors f = compute_projection_factors(Matrix::from_rows({{1, -1}}));
  try {
    project_indicator_sum(f, {}, Subspace::Row);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyIndexSet);
  }
  try {
    project_indicator_sum(f, {2}, Subspace::Row);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(Projection, DimensionMismatch) {
  const ProjectionFactors f = compute_projection_factors(Matrix::from_rows({{1, -1}}));
  try {
    f.apply_q(Vector::Ones(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Projection, ZeroMatrixIsFlagged) {
  const ProjectionFactors f = compute_projection_factors(Eigen::MatrixXd::Zero(2, 3));
  EXPECT_TRUE(f.zero_matrix());
  EXPECT_EQ(f.rank(), 0);
  const Vector y = Vector::Ones(3);
  EXPECT_EQ(f.apply_p(y), y);
  EXPECT_EQ(f.apply_q(y), Vector::Zero(3));
}

TEST(Projection, NonFiniteInput) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Ones(1, 2);
  a(0, 1) = INFINITY;
  try {
    compute_projection_factors(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonFiniteInput);
  }
}

TEST(Projection, RankDeficientMatrix) {
  const Matrix a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  const ProjectionFactors f = compute_projection_factors(a);
  EXPECT_EQ(f.rank(), 1);
  EXPECT_TRUE(f.rank_deficient());
  const Vector y(Vector::LinSpaced(3, 1.0, 2.0));
  const Vector u = f.row_space_coefficients(y);
  EXPECT_LE((a.entries().transpose() * u - f.apply_q(y)).norm(), 1e-12);
}

TEST(Projection, RowSpaceCoefficientsRecoverDualVector) {
  const auto record = load_golden("dual_recovery_ones");
  const ProjectionFactors f = compute_projection_factors(integer_matrix(record.input.at("a")));
  const Vector u = f.row_space_coefficients(fractions(record.input.at("y")));
  EXPECT_LE((u - fractions(record.expected.at("u"))).norm(), 1e-14);
}

TEST(Projection, RandomInvariants) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Index m = 1 + static_cast<Index>(rng() % 20);
    const Index n = m + static_cast<Index>(rng() % 21);
    const Matrix a = testing::random_integer_matrix(rng, m, n, 50);
    const ProjectionFactors f = compute_projection_factors(a);
    const Vector y = Vector::Random(n);
    const Vector p = f.apply_p(y);
    const Vector q = f.apply_q(y);
    EXPECT_LE((p + q - y).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LE(std::abs(p.dot(q)), 1e-8);
    EXPECT_LE((f.apply_p(p) - p).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LE((f.apply_q(q) - q).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LE(f.apply_q(p).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Projection, IndicatorSumMatchesExplicitColumns) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Index m = 1 + static_cast<Index>(rng() % 10);
    const Index n = m + static_cast<Index>(rng() % 20);
    const Matrix a = testing::random_integer_matrix(rng, m, n, 9);
    const ProjectionFactors f = compute_projection_factors(a);
    const oracle::ExplicitProjections ex = oracle::materialize_projections(a);
    IndexSet k;
    for (Index i = 0; i < n; ++i) {
      if (rng() % 2 == 0) k.push_back(i);
    }
    if (k.empty()) k.push_back(0);
    Vector q_sum = Vector::Zero(n);
    Vector p_sum = Vector::Zero(n);
    for (Index i : k) {
      q_sum += ex.q.col(i);
      p_sum += ex.p.col(i);
    }
    EXPECT_LE((f.indicator_sum(k, Subspace::Row) - q_sum).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LE((f.indicator_sum(k, Subspace::Null) - p_sum).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(EstimateRho, IdentityApproachesInverseSqrtN) {
  const ProjectionFactors f = compute_projection_factors(Matrix::identity(4));
  const double estimate = estimate_rho(f, Subspace::Row, 100000, 3);
  EXPECT_GE(estimate, 0.3);
  EXPECT_LE(estimate, 0.5);
  EXPECT_LE(estimate_rho(f, Subspace::Row, 10, 3), estimate);
}

TEST(EstimateRho, OppositeColumnsAreNonPositive) {
  const ProjectionFactors f = compute_projection_factors(Matrix::from_rows({{1, -1}}));
  EXPECT_LE(estimate_rho(f, Subspace::Row, 1000, 1), 1e-15);
}

TEST(EstimateRho, DeterministicAndValidated) {
  const ProjectionFactors f = compute_projection_factors(Matrix::identity(3));
  EXPECT_EQ(estimate_rho(f, Subspace::Row, 500, 9), estimate_rho(f, Subspace::Row, 500, 9));
  EXPECT_THROW(estimate_rho(f, Subspace::Row, 0, 9), Error);
  try {
    estimate_rho(f, Subspace::Null, 10, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroColumns);
  }
}

}  // namespace
}  // namespace ppdp
