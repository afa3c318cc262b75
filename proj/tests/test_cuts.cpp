#include <gtest/gtest.h>

#include <random>

#include "ppdp/cuts.hpp"
#include "ppdp/error.hpp"
#include "ppdp/oracle_support.hpp"
#include "ppdp/projection.hpp"
#include "support.hpp"

namespace ppdp {
namespace {

using testing::fraction;
using testing::fractions;
using testing::load_golden;

TEST(Bounds, MatchExactValues) {
  for (const char* id : {"bound_mixed_third", "bound_neg_first", "bound_two_minus_four",
                         "bound_scaled_mixed_third"}) {
    const auto record = load_golden(id);
    const Vector w = fractions(record.input.at("w"));
    const Index j = record.input.at("j").get<Index>();
    const double expected = fraction(record.expected.at("bound"));
    EXPECT_NEAR(bound_primal(w, j), expected, 1e-15) << id;
    EXPECT_NEAR(bound_dual(w, j), expected, 1e-15) << id;
  }
}

TEST(Bounds, ZeroCoordinateAndRange) {
  const Vector v = (Vector(3) << 1.0, 0.0, -1.0).finished();
  try {
    bound_primal(v, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroCoordinate);
  }
  try {
    bound_dual(v, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
  // Below the relative tolerance counts as zero too.
  const Vector tiny = (Vector(2) << 1.0, -1e-13).finished();
  EXPECT_THROW(bound_primal(tiny, 1), Error);
}

TEST(Bounds, ScaleInvariant) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    Vector w(6);
    for (Index i = 0; i < 6; ++i) w(i) = unit(rng);
    const double c = std::ldexp(1.0 + unit(rng) * 0.5, static_cast<int>(rng() % 40) - 20);
    for (Index j = 0; j < 6; ++j) {
      const double base = bound_primal(w, j);
      EXPECT_NEAR(bound_primal(c * w, j), base, 1e-12 * std::max(1.0, base));
    }
  }
}

TEST(FindCut, ExactCutSets) {
  for (const char* id : {"cut_one_two_small_negatives", "cut_large_positive_small_negative"}) {
    const auto record = load_golden(id);
    const CutResult cut = find_cut(fractions(record.input.at("w")), CutSpace::Primal);
    EXPECT_EQ(cut.j, testing::to_index_set(record.expected.at("j"))) << id;
    const Vector bounds = fractions(record.expected.at("bounds"));
    for (Index i = 0; i < bounds.size(); ++i) {
      EXPECT_NEAR(cut.bounds[static_cast<std::size_t>(i)], bounds(i), 1e-12) << id;
    }
    EXPECT_EQ(cut.threshold, 0.5);
  }
}

TEST(FindCut, EmptyCutIsAnError) {
  const Vector v = (Vector(2) << 1.0, -1.0).finished();
  try {
    find_cut(v, CutSpace::Dual);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyCut);
  }
  EXPECT_TRUE(evaluate_cut(v).j.empty());
}

TEST(FindCut, PositiveCoordinateCanBeCut) {
  // bound_0 = 0.1 + 0.1; the negative coordinates have bound 10.
  const Vector v = (Vector(3) << 1.0, -0.1, -0.1).finished();
  const CutResult cut = find_cut(v, CutSpace::Primal);
  EXPECT_EQ(cut.j, IndexSet{0});
  EXPECT_NEAR(cut.bounds[0], 0.2, 1e-15);
  EXPECT_NEAR(cut.bounds[1], 10.0, 1e-12);
}

TEST(FindCut, TiesAtOneHalfAreIncluded) {
  const Vector z = (Vector(2) << 2.0, -4.0).finished();
  // bound_1 = 2/4 = 1/2 exactly; bound_0 = 4/2 = 2.
  EXPECT_EQ(find_cut(z, CutSpace::Dual).j, IndexSet{1});
}

TEST(FindCut, ZeroCoordinatesAreSkipped) {
  const Vector v = (Vector(3) << 1.0, 0.0, -0.01).finished();
  const CutResult cut = find_cut(v, CutSpace::Primal);
  EXPECT_EQ(cut.j, IndexSet{0});
  EXPECT_TRUE(std::isinf(cut.bounds[1]));
}

// Every vector of the row space bounds the normalized primal solutions and
// every vector of the null space bounds the normalized dual solutions.
TEST(CutSoundness, BoundsDominateExactMaxima) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Index m = 1 + static_cast<Index>(rng() % 3);
    const Index n = m + 1 + static_cast<Index>(rng() % 3);
    const Matrix a = testing::random_integer_matrix(rng, m, n, 3);
    const ProjectionFactors f = compute_projection_factors(a);
    const Vector y = Vector::Random(n).cwiseAbs() + Vector::Constant(n, 0.01);
    const Vector v = f.apply_q(y);
    const Vector z = f.apply_p(y);
    const auto primal = oracle::normalized_primal_maxima(a.entries());
    const auto dual = oracle::normalized_dual_maxima(a.entries());
    const CutResult pv = evaluate_cut(v);
    const CutResult dz = evaluate_cut(z);
    for (Index j = 0; j < n; ++j) {
      const double bp = pv.bounds[static_cast<std::size_t>(j)];
      if (std::isfinite(bp)) {
        EXPECT_LE(primal[static_cast<std::size_t>(j)].get_d(), bp + 1e-9);
        ++checked;
      }
      const double bd = dz.bounds[static_cast<std::size_t>(j)];
      if (dual && std::isfinite(bd)) {
        EXPECT_LE((*dual)[static_cast<std::size_t>(j)].get_d(), bd + 1e-9);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 300);
}

}  // namespace
}  // namespace ppdp
