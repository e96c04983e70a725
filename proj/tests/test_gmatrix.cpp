#include <gtest/gtest.h>

#include "lpa/lpa.hpp"
#include "oracles.hpp"

using namespace lpa;

namespace {

Laurent xk(std::int64_t k, std::int64_t step = 1, long c = 1) { return Laurent::monomial(Scalar(c), k, step); }

GradedMatrix random_homogeneous_matrix(const GradedMatrixAlgebra& alg, std::int64_t lambda, Sampler& rng) {
  GradedMatrix m = GradedMatrix::zero(alg);
  for (std::size_t i = 0; i < alg.size(); ++i) {
    for (std::size_t j = 0; j < alg.size(); ++j) {
      const std::int64_t wanted = lambda + alg.shift(j) - alg.shift(i);
      if (!alg.base_has_degree(wanted) || rng.below(2) == 0) continue;
      m.set(i, j, Laurent::monomial(Scalar(static_cast<long>(rng.between(1, 3))), wanted, alg.entry_step()));
    }
  }
  return m;
}

}  // namespace

TEST(GradedMatrix, UnitProducts) {
  const auto k2 = GradedMatrixAlgebra::over_field({0, 0});
  EXPECT_EQ(GradedMatrix::unit(k2, 0, 1) * GradedMatrix::unit(k2, 1, 0), GradedMatrix::unit(k2, 0, 0));
  EXPECT_TRUE((GradedMatrix::unit(k2, 0, 1) * GradedMatrix::unit(k2, 0, 1)).is_zero());
  const auto lx = GradedMatrixAlgebra::over_laurent(1, {0});
  EXPECT_EQ(GradedMatrix::unit(lx, 0, 0, xk(1)) * GradedMatrix::unit(lx, 0, 0, xk(-1)), GradedMatrix::unit(lx, 0, 0));
}

TEST(GradedMatrix, Mismatches) {
  const auto a = GradedMatrixAlgebra::over_field({0, 1});
  const auto b = GradedMatrixAlgebra::over_field({0, 2});
  EXPECT_THROW(GradedMatrix::identity(a) * GradedMatrix::identity(b), MismatchError);
  EXPECT_THROW(GradedMatrix::unit(a, 0, 0, xk(1)), MismatchError);  // K entries are constants
  EXPECT_THROW(GradedMatrix::unit(GradedMatrixAlgebra::over_laurent(2, {0}), 0, 0, xk(1)), MismatchError);  // step 1 entry
  EXPECT_THROW(xk(1, 2), ArithmeticError);
  EXPECT_THROW(GradedMatrixAlgebra::over_field({}), InputError);
}

TEST(GradedMatrix, StarMirrorsInvolution) {
  const auto alg = GradedMatrixAlgebra::over_laurent(2, {0, 1});
  const auto m = GradedMatrix::unit(alg, 0, 1, xk(2, 2, 3));
  EXPECT_EQ(m.star(), GradedMatrix::unit(alg, 1, 0, xk(-2, 2, 3)));
  EXPECT_EQ(m.star().star(), m);
}

TEST(GradedMatrix, UnitDegreeExamples) {
  const auto k3 = GradedMatrixAlgebra::over_field({0, 1, 2});
  const auto one = k3.one_entry();
  EXPECT_EQ(unit_degree(k3, 0, 1, one), -1);
  EXPECT_EQ(unit_degree(k3, 2, 0, one), 2);
  const auto l2 = GradedMatrixAlgebra::over_laurent(2, {0, 1});
  EXPECT_EQ(unit_degree(l2, 0, 0, xk(2, 2)), 2);
  Laurent mixed(2);
  mixed.add_term(0, Scalar(1));
  mixed.add_term(2, Scalar(1));
  EXPECT_THROW(unit_degree(l2, 0, 0, mixed), PreconditionError);
}

TEST(GradedMatrix, IsHomogeneousExamples) {
  const auto k2 = GradedMatrixAlgebra::over_field({0, 1});
  EXPECT_TRUE(is_homogeneous(GradedMatrix::unit(k2, 1, 0, Laurent::constant(Scalar(5))), 1));
  EXPECT_EQ(homogeneous_degree(GradedMatrix::unit(k2, 1, 0, Laurent::constant(Scalar(5)))), 1);
  for (const auto& shifts : std::vector<std::vector<std::int64_t>>{{0, 1}, {3, -2, 7}}) {
    EXPECT_TRUE(is_homogeneous(GradedMatrix::identity(GradedMatrixAlgebra::over_field(shifts)), 0));
  }
  const auto row = GradedMatrix::unit(k2, 0, 0) + GradedMatrix::unit(k2, 0, 1);
  for (std::int64_t lambda = -5; lambda <= 5; ++lambda) EXPECT_FALSE(is_homogeneous(row, lambda));
  EXPECT_FALSE(homogeneous_degree(row).has_value());
}

TEST(GradedMatrix, HomComponentDimExamples) {
  const auto k3 = GradedMatrixAlgebra::over_field({0, 1, 2});
  EXPECT_EQ(hom_component_dim(k3, 1), 2u);
  EXPECT_EQ(hom_component_dim(k3, 0), 3u);
  const auto l2 = GradedMatrixAlgebra::over_laurent(2, {0, 1});
  for (std::int64_t lambda = -6; lambda <= 6; ++lambda) EXPECT_EQ(hom_component_dim(l2, lambda), 2u);
}

TEST(GradedMatrix, HomComponentDimMatchesGeneratorCount) {
  const std::vector<GradedMatrixAlgebra> algebras = {
      GradedMatrixAlgebra::over_field({0, 1, 2}),        GradedMatrixAlgebra::over_field({0, 1, 1, 2}),
      GradedMatrixAlgebra::over_laurent(1, {0}),         GradedMatrixAlgebra::over_laurent(2, {0, 1}),
      GradedMatrixAlgebra::over_laurent(3, {0, 1, 2, 5}), GradedMatrixAlgebra::over_laurent(2, {0, 2, 4}),
  };
  for (const auto& alg : algebras) {
    for (std::int64_t lambda = -8; lambda <= 8; ++lambda) {
      EXPECT_EQ(hom_component_dim(alg, lambda), oracle::unit_generator_count(alg, lambda)) << alg.describe();
    }
  }
}

TEST(GradedMatrix, UnitDegreeAgreesWithIsHomogeneous) {
  const std::vector<GradedMatrixAlgebra> algebras = {GradedMatrixAlgebra::over_field({0, 1, 2}),
                                                     GradedMatrixAlgebra::over_laurent(2, {0, 1}),
                                                     GradedMatrixAlgebra::over_laurent(3, {0, 1, 2})};
  for (const auto& alg : algebras) {
    for (std::size_t i = 0; i < alg.size(); ++i) {
      for (std::size_t j = 0; j < alg.size(); ++j) {
        for (std::int64_t k = alg.is_laurent() ? -2 : 0; k <= (alg.is_laurent() ? 2 : 0); ++k) {
          const auto x = Laurent::monomial(Scalar(1), k * alg.entry_step(), alg.entry_step());
          const auto m = GradedMatrix::unit(alg, i, j, x);
          const auto d = unit_degree(alg, i, j, x);
          EXPECT_TRUE(is_homogeneous(m, d));
          EXPECT_FALSE(is_homogeneous(m, d + 1));
        }
      }
    }
  }
}

TEST(GradedMatrix, DegreesAddUnderProducts) {
  Sampler rng(17);
  const std::vector<GradedMatrixAlgebra> algebras = {GradedMatrixAlgebra::over_field({0, 1, 2, 1}),
                                                     GradedMatrixAlgebra::over_laurent(2, {0, 1, 3}),
                                                     GradedMatrixAlgebra::over_laurent(3, {0, 1, 2})};
  for (const auto& alg : algebras) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto la = rng.between(-3, 3), lb = rng.between(-3, 3);
      const auto a = random_homogeneous_matrix(alg, la, rng), b = random_homogeneous_matrix(alg, lb, rng);
      EXPECT_TRUE(is_homogeneous(a, la));
      const auto ab = a * b;
      if (!ab.is_zero()) {
        EXPECT_TRUE(is_homogeneous(ab, la + lb)) << alg.describe();
      }
    }
  }
}
