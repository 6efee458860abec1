#include "schurcol/realization.h"

#include <gtest/gtest.h>

#include "schurcol/schur_state.h"
#include "test_support.h"

namespace schurcol {
namespace {

using testing::random_separated_zeros;

const Complex I(0.0, 1.0);

TEST(KernelBasis, GramIsPickMatrix) {
  const std::vector<Complex> zeros{0.3, -0.4 * I, Complex(0.1, 0.6)};
  const KernelBasis basis = make_kernel_basis(zeros);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      EXPECT_LT(std::abs(basis.gram(j, k) - 1.0 / (1.0 - zeros[j] * std::conj(zeros[k]))), 1e-15);
  EXPECT_LT(max_abs(basis.cholesky * basis.cholesky.adjoint() - basis.gram), 1e-14);
  EXPECT_GT(basis.min_eigenvalue, 0.0);
  EXPECT_GE(basis.condition, 1.0);
}

TEST(KernelBasis, PositiveForRandomPoints) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 30; ++trial) {
    const KernelBasis basis = make_kernel_basis(random_separated_zeros(rng, 1 + trial % 8, 0.9, 0.05));
    EXPECT_GT(basis.min_eigenvalue, 0.0);
  }
}

TEST(KernelBasis, RejectsCloseZeros) {
  try {
    make_kernel_basis({0.5, Complex(0.5 + 1e-6, 0.0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kZerosTooClose);
  }
}

TEST(ModelColligation, IdentityFunction) {
  const ModelRealization model = model_colligation(BlaschkeProduct(-1.0, {0.0}));
  const Matrix& u = model.colligation.matrix();
  EXPECT_LT(std::abs(model.basis.gram(0, 0) - 1.0), 1e-15);
  EXPECT_LT(std::abs(u(0, 0)), 1e-15);
  EXPECT_LT(std::abs(u(1, 1)), 1e-15);
  EXPECT_LT(std::abs(std::abs(u(0, 1)) - 1.0), 1e-15);
  EXPECT_LT(std::abs(std::abs(u(1, 0)) - 1.0), 1e-15);
  for (Complex z : disc_samples(10, 0.9))
    EXPECT_LT(std::abs(characteristic_function(model.colligation, z) - z), 1e-15);
}

TEST(ModelColligation, TwoZeros) {
  const BlaschkeProduct b(1.0, {0.3, -0.4 * I});
  const ModelRealization model = model_colligation(b);
  EXPECT_LE(unitarity_residual(model.colligation.matrix()), 1e-12);
  const RealizationReport r =
      verify_realization(model.colligation, blaschke_to_rational(b), disc_samples(30, 0.95));
  EXPECT_LE(r.max_error, 1e-10);
}

TEST(ModelColligation, DegreeZero) {
  const ModelRealization model = model_colligation(BlaschkeProduct(I, {}));
  EXPECT_EQ(model.colligation.n(), 0);
  EXPECT_EQ(model.colligation.A(), I);
}

TEST(ModelColligation, RandomProductsAreMinimalRealizations) {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 8;
    auto zeros = random_separated_zeros(rng, n, 0.9, 0.05);
    if (trial % 10 == 0) zeros[0] = 0.0;  // exercises the l(0) = S'(0) limit
    const BlaschkeProduct b(testing::random_unimodular(rng), zeros);
    const ModelRealization model = model_colligation(b);
    EXPECT_LE(unitarity_residual(model.colligation.matrix()), 1e-10);
    const MinimalityReport m = minimality_report(model.colligation);
    EXPECT_EQ(m.rank_controllability, n);
    EXPECT_EQ(m.rank_observability, n);
    double worst = 0.0;
    for (Complex z : disc_samples(30, 0.95))
      worst = std::max(worst, std::abs(characteristic_function(model.colligation, z) -
                                       testing::blaschke_direct(b.c(), zeros, z)));
    EXPECT_LE(worst, 1e-10) << "trial " << trial;
  }
}

TEST(ModelColligation, ShiftActsOnKernels) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const auto zeros = random_separated_zeros(rng, 1 + trial % 6, 0.9, 0.05);
    const ModelRealization model = model_colligation(BlaschkeProduct(1.0, zeros));
    std::vector<Complex> z;
    std::vector<Complex> t;
    for (int k = 0; k < 5; ++k) {
      z.push_back(testing::random_in_disc(rng, 0.9));
      t.push_back(testing::random_in_disc(rng, 0.9));
    }
    EXPECT_LE(verify_model_resolvent(model, z, t), 1e-10);
  }
}

TEST(VerifyRealization, Examples) {
  Matrix swap(2, 2);
  swap << 0.0, 1.0, 1.0, 0.0;
  const RationalInner id = RationalInner::from_coefficients({0.0, 1.0}, {1.0});
  EXPECT_LT(verify_realization(swap, id, disc_samples(30, 0.9)).max_error, 1e-15);

  std::mt19937_64 rng(84);
  const BlaschkeProduct b(1.0, {0.3, -0.4 * I, Complex(0.5, 0.5)});
  Matrix noisy = model_colligation(b).colligation.matrix();
  noisy += 1e-3 * testing::random_gaussian(rng, 4, 4);
  EXPECT_GT(verify_realization(noisy, blaschke_to_rational(b), disc_samples(30, 0.9)).max_error, 1e-4);
}

TEST(Uniqueness, ZeroAtOrigin) {
  const UniquenessReport r = realization_uniqueness_check(BlaschkeProduct(-1.0, {0.0}));
  EXPECT_TRUE(r.model_minimal);
  EXPECT_TRUE(r.closed_form_minimal);
  EXPECT_TRUE(r.equivalent);
  EXPECT_LE(r.intertwining_residual, 1e-12);
}

TEST(Uniqueness, TwoZeros) {
  const UniquenessReport r = realization_uniqueness_check(BlaschkeProduct(1.0, {0.3, -0.4 * I}));
  EXPECT_TRUE(r.equivalent);
  EXPECT_LE(r.intertwining_residual, 1e-9);
  EXPECT_LE(unitarity_residual(r.gauge), 1e-12);
}

TEST(Uniqueness, RandomProducts) {
  std::mt19937_64 rng(85);
  for (int trial = 0; trial < 40; ++trial) {
    const auto zeros = random_separated_zeros(rng, 1 + trial % 8, 0.9, 0.05);
    const UniquenessReport r = realization_uniqueness_check(BlaschkeProduct(testing::random_unimodular(rng), zeros));
    EXPECT_TRUE(r.equivalent);
    EXPECT_LE(r.intertwining_residual, 1e-9) << "trial " << trial;
  }
}

}  // namespace
}  // namespace schurcol
