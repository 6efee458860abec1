#include "schurcol/colligation.h"

#include <gtest/gtest.h>

#include "schurcol/schur_state.h"
#include "test_support.h"

namespace schurcol {
namespace {

using testing::random_in_disc;
using testing::random_params;
using testing::random_unitary;

const double kHalfRoot3 = std::sqrt(0.75);

Matrix swap2() {
  Matrix u(2, 2);
  u << 0.0, 1.0, 1.0, 0.0;
  return u;
}

UnitaryColligation from_params(std::vector<Complex> p) {
  return colligation_from_schur_parameters(SchurParameterSequence(std::move(p)));
}

TEST(UnitaryColligation, RejectsNonUnitary) {
  Matrix u = swap2();
  u(0, 0) = 1e-3;
  try {
    UnitaryColligation col(u);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotUnitary);
  }
}

TEST(CharacteristicFunction, Examples) {
  EXPECT_LT(std::abs(characteristic_function(UnitaryColligation(swap2()), 0.7) - 0.7), 1e-15);

  std::mt19937_64 rng(21);
  const UnitaryColligation col(random_unitary(rng, 4));
  EXPECT_EQ(characteristic_function(col, 0.0), col.A());

  Matrix u(2, 2);
  u << 0.5, kHalfRoot3, kHalfRoot3, -0.5;
  EXPECT_LT(std::abs(characteristic_function(UnitaryColligation(u), 1.0) - 1.0), 1e-14);
}

TEST(CharacteristicFunction, ResolventSolveMatchesSeries) {
  // A + Σ_k z^{k+1} B D^k C, summed directly.
  std::mt19937_64 rng(22);
  const UnitaryColligation col = from_params(random_params(rng, 4, 0.9));
  const Complex z(0.2, -0.1);
  Complex sum = col.A();
  Vector x = col.C();
  Complex zk = z;
  for (int k = 0; k < 200; ++k) {
    sum += zk * (col.B() * x)(0, 0);
    x = col.D() * x;
    zk *= z;
  }
  EXPECT_LT(std::abs(characteristic_function(col, z) - sum), 1e-14);
}

TEST(CharacteristicFunction, NearPoleThrows) {
  Matrix u = Matrix::Identity(2, 2);
  try {
    transfer_function(u, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNearPole);
  }
}

TEST(Minimality, Examples) {
  MinimalityReport r = minimality_report(UnitaryColligation(swap2()));
  EXPECT_EQ(r.rank_controllability, 1);
  EXPECT_EQ(r.rank_observability, 1);
  EXPECT_EQ(r.rank_simplicity, 1);

  std::mt19937_64 rng(23);
  Matrix block = Matrix::Zero(4, 4);
  block(0, 0) = testing::random_unimodular(rng);
  block.bottomRightCorner(3, 3) = random_unitary(rng, 3);
  r = minimality_report(UnitaryColligation(block));
  EXPECT_EQ(r.rank_controllability, 0);
  EXPECT_EQ(r.rank_observability, 0);
  EXPECT_EQ(r.rank_simplicity, 0);

  r = minimality_report(from_params({0.5, Complex(0.0, 0.3), 1.0}));
  EXPECT_EQ(r.rank_controllability, 2);
  EXPECT_EQ(r.rank_observability, 2);
  EXPECT_EQ(r.rank_simplicity, 2);
}

TEST(Minimality, Predicates) {
  EXPECT_TRUE(is_minimal(UnitaryColligation(swap2())));
  EXPECT_FALSE(is_minimal(UnitaryColligation(Matrix::Identity(2, 2))));
  EXPECT_TRUE(is_simple(from_params({0.2, Complex(0.1, 0.5), -0.3, Complex(0.0, 1.0)})));
}

TEST(Minimality, RanksAgreeAndMatchHankelRank) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 6;
    // Mix minimal and non-minimal inputs: a unitary direct sum leaves part of
    // the state space decoupled.
    Matrix u;
    int expected;
    if (trial % 3 == 0) {
      const int k = 1 + trial % n;
      u = Matrix::Zero(n + 1, n + 1);
      u.topLeftCorner(k + 1, k + 1) = from_params(random_params(rng, k, 0.9)).matrix();
      if (n > k) u.bottomRightCorner(n - k, n - k) = random_unitary(rng, n - k);
      expected = k;
    } else {
      u = random_unitary(rng, n + 1);
      expected = n;
    }
    const UnitaryColligation col(u);
    const MinimalityReport r = minimality_report(col);
    EXPECT_EQ(r.rank_controllability, expected);
    EXPECT_EQ(r.rank_observability, expected);
    EXPECT_EQ(r.rank_simplicity, expected);
    EXPECT_EQ(hankel_rank(col, n), expected);
  }
}

TEST(StateGauge, IdentityAndScalar) {
  std::mt19937_64 rng(25);
  const UnitaryColligation col(random_unitary(rng, 4));
  EXPECT_LT(max_abs(apply_state_gauge(col, Matrix::Identity(3, 3)).matrix() - col.matrix()), 1e-15);

  const Complex phase = std::polar(1.0, 0.7);
  const UnitaryColligation g = apply_state_gauge(col, phase * Matrix::Identity(3, 3));
  EXPECT_LT(max_abs(g.B() - col.B() * phase), 1e-15);
  EXPECT_LT(max_abs(g.C() - col.C() * std::conj(phase)), 1e-15);
  EXPECT_LT(max_abs(g.D() - col.D()), 1e-15);
  for (Complex z : disc_samples(10, 0.9))
    EXPECT_LT(std::abs(characteristic_function(g, z) - characteristic_function(col, z)), 1e-12);
}

TEST(StateGauge, CharacteristicFunctionInvariant) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 6;
    const UnitaryColligation col(random_unitary(rng, n + 1));
    const UnitaryColligation g = apply_state_gauge(col, random_unitary(rng, n));
    for (Complex z : disc_samples(20, 0.9))
      EXPECT_LT(std::abs(characteristic_function(g, z) - characteristic_function(col, z)), 1e-12);
  }
}

TEST(FindEquivalence, RecoversConstructedGauge) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 6;
    const UnitaryColligation col1(random_unitary(rng, n + 1));
    const UnitaryColligation col2 = apply_state_gauge(col1, random_unitary(rng, n));
    const auto eq = find_equivalence(col1, col2);
    ASSERT_TRUE(eq.has_value());
    EXPECT_LE(eq->residual, 1e-9);
    EXPECT_LE(unitarity_residual(eq->v), 1e-12);
    EXPECT_LE(intertwining_residual(col1.matrix(), col2.matrix(), eq->v), 1e-9);
  }
}

TEST(FindEquivalence, SelfIsTrivial) {
  std::mt19937_64 rng(28);
  const UnitaryColligation col(random_unitary(rng, 4));
  const auto eq = find_equivalence(col, col);
  ASSERT_TRUE(eq.has_value());
  EXPECT_LT(eq->residual, 1e-12);
  EXPECT_LT(max_abs(eq->v - Matrix::Identity(3, 3)), 1e-10);
}

TEST(FindEquivalence, DifferentFunctionsGiveNothing) {
  const UnitaryColligation col1 = from_params({0.5, Complex(0.0, 0.3), 1.0});
  const UnitaryColligation col2 = from_params({0.5, Complex(0.2, 0.0), 1.0});
  EXPECT_FALSE(find_equivalence(col1, col2).has_value());
}

TEST(FindEquivalence, RejectsNonSimple) {
  EXPECT_THROW(find_equivalence(UnitaryColligation(Matrix::Identity(2, 2)),
                                UnitaryColligation(Matrix::Identity(2, 2))),
               Error);
}

TEST(Simulation, PureDelay) {
  const Simulation sim = simulate_time_domain(UnitaryColligation(swap2()), {1.0, 0.0, 0.0},
                                              Vector::Zero(1));
  ASSERT_EQ(sim.outputs.size(), 3u);
  EXPECT_EQ(sim.outputs[0], Complex(0.0));
  EXPECT_EQ(sim.outputs[1], Complex(1.0));
  EXPECT_EQ(sim.outputs[2], Complex(0.0));
  EXPECT_EQ(sim.states.size(), 4u);
}

TEST(Simulation, ZeroInputZeroOutput) {
  std::mt19937_64 rng(29);
  const UnitaryColligation col(random_unitary(rng, 5));
  const Simulation sim = simulate_time_domain(col, std::vector<Complex>(10, 0.0), Vector::Zero(4));
  for (Complex y : sim.outputs) EXPECT_EQ(y, Complex(0.0));
}

TEST(Simulation, ImpulseResponseMatchesSeries) {
  const UnitaryColligation col = from_params({0.5, -1.0});
  std::vector<Complex> impulse(8, 0.0);
  impulse[0] = 1.0;
  const Simulation sim = simulate_time_domain(col, impulse, Vector::Zero(1));
  const auto series = testing::taylor_of_ratio({0.5, -1.0}, {1.0, -0.5}, 8);
  EXPECT_NEAR(sim.outputs[0].real(), 0.5, 1e-15);
  EXPECT_NEAR(sim.outputs[1].real(), -0.75, 1e-15);
  EXPECT_NEAR(sim.outputs[2].real(), -0.375, 1e-15);
  for (int k = 0; k < 8; ++k) EXPECT_LT(std::abs(sim.outputs[k] - series[k]), 1e-15);
}

TEST(Simulation, ConservesEnergy) {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 6;
    const UnitaryColligation col(random_unitary(rng, n + 1));
    std::vector<Complex> inputs(1000);
    for (Complex& x : inputs) x = testing::gaussian_complex(rng);
    Vector h0(n);
    for (int k = 0; k < n; ++k) h0(k) = testing::gaussian_complex(rng);
    const Simulation sim = simulate_time_domain(col, inputs, h0);
    EXPECT_LE(std::abs(energy_defect(inputs, sim)), 1e-10);
  }
}

TEST(MarkovParameters, Examples) {
  auto m = markov_parameters(UnitaryColligation(swap2()), 3);
  EXPECT_EQ(m, (std::vector<Complex>{0.0, 1.0, 0.0}));

  m = markov_parameters(from_params({0.5, -1.0}), 3);
  EXPECT_LT(std::abs(m[0] - 0.5), 1e-15);
  EXPECT_LT(std::abs(m[1] + 0.75), 1e-15);
  EXPECT_LT(std::abs(m[2] + 0.375), 1e-15);

  std::mt19937_64 rng(31);
  const UnitaryColligation col(random_unitary(rng, 4));
  EXPECT_EQ(markov_parameters(col, 5)[0], col.A());
}

TEST(SpectralIdentities, HandExample) {
  const SpectralReport r =
      verify_spectral_identities(UnitaryColligation(swap2()), {0.5}, {0.5});
  EXPECT_LT(r.diagonal_input, 1e-15);
  EXPECT_LT(r.diagonal_output, 1e-15);
  EXPECT_LT(r.max_residual(), 1e-15);
}

TEST(SpectralIdentities, AtOriginReduceToUnitarityRows) {
  std::mt19937_64 rng(32);
  const UnitaryColligation col(random_unitary(rng, 5));
  const SpectralReport r = verify_spectral_identities(col, {0.0}, {0.0});
  EXPECT_LT(std::abs(1.0 - std::norm(col.A()) - col.C().squaredNorm()), 1e-14);
  EXPECT_LT(r.max_residual(), 1e-14);
}

TEST(SpectralIdentities, RandomMinimalColligations) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const UnitaryColligation col(random_unitary(rng, 5));
    std::vector<Complex> z;
    std::vector<Complex> zeta;
    for (int k = 0; k < 20; ++k) {
      z.push_back(random_in_disc(rng, 0.9));
      zeta.push_back(random_in_disc(rng, 0.9));
    }
    EXPECT_LE(verify_spectral_identities(col, z, zeta).max_residual(), 1e-10);
  }
}

TEST(SpectralIdentities, DetectNonUnitaryMatrix) {
  std::mt19937_64 rng(34);
  Matrix u = random_unitary(rng, 4);
  u += 1e-3 * testing::random_gaussian(rng, 4, 4);
  const SpectralReport r = verify_spectral_identities(u, {0.3, Complex(0.1, 0.4)}, {-0.2, 0.5});
  EXPECT_GT(r.max_residual(), 1e-5);
}

TEST(InnerProperty, SampledForRandomColligations) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const UnitaryColligation col(random_unitary(rng, 1 + 1 + trial % 6));
    for (int k = 0; k < 100; ++k)
      EXPECT_LE(std::abs(characteristic_function(col, random_in_disc(rng, 0.99))), 1.0 + 1e-10);
    for (Complex t : roots_of_unity(64))
      EXPECT_LE(std::abs(std::abs(characteristic_function(col, t)) - 1.0), 1e-9);
  }
}

TEST(NearestUnitary, ProjectsPerturbation) {
  std::mt19937_64 rng(36);
  const Matrix u = random_unitary(rng, 4);
  const Matrix noisy = u + 1e-6 * testing::random_gaussian(rng, 4, 4);
  const Matrix p = nearest_unitary(noisy);
  EXPECT_LT(unitarity_residual(p), 1e-14);
  EXPECT_LT(max_abs(p - u), 1e-5);
}

}  // namespace
}  // namespace schurcol
