#pragma once

#include "schurcol/colligation.h"
#include "schurcol/common.h"

namespace schurcol {

/// S11 + S12·ω·(1 − S22·ω)^{-1}·S21. FeedbackSingular if |1 − S22·ω| ≤ tol::kFeedback.
Complex redheffer_transform(Complex s11, Complex s12, Complex s21, Complex s22, Complex omega);

/// Unitary colligation whose exterior space is split into two channels,
///
///   [a11 a12 b1]
///   [a21 a22 b2]
///   [c1  c2  d ]
///
/// with channel sizes e1, e2 and state size h. Blocks are views into the
/// stored matrix.
class PartitionedColligation {
 public:
  PartitionedColligation(int e1, int e2, int h, Matrix u, double tolerance = tol::kUnitary);

  int e1() const { return e1_; }
  int e2() const { return e2_; }
  int h() const { return h_; }
  const Matrix& matrix() const { return u_; }

  Matrix a11() const { return u_.block(0, 0, e1_, e1_); }
  Matrix a12() const { return u_.block(0, e1_, e1_, e2_); }
  Matrix a21() const { return u_.block(e1_, 0, e2_, e1_); }
  Matrix a22() const { return u_.block(e1_, e1_, e2_, e2_); }
  Matrix b1() const { return u_.block(0, e1_ + e2_, e1_, h_); }
  Matrix b2() const { return u_.block(e1_, e1_ + e2_, e2_, h_); }
  Matrix c1() const { return u_.block(e1_ + e2_, 0, h_, e1_); }
  Matrix c2() const { return u_.block(e1_ + e2_, e1_, h_, e2_); }
  Matrix d() const { return u_.bottomRightCorner(h_, h_); }

 private:
  int e1_;
  int e2_;
  int h_;
  Matrix u_;
};

/// (e1+e2)×(e1+e2) characteristic matrix A + zB(I − zD)^{-1}C of the
/// two-channel colligation.
Matrix characteristic_matrix(const PartitionedColligation& col, Complex z);

/// The 3×3 section realizing [[s0, zΔ], [Δ, −z s̄0]], Δ = √(1−|s0|²):
///
///   [s0  0  Δ  ]
///   [Δ   0  −s̄0]
///   [0   1  0  ]
struct SchurSection {
  Complex s0;
  PartitionedColligation colligation;
};

SchurSection elementary_schur_section(Complex s0);

/// Couples channel 2 of `outer` to the exterior of `inner` (feedback
/// coupling). State order of the result is [outer state; inner state].
UnitaryColligation redheffer_product(const PartitionedColligation& outer,
                                     const UnitaryColligation& inner);

/// diag(1, U_ω) times the elementary rotation [[s0, Δ], [Δ, −s̄0]] in the
/// first two coordinates. Realizes the inverse Schur transform of ω.
UnitaryColligation inverse_schur_colligation(Complex s0, const UnitaryColligation& omega);

struct GaugeFamilyReport {
  Matrix coupled;             // explicit closed form of the gauged coupling
  double gauge_residual = 0;  // vs diag(1,V*)·U·diag(1,V), V = diag(ε, v)
  double product_residual = 0;  // vs redheffer_product of the gauged factors
  double b_row_residual = 0;  // B block vs [εΔ, 0, …, 0]
};

/// Builds the coupling of the ε-gauged section with the v-gauged ω
/// colligation and checks it against the state gauge diag(ε, v) of
/// inverse_schur_colligation(s0, omega).
GaugeFamilyReport verify_gauge_family(Complex s0, const UnitaryColligation& omega,
                                      Complex epsilon, const Matrix& v);

}  // namespace schurcol
