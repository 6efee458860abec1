#include "schurcol/redheffer.h"

#include <cmath>
#include <sstream>

namespace schurcol {
namespace {

double defect(Complex s0) {
  if (std::abs(s0) >= 1.0 - tol::kDisc) {
    std::ostringstream msg;
    msg << "|s0| = " << std::abs(s0) << " is not strictly inside the disc";
    throw Error(ErrorKind::kDiscViolation, msg.str());
  }
  return std::sqrt(1.0 - std::norm(s0));
}

}  // namespace

Complex redheffer_transform(Complex s11, Complex s12, Complex s21, Complex s22, Complex omega) {
  const Complex loop = 1.0 - s22 * omega;
  if (std::abs(loop) <= tol::kFeedback)
    throw Error(ErrorKind::kFeedbackSingular, "1 - S22*omega vanishes");
  return s11 + s12 * omega * s21 / loop;
}

PartitionedColligation::PartitionedColligation(int e1, int e2, int h, Matrix u, double tolerance)
    : e1_(e1), e2_(e2), h_(h), u_(std::move(u)) {
  if (e1 < 1 || e2 < 1 || h < 0 || u_.rows() != e1 + e2 + h || u_.cols() != u_.rows())
    throw Error(ErrorKind::kDimensionMismatch, "partition does not match matrix size");
  const double residual = unitarity_residual(u_);
  if (!(residual <= tolerance)) {
    std::ostringstream msg;
    msg << "unitarity residual " << residual << " exceeds " << tolerance;
    throw Error(ErrorKind::kNotUnitary, msg.str());
  }
}

Matrix characteristic_matrix(const PartitionedColligation& col, Complex z) {
  const int e = col.e1() + col.e2();
  const int h = col.h();
  const Matrix& u = col.matrix();
  Matrix a = u.topLeftCorner(e, e);
  if (h == 0) return a;
  const Matrix lhs = Matrix::Identity(h, h) - z * col.d();
  Eigen::PartialPivLU<Matrix> lu(lhs);
  if (std::abs(lu.determinant()) < tol::kPole)
    throw Error(ErrorKind::kNearPole, "I - zD is singular");
  return a + z * u.topRightCorner(e, h) * lu.solve(u.bottomLeftCorner(h, e));
}

SchurSection elementary_schur_section(Complex s0) {
  const double delta = defect(s0);
  Matrix u(3, 3);
  u << s0, 0.0, delta,
       delta, 0.0, -std::conj(s0),
       0.0, 1.0, 0.0;
  return SchurSection{s0, PartitionedColligation(1, 1, 1, std::move(u))};
}

UnitaryColligation redheffer_product(const PartitionedColligation& outer,
                                     const UnitaryColligation& inner) {
  if (outer.e2() != 1)
    throw Error(ErrorKind::kDimensionMismatch, "coupled channel must match the scalar exterior of the inner colligation");
  if (outer.e1() != 1)
    throw Error(ErrorKind::kDimensionMismatch, "result must have a scalar exterior channel");
  const int h1 = outer.h();
  const int h2 = inner.n();
  const Complex alpha = inner.A();
  const Matrix beta = inner.B();
  const Matrix gamma = inner.C();
  const Matrix delta = inner.D();

  const Complex loop = 1.0 - outer.a22()(0, 0) * alpha;
  if (std::abs(loop) <= tol::kFeedback)
    throw Error(ErrorKind::kFeedbackSingular, "1 - a22*alpha vanishes");

  const int size = 1 + h1 + h2;
  Matrix base = Matrix::Zero(size, size);
  base.block(0, 0, 1, 1) = outer.a11();
  base.block(0, 1, 1, h1) = outer.b1();
  base.block(0, 1 + h1, 1, h2) = outer.a12() * beta;
  base.block(1, 0, h1, 1) = outer.c1();
  base.block(1, 1, h1, h1) = outer.d();
  base.block(1, 1 + h1, h1, h2) = outer.c2() * beta;
  base.block(1 + h1, 1 + h1, h2, h2) = delta;

  Matrix column(size, 1);
  column.block(0, 0, 1, 1) = outer.a12() * alpha;
  column.block(1, 0, h1, 1) = outer.c2() * alpha;
  column.block(1 + h1, 0, h2, 1) = gamma;

  Matrix row(1, size);
  row.block(0, 0, 1, 1) = outer.a21();
  row.block(0, 1, 1, h1) = outer.b2();
  row.block(0, 1 + h1, 1, h2) = outer.a22() * beta;

  return UnitaryColligation(base + column * row / loop);
}

UnitaryColligation inverse_schur_colligation(Complex s0, const UnitaryColligation& omega) {
  const double delta = defect(s0);
  const int n = omega.n() + 1;
  Matrix rotation = Matrix::Identity(n + 1, n + 1);
  rotation(0, 0) = s0;
  rotation(0, 1) = delta;
  rotation(1, 0) = delta;
  rotation(1, 1) = -std::conj(s0);
  return UnitaryColligation(embed_state(omega.matrix()) * rotation);
}

GaugeFamilyReport verify_gauge_family(Complex s0, const UnitaryColligation& omega,
                                      Complex epsilon, const Matrix& v) {
  const double delta = defect(s0);
  if (std::abs(std::abs(epsilon) - 1.0) > tol::kUnit)
    throw Error(ErrorKind::kUnitViolation, "epsilon must be unimodular");
  const int m = omega.n();
  if (v.rows() != m || v.cols() != m)
    throw Error(ErrorKind::kDimensionMismatch, "v must act on the state space of omega");
  if (unitarity_residual(v) > tol::kUnitary)
    throw Error(ErrorKind::kNotUnitary, "v is not unitary");

  const Complex alpha = omega.A();
  const Matrix beta_v = omega.B() * v;
  const Matrix gamma_v = v.adjoint() * omega.C();
  const Matrix delta_v = v.adjoint() * omega.D() * v;
  const Complex eps_bar = std::conj(epsilon);

  GaugeFamilyReport report;
  Matrix& u = report.coupled;
  u = Matrix::Zero(m + 2, m + 2);
  u(0, 0) = s0;
  u(0, 1) = epsilon * delta;
  u(1, 0) = alpha * eps_bar * delta;
  u(1, 1) = -alpha * std::conj(s0);
  u.block(1, 2, 1, m) = eps_bar * beta_v;
  u.block(2, 0, m, 1) = gamma_v * delta;
  u.block(2, 1, m, 1) = -gamma_v * epsilon * std::conj(s0);
  u.block(2, 2, m, m) = delta_v;

  Matrix gauge = Matrix::Identity(m + 1, m + 1);
  gauge(0, 0) = epsilon;
  gauge.bottomRightCorner(m, m) = v;
  const Matrix w = embed_state(gauge);
  const UnitaryColligation base = inverse_schur_colligation(s0, omega);
  report.gauge_residual = max_abs(u - w.adjoint() * base.matrix() * w);

  Matrix section_eps = elementary_schur_section(s0).colligation.matrix();
  section_eps.col(2) *= epsilon;
  section_eps.row(2) *= eps_bar;
  const UnitaryColligation omega_v(embed_state(v).adjoint() * omega.matrix() * embed_state(v));
  const UnitaryColligation product =
      redheffer_product(PartitionedColligation(1, 1, 1, section_eps), omega_v);
  report.product_residual = max_abs(u - product.matrix());

  RowVector expected_b = RowVector::Zero(m + 1);
  expected_b(0) = epsilon * delta;
  report.b_row_residual = max_abs(u.block(0, 1, 1, m + 1) - expected_b);
  return report;
}

}  // namespace schurcol
