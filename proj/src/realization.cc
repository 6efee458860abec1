#include "schurcol/realization.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "schurcol/schur_state.h"

namespace schurcol {
namespace {

Complex kernel(Complex zero, Complex t) { return 1.0 / (1.0 - t * std::conj(zero)); }

// T = L* maps kernel coefficients μ to orthonormal coordinates x = Tμ.
Matrix coefficient_to_orthonormal(const KernelBasis& basis) { return basis.cholesky.adjoint(); }

Vector orthonormal_to_coefficient(const KernelBasis& basis, const Vector& x) {
  return basis.cholesky.adjoint().triangularView<Eigen::Upper>().solve(x);
}

}  // namespace

KernelBasis make_kernel_basis(const std::vector<Complex>& zeros) {
  const int n = static_cast<int>(zeros.size());
  for (int j = 0; j < n; ++j) {
    if (std::abs(zeros[j]) >= 1.0 - tol::kDisc)
      throw Error(ErrorKind::kDiscViolation, "kernel point outside the open disc");
    for (int k = j + 1; k < n; ++k) {
      if (std::abs(zeros[j] - zeros[k]) < tol::kSeparation) {
        std::ostringstream msg;
        msg << "zeros " << j << " and " << k << " are " << std::abs(zeros[j] - zeros[k])
            << " apart (minimum " << tol::kSeparation << ")";
        throw Error(ErrorKind::kZerosTooClose, msg.str());
      }
    }
  }
  KernelBasis basis;
  basis.zeros = zeros;
  basis.gram = Matrix(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) basis.gram(j, k) = kernel(zeros[k], zeros[j]);

  if (n > 0) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(basis.gram, Eigen::EigenvaluesOnly);
    basis.min_eigenvalue = eig.eigenvalues().minCoeff();
    basis.condition = eig.eigenvalues().maxCoeff() / basis.min_eigenvalue;
    if (!(basis.min_eigenvalue > tol::kPositiveDefinite))
      throw Error(ErrorKind::kNotPositiveDefinite, "Gram matrix of the kernels is not positive definite");
    Eigen::LLT<Matrix> llt(basis.gram);
    if (llt.info() != Eigen::Success)
      throw Error(ErrorKind::kNotPositiveDefinite, "Cholesky factorization of the Gram matrix failed");
    basis.cholesky = llt.matrixL();
  } else {
    basis.cholesky = Matrix(0, 0);
  }
  return basis;
}

ModelRealization model_colligation(const BlaschkeProduct& b) {
  KernelBasis basis = make_kernel_basis(b.zeros());
  const int n = b.degree();
  const Complex s0 = b(0.0);
  if (n == 0) return {UnitaryColligation(Matrix::Constant(1, 1, s0)), std::move(basis)};

  // l(z_j) = (b(z_j) − b(0))/z_j = −b(0)/z_j, with l(0) = b'(0).
  Vector l_at_zeros(n);
  for (int j = 0; j < n; ++j) {
    const Complex z = b.zeros()[j];
    if (std::abs(z) > 0.0) {
      l_at_zeros(j) = -s0 / z;
    } else {
      l_at_zeros(j) = derivative_at_zero(blaschke_to_rational(b));
    }
  }

  const Matrix t = coefficient_to_orthonormal(basis);
  const Matrix t_inv =
      t.triangularView<Eigen::Upper>().solve(Matrix::Identity(n, n));
  Matrix shift = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) shift(k, k) = std::conj(b.zeros()[k]);

  Matrix u(n + 1, n + 1);
  u(0, 0) = s0;
  u.block(0, 1, 1, n) = RowVector::Ones(n) * t_inv;
  // x = L*·G^{-1}·v = L^{-1}·v.
  u.block(1, 0, n, 1) = basis.cholesky.triangularView<Eigen::Lower>().solve(l_at_zeros);
  u.bottomRightCorner(n, n) = t * shift * t_inv;
  return {UnitaryColligation(std::move(u)), std::move(basis)};
}

RealizationReport verify_realization(const Matrix& u, const RationalInner& s,
                                     const std::vector<Complex>& samples) {
  RealizationReport report;
  for (const Complex& z : samples)
    report.max_error = std::max(report.max_error, std::abs(transfer_function(u, z) - eval(s, z)));
  return report;
}

RealizationReport verify_realization(const UnitaryColligation& col, const RationalInner& s,
                                     const std::vector<Complex>& samples) {
  return verify_realization(col.matrix(), s, samples);
}

double verify_model_resolvent(const ModelRealization& model,
                              const std::vector<Complex>& z_samples,
                              const std::vector<Complex>& t_samples) {
  const KernelBasis& basis = model.basis;
  const int n = model.colligation.n();
  const Matrix d = model.colligation.D();
  const Matrix t = coefficient_to_orthonormal(basis);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const Complex zero = basis.zeros[k];
    for (const Complex& z : z_samples) {
      const Vector x = t.col(k);
      const Vector y = (Matrix::Identity(n, n) - z * d).partialPivLu().solve(x);
      const Vector mu = orthonormal_to_coefficient(basis, y);
      for (const Complex& tp : t_samples) {
        if (std::abs(tp - z) < 1e-6) continue;
        Complex lhs = 0.0;
        for (int j = 0; j < n; ++j) lhs += mu(j) * kernel(basis.zeros[j], tp);
        const Complex rhs = (tp * kernel(zero, tp) - z * kernel(zero, z)) / (tp - z);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
  }
  return worst;
}

UniquenessReport realization_uniqueness_check(const BlaschkeProduct& b) {
  const ModelRealization model = model_colligation(b);
  const UnitaryColligation closed =
      colligation_from_schur_parameters(schur_parameters(blaschke_to_rational(b)));
  UniquenessReport report;
  report.model_minimal = is_minimal(model.colligation);
  report.closed_form_minimal = is_minimal(closed);
  if (!report.model_minimal || !report.closed_form_minimal)
    throw Error(ErrorKind::kNotMinimal, "realization is not minimal");
  const auto eq = find_equivalence(model.colligation, closed);
  if (eq) {
    report.equivalent = true;
    report.intertwining_residual = eq->residual;
    report.gauge = eq->v;
  }
  return report;
}

}  // namespace schurcol
