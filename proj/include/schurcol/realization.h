#pragma once

#include <vector>

#include "schurcol/colligation.h"
#include "schurcol/rational.h"

namespace schurcol {

/// Reproducing kernels e_k(t) = 1/(1 − t z̄_k) at distinct points of the disc,
/// with Gram matrix G_jk = ⟨e_k, e_j⟩ = 1/(1 − z_j z̄_k) = L L*.
struct KernelBasis {
  std::vector<Complex> zeros;
  Matrix gram;
  Matrix cholesky;  // lower-triangular L
  double min_eigenvalue = 0.0;
  double condition = 0.0;
};

/// ZerosTooClose when two points are closer than tol::kSeparation;
/// NotPositiveDefinite if the Gram matrix fails Cholesky.
KernelBasis make_kernel_basis(const std::vector<Complex>& zeros);

struct ModelRealization {
  UnitaryColligation colligation;
  KernelBasis basis;
};

/// Minimal unitary colligation on the span of the kernels at the zeros of b:
/// D acts as the left shift (diagonal z̄_k in the kernel basis), B evaluates
/// at 0, A = b(0), and C holds l(t) = (b(t) − b(0))/t. Coordinates are made
/// orthonormal through the Cholesky factor of the Gram matrix.
ModelRealization model_colligation(const BlaschkeProduct& b);

struct RealizationReport {
  double max_error = 0.0;            // max |S_U(z) − s(z)| over the samples
  double resolvent_residual = 0.0;   // only filled by verify_model_resolvent
};

RealizationReport verify_realization(const Matrix& u, const RationalInner& s,
                                     const std::vector<Complex>& samples);
RealizationReport verify_realization(const UnitaryColligation& col, const RationalInner& s,
                                     const std::vector<Complex>& samples);

/// Checks ((I − zD)^{-1}f)(t) = (t f(t) − z f(z))/(t − z) for each kernel
/// f = e_k, reading D from the model colligation and mapping its
/// orthonormal coordinates back to functions. Returns the largest residual.
double verify_model_resolvent(const ModelRealization& model,
                              const std::vector<Complex>& z_samples,
                              const std::vector<Complex>& t_samples);

struct UniquenessReport {
  bool model_minimal = false;
  bool closed_form_minimal = false;
  bool equivalent = false;
  double intertwining_residual = 0.0;
  Matrix gauge;
};

/// Model realization against the closed form built from the function-level
/// Schur parameters of the same product.
UniquenessReport realization_uniqueness_check(const BlaschkeProduct& b);

}  // namespace schurcol
