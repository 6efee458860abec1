#pragma once

#include <vector>

#include "schurcol/common.h"

namespace schurcol {

enum class Orientation { kLower, kUpper };

/// How a row is rotated onto a prescribed row of equal norm.
enum class RowMatchMethod {
  kReflector,  // phase times a single complex Householder reflector
  kGivens,     // chain of 2×2 rotations, used to cross-check uniqueness
};

/// Unitary V with B1·V = B2. Requires ‖B1‖ = ‖B2‖ ≠ 0 (relative tol::kNorm).
/// With λ the unimodular number making λ·B1·B2* ≥ 0 (λ = 1 if B1·B2* = 0),
/// V = λ(I − 2e*e/‖e‖²) for e = B1 − λ̄B2, or V = λI when e vanishes.
Matrix match_rows(const RowVector& b1, const RowVector& b2);

/// Unitary V with B·V = [‖B‖, 0, …, 0].
Matrix normalize_first_row(const RowVector& b, RowMatchMethod method = RowMatchMethod::kReflector);

struct HessenbergCertificate {
  Matrix h;
  Matrix v;
  Orientation orientation = Orientation::kLower;
  std::vector<double> band;  // superdiagonal (lower) or subdiagonal (upper)
};

/// H = diag(1,V*)·M·diag(1,V) zero above the first superdiagonal, with a
/// real nonnegative superdiagonal. Rows whose tail is already zero get a zero
/// band entry and an identity step.
HessenbergCertificate reduce_to_special_lower_hessenberg(
    const Matrix& m, RowMatchMethod method = RowMatchMethod::kReflector);

/// Same gauge form, zero below the first subdiagonal. Computed by reducing M*
/// to lower form and taking the adjoint of the result.
HessenbergCertificate reduce_to_special_upper_hessenberg(
    const Matrix& m, RowMatchMethod method = RowMatchMethod::kReflector);

/// `tolerance` is relative to max|M| for the structural zeros and the band.
bool is_special_lower_hessenberg(const Matrix& m, double tolerance = tol::kStruct);
bool is_special_upper_hessenberg(const Matrix& m, double tolerance = tol::kStruct);
bool is_hl_nonsingular(const Matrix& m, double tolerance = tol::kStruct);
bool is_hu_nonsingular(const Matrix& m, double tolerance = tol::kStruct);

/// Largest |H_jk| with k > j+1 (lower) or k < j−1 (upper).
double structural_residual(const Matrix& h, Orientation orientation);

/// Observability of a unitary colligation read off its lower Hessenberg form.
bool hessenberg_minimality(const Matrix& u);

}  // namespace schurcol
