#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurcol/colligation.h"
#include "schurcol/rational.h"

namespace schurcol {

/// Gauge-equivalent colligation whose B row is [√(1−|A|²), 0, …, 0].
/// Terminal if |A| ≥ 1 − tol::kDisc.
UnitaryColligation normalize_B_row(const UnitaryColligation& col);

struct SchurStepResult {
  Complex parameter;
  UnitaryColligation next;  // size one less; 1×1 holds the terminal parameter
};

/// One state-space Schur step on a colligation whose B row is already
/// normalized: next = [[C₁/Δ, D₁₂], [C₂/Δ, D₂₂]]. The alternative closed
/// forms (subtractive, and division by s̄0) are checked against it.
SchurStepResult schur_step(const UnitaryColligation& col);

struct TerminationDiagnostic {
  int step = 0;
  double margin = 0.0;  // 1 − |A| at the step that stopped
  std::string message;
};

struct SchurStateTrace {
  SchurParameterSequence parameters;
  std::vector<Matrix> matrices;  // U⁰ (Hessenberg-normalized), U¹, …
  std::vector<Polynomial> denominators;
  std::optional<TerminationDiagnostic> early_termination;

  bool complete() const { return !early_termination.has_value(); }
};

struct SchurOptions {
  /// Re-run normalize_B_row before each step instead of relying on the
  /// one-time Hessenberg normalization.
  bool renormalize_each_step = false;
};

/// Reduces to special lower Hessenberg form once, then peels off one
/// parameter per step. A step with |A| ≥ 1 − tol::kDisc before the state
/// space is exhausted stops the recursion; the trace then holds the
/// parameters found so far (the last one unimodular) and a diagnostic.
SchurStateTrace schur_algorithm_state_space(const UnitaryColligation& col,
                                            const SchurOptions& options = {});

/// Entry formula: u₀₀ = s₀, u_j0 = s_jΔ_{j−1}⋯Δ₀, u_jk = −s_jΔ_{j−1}⋯Δ_k s̄_{k−1},
/// u_{j,j+1} = Δ_j, zero above the superdiagonal. Both constructors use
/// s_n/|s_n| for the terminal parameter.
Matrix closed_form_matrix(const SchurParameterSequence& p);

/// diag(I_n, s_n)·R_{n−1}⋯R₀ with R_p the rotation [[s_p, Δ_p], [Δ_p, −s̄_p]]
/// in coordinates (p, p+1).
Matrix product_form_matrix(const SchurParameterSequence& p);

/// Closed form, cross-checked entrywise against the product form (1e-12).
UnitaryColligation colligation_from_schur_parameters(const SchurParameterSequence& p);

/// det(I − zD) coefficients (ascending, constant term 1) from values at the
/// (m+1)-th roots of unity.
Polynomial determinant_polynomial(const Matrix& d);

/// χ_p(z) = det(I − zD^p) for every matrix of the trace.
std::vector<Polynomial> denominator_chain(const SchurStateTrace& trace);

}  // namespace schurcol
