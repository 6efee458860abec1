#include "schurcol/schur_state.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "schurcol/hessenberg.h"

namespace schurcol {
namespace {

// The sequence type admits |s_n| within τ_unit of 1; the matrices need it exact.
Complex terminal(const SchurParameterSequence& p) {
  const Complex s = p.params().back();
  return s / std::abs(s);
}

void check_non_terminal(Complex a, int step) {
  if (std::abs(a) >= 1.0 - tol::kDisc) {
    std::ostringstream msg;
    msg << "|A| = " << std::abs(a) << " at step " << step;
    throw Error(ErrorKind::kTerminal, msg.str());
  }
}

}  // namespace

UnitaryColligation normalize_B_row(const UnitaryColligation& col) {
  check_non_terminal(col.A(), 0);
  if (col.n() == 0) throw Error(ErrorKind::kTerminal, "no state space to normalize");
  const Matrix v = normalize_first_row(col.B());
  Matrix u = embed_state(v).adjoint() * col.matrix() * embed_state(v);
  // The reflector leaves O(eps) residue in the tail of B; the target is exact.
  u(0, 1) = u(0, 1).real();
  u.block(0, 2, 1, col.n() - 1).setZero();
  return UnitaryColligation(std::move(u));
}

SchurStepResult schur_step(const UnitaryColligation& col) {
  const int n = col.n();
  if (n < 1) throw Error(ErrorKind::kTerminal, "a 1x1 colligation has no Schur step");
  const Complex s0 = col.A();
  check_non_terminal(s0, 0);
  const double delta = std::sqrt(1.0 - std::norm(s0));
  const RowVector b = col.B();
  const double eps = tol::kStruct * std::max(1.0, max_abs(col.matrix()));
  const bool tail_zero = n == 1 || b.tail(n - 1).cwiseAbs().maxCoeff() <= eps;
  if (!tail_zero || std::abs(b(0).imag()) > eps || std::abs(b(0).real() - delta) > tol::kNorm)
    throw Error(ErrorKind::kNotNormalized, "B row is not of the form [sqrt(1-|s0|^2), 0, ...]");

  const Vector c = col.C();
  const Matrix d = col.D();
  Matrix next(n, n);
  next.col(0) = c / delta;
  if (n > 1) next.rightCols(n - 1) = d.rightCols(n - 1);

  // Subtractive form −d·s0 + c·Δ on the first column of D.
  const Vector subtractive = -d.col(0) * s0 + c * delta;
  double disagreement = (subtractive - next.col(0)).cwiseAbs().maxCoeff();
  if (std::abs(s0) >= 1e-2) {
    const Vector divided = -d.col(0) / std::conj(s0);
    disagreement = std::max(disagreement, (divided - next.col(0)).cwiseAbs().maxCoeff());
  }
  if (disagreement > tol::kRound) {
    std::ostringstream msg;
    msg << "closed forms of the Schur step disagree by " << disagreement;
    throw Error(ErrorKind::kInternalInconsistency, msg.str());
  }
  return {s0, UnitaryColligation(std::move(next))};
}

SchurStateTrace schur_algorithm_state_space(const UnitaryColligation& col,
                                            const SchurOptions& options) {
  std::vector<Complex> params;
  std::vector<Matrix> matrices;
  std::optional<TerminationDiagnostic> stop;

  UnitaryColligation current =
      col.n() == 0 ? col : UnitaryColligation(reduce_to_special_lower_hessenberg(col.matrix()).h);
  matrices.push_back(current.matrix());
  for (int step = 0;; ++step) {
    const Complex a = current.A();
    if (current.n() == 0) {
      params.push_back(a);
      break;
    }
    if (std::abs(a) >= 1.0 - tol::kDisc) {
      params.push_back(a);
      std::ostringstream msg;
      msg << "Terminal: |s_" << step << "| = " << std::abs(a) << " with " << current.n()
          << " state dimension(s) left; input is not minimal";
      stop = TerminationDiagnostic{step, 1.0 - std::abs(a), msg.str()};
      break;
    }
    if (options.renormalize_each_step) current = normalize_B_row(current);
    SchurStepResult result = schur_step(current);
    params.push_back(result.parameter);
    current = std::move(result.next);
    matrices.push_back(current.matrix());
  }

  SchurStateTrace trace{SchurParameterSequence(std::move(params)), std::move(matrices), {},
                        std::move(stop)};
  trace.denominators = denominator_chain(trace);
  return trace;
}

Matrix closed_form_matrix(const SchurParameterSequence& p) {
  const int n = p.degree();
  const auto& s = p.params();
  std::vector<double> delta(n);
  for (int j = 0; j < n; ++j) delta[j] = std::sqrt(1.0 - std::norm(s[j]));

  const auto at = [&](int k) { return k == n ? terminal(p) : s[k]; };
  Matrix u = Matrix::Zero(n + 1, n + 1);
  u(0, 0) = at(0);
  for (int j = 1; j <= n; ++j) {
    // running = Δ_{j−1}⋯Δ_k, built from k = j downwards.
    double running = 1.0;
    for (int k = j; k >= 1; --k) {
      u(j, k) = -at(j) * running * std::conj(s[k - 1]);
      running *= delta[k - 1];
    }
    u(j, 0) = at(j) * running;
  }
  for (int j = 0; j < n; ++j) u(j, j + 1) = delta[j];
  return u;
}

Matrix product_form_matrix(const SchurParameterSequence& p) {
  const int n = p.degree();
  const auto& s = p.params();
  Matrix u = Matrix::Identity(n + 1, n + 1);
  u(n, n) = terminal(p);
  for (int k = n - 1; k >= 0; --k) {
    const double delta = std::sqrt(1.0 - std::norm(s[k]));
    Matrix rotation(2, 2);
    rotation << s[k], delta, delta, -std::conj(s[k]);
    u.middleCols(k, 2) = (u.middleCols(k, 2) * rotation).eval();
  }
  return u;
}

UnitaryColligation colligation_from_schur_parameters(const SchurParameterSequence& p) {
  Matrix closed = closed_form_matrix(p);
  const double gap = max_abs(closed - product_form_matrix(p));
  if (gap > 1e-12) {
    std::ostringstream msg;
    msg << "closed-form and product-form matrices differ by " << gap;
    throw Error(ErrorKind::kInternalInconsistency, msg.str());
  }
  return UnitaryColligation(std::move(closed));
}

Polynomial determinant_polynomial(const Matrix& d) {
  const int m = static_cast<int>(d.rows());
  if (m == 0) return {Complex(1.0)};
  const int points = m + 1;
  std::vector<Complex> values(points);
  std::vector<Complex> nodes(points);
  for (int k = 0; k < points; ++k) {
    nodes[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / points);
    values[k] = (Matrix::Identity(m, m) - nodes[k] * d).partialPivLu().determinant();
  }
  Polynomial coeffs(points, Complex(0.0));
  for (int j = 0; j < points; ++j) {
    for (int k = 0; k < points; ++k) coeffs[j] += values[k] * std::conj(std::pow(nodes[k], j));
    coeffs[j] /= static_cast<double>(points);
  }
  const Complex c0 = coeffs[0];
  for (auto& c : coeffs) c /= c0;
  return coeffs;
}

std::vector<Polynomial> denominator_chain(const SchurStateTrace& trace) {
  std::vector<Polynomial> out;
  out.reserve(trace.matrices.size());
  for (const Matrix& u : trace.matrices) {
    const int n = static_cast<int>(u.rows()) - 1;
    out.push_back(determinant_polynomial(u.bottomRightCorner(n, n)));
  }
  return out;
}

}  // namespace schurcol
