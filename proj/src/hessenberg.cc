#include "schurcol/hessenberg.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace schurcol {
namespace {

double scale_of(const Matrix& m) {
  const double s = max_abs(m);
  return s > 0.0 ? s : 1.0;
}

Matrix givens_normalize(const RowVector& b) {
  const int n = static_cast<int>(b.size());
  Matrix v = Matrix::Identity(n, n);
  RowVector work = b;
  for (int k = n - 1; k >= 1; --k) {
    const Complex a = work(k - 1);
    const Complex c = work(k);
    const double r = std::hypot(std::abs(a), std::abs(c));
    if (r == 0.0) continue;
    Matrix g(2, 2);
    g << std::conj(a) / r, -c / r, std::conj(c) / r, a / r;
    work.segment(k - 1, 2) = (work.segment(k - 1, 2) * g).eval();
    v.middleCols(k - 1, 2) = (v.middleCols(k - 1, 2) * g).eval();
  }
  // Only the single-coordinate case can leave a phase on the first entry.
  const double r0 = std::abs(work(0));
  if (r0 > 0.0) v.col(0) *= std::conj(work(0)) / r0;
  return v;
}

}  // namespace

Matrix match_rows(const RowVector& b1, const RowVector& b2) {
  if (b1.size() != b2.size())
    throw Error(ErrorKind::kDimensionMismatch, "rows to match differ in length");
  const double n1 = b1.norm();
  const double n2 = b2.norm();
  if (n1 == 0.0 || n2 == 0.0) throw Error(ErrorKind::kZeroVector, "cannot match a zero row");
  if (std::abs(n1 - n2) > tol::kNorm * std::max(n1, n2)) {
    std::ostringstream msg;
    msg << "row norms differ: " << n1 << " vs " << n2;
    throw Error(ErrorKind::kNormMismatch, msg.str());
  }
  const int n = static_cast<int>(b1.size());
  const Complex inner = (b1 * b2.adjoint())(0, 0);
  const Complex lambda =
      std::abs(inner) > 0.0 ? std::conj(inner) / std::abs(inner) : Complex(1.0);
  const RowVector e = b1 - std::conj(lambda) * b2;
  const double e_norm = e.norm();
  if (e_norm <= 1e-14 * n1) {
    // B2 = λB1 up to roundoff.
    return lambda * Matrix::Identity(n, n);
  }
  Matrix v = Matrix::Identity(n, n) - (2.0 / (e_norm * e_norm)) * (e.adjoint() * e);
  return lambda * v;
}

Matrix normalize_first_row(const RowVector& b, RowMatchMethod method) {
  const double norm = b.norm();
  if (b.size() == 0 || norm == 0.0) throw Error(ErrorKind::kZeroVector, "cannot normalize a zero row");
  if (method == RowMatchMethod::kGivens) return givens_normalize(b);
  RowVector target = RowVector::Zero(b.size());
  target(0) = norm;
  return match_rows(b, target);
}

HessenbergCertificate reduce_to_special_lower_hessenberg(const Matrix& m, RowMatchMethod method) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw Error(ErrorKind::kDimensionMismatch, "Hessenberg reduction needs a square matrix of size >= 2");
  const int n = static_cast<int>(m.rows()) - 1;
  const double zero_row = tol::kStruct * scale_of(m);
  HessenbergCertificate cert;
  cert.orientation = Orientation::kLower;
  cert.h = m;
  cert.v = Matrix::Identity(n, n);
  cert.band.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    const int len = n - j;
    const RowVector tail = cert.h.block(j, j + 1, 1, len);
    if (tail.norm() <= zero_row) {
      cert.h.block(j, j + 1, 1, len).setZero();
      continue;
    }
    const Matrix w = normalize_first_row(tail, method);
    cert.h.rightCols(len) = (cert.h.rightCols(len) * w).eval();
    cert.h.bottomRows(len) = (w.adjoint() * cert.h.bottomRows(len)).eval();
    cert.v.rightCols(len) = (cert.v.rightCols(len) * w).eval();
    cert.h(j, j + 1) = cert.h(j, j + 1).real();
    if (len > 1) cert.h.block(j, j + 2, 1, len - 1).setZero();
    cert.band[j] = cert.h(j, j + 1).real();
  }
  return cert;
}

HessenbergCertificate reduce_to_special_upper_hessenberg(const Matrix& m, RowMatchMethod method) {
  HessenbergCertificate cert = reduce_to_special_lower_hessenberg(m.adjoint(), method);
  cert.h = cert.h.adjoint().eval();
  cert.orientation = Orientation::kUpper;
  return cert;
}

double structural_residual(const Matrix& h, Orientation orientation) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < h.rows(); ++j)
    for (Eigen::Index k = 0; k < h.cols(); ++k) {
      const bool outside = orientation == Orientation::kLower ? k > j + 1 : k < j - 1;
      if (outside) worst = std::max(worst, std::abs(h(j, k)));
    }
  return worst;
}

namespace {

bool special_band(const Matrix& m, Orientation orientation, double tolerance) {
  if (m.rows() != m.cols()) return false;
  const double eps = tolerance * scale_of(m);
  if (structural_residual(m, orientation) > eps) return false;
  for (Eigen::Index j = 0; j + 1 < m.rows(); ++j) {
    const Complex x = orientation == Orientation::kLower ? m(j, j + 1) : m(j + 1, j);
    if (std::abs(x.imag()) > eps || x.real() < -eps) return false;
  }
  return true;
}

bool nonsingular_band(const Matrix& m, Orientation orientation, double tolerance) {
  if (m.rows() != m.cols()) return false;
  const double eps = tolerance * scale_of(m);
  if (structural_residual(m, orientation) > eps) return false;
  for (Eigen::Index j = 0; j + 1 < m.rows(); ++j) {
    const Complex x = orientation == Orientation::kLower ? m(j, j + 1) : m(j + 1, j);
    if (std::abs(x) <= eps) return false;
  }
  return true;
}

}  // namespace

bool is_special_lower_hessenberg(const Matrix& m, double tolerance) {
  return special_band(m, Orientation::kLower, tolerance);
}

bool is_special_upper_hessenberg(const Matrix& m, double tolerance) {
  return special_band(m, Orientation::kUpper, tolerance);
}

bool is_hl_nonsingular(const Matrix& m, double tolerance) {
  return nonsingular_band(m, Orientation::kLower, tolerance);
}

bool is_hu_nonsingular(const Matrix& m, double tolerance) {
  return nonsingular_band(m, Orientation::kUpper, tolerance);
}

bool hessenberg_minimality(const Matrix& u) {
  if (unitarity_residual(u) > tol::kUnitary)
    throw Error(ErrorKind::kNotUnitary, "hessenberg_minimality needs a unitary matrix");
  const int n = static_cast<int>(u.rows()) - 1;
  if (n == 0) return true;
  const HessenbergCertificate cert = reduce_to_special_lower_hessenberg(u);
  // Same relative threshold as the singular-value rank test.
  return is_hl_nonsingular(cert.h, std::max(n + 1, 8) * 1e-10);
}

}  // namespace schurcol
