#include "schurcol/colligation.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace schurcol {
namespace {

// Solves (I − zD) x = rhs; NearPole when the pivoted LU is numerically singular.
Matrix resolvent_solve(const Matrix& d, Complex z, const Matrix& rhs) {
  const int n = static_cast<int>(d.rows());
  const Matrix m = Matrix::Identity(n, n) - z * d;
  Eigen::PartialPivLU<Matrix> lu(m);
  const Eigen::VectorXcd diag = lu.matrixLU().diagonal();
  for (int k = 0; k < n; ++k) {
    if (std::abs(diag(k)) < tol::kPole)
      throw Error(ErrorKind::kNearPole, "I - zD is singular at the evaluation point");
  }
  return lu.solve(rhs);
}

Matrix krylov(const Matrix& d, const Vector& start, int count) {
  const int n = static_cast<int>(d.rows());
  Matrix out(n, count);
  if (count == 0) return out;
  out.col(0) = start;
  for (int k = 1; k < count; ++k) out.col(k) = d * out.col(k - 1);
  return out;
}

Eigen::VectorXd singular_values(const Matrix& m) {
  if (m.size() == 0) return Eigen::VectorXd();
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

}  // namespace

UnitaryColligation::UnitaryColligation(Matrix u, double tolerance) : u_(std::move(u)) {
  if (u_.rows() == 0 || u_.rows() != u_.cols())
    throw Error(ErrorKind::kDimensionMismatch, "colligation matrix must be square and nonempty");
  const double residual = unitarity_residual(u_);
  if (!(residual <= tolerance)) {
    std::ostringstream msg;
    msg << "unitarity residual " << residual << " exceeds " << tolerance;
    throw Error(ErrorKind::kNotUnitary, msg.str());
  }
}

Complex transfer_function(const Matrix& u, Complex z) {
  const int n = static_cast<int>(u.rows()) - 1;
  if (n == 0) return u(0, 0);
  const Matrix x = resolvent_solve(u.bottomRightCorner(n, n), z, u.block(1, 0, n, 1));
  return u(0, 0) + z * (u.block(0, 1, 1, n) * x)(0, 0);
}

Complex characteristic_function(const UnitaryColligation& col, Complex z) {
  return transfer_function(col.matrix(), z);
}

int numerical_rank(const Eigen::VectorXd& singular_values, int n) {
  if (singular_values.size() == 0) return 0;
  const double sigma_max = singular_values.maxCoeff();
  const double threshold = std::max(n + 1, 8) * 1e-10 * sigma_max;
  if (sigma_max == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index k = 0; k < singular_values.size(); ++k)
    if (singular_values(k) > threshold) ++rank;
  return rank;
}

MinimalityReport minimality_report(const Matrix& u) {
  const int n = static_cast<int>(u.rows()) - 1;
  MinimalityReport report;
  if (n <= 0) return report;
  const Matrix d = u.bottomRightCorner(n, n);
  const Matrix ctrl = krylov(d, u.block(1, 0, n, 1), n);
  const Matrix obs = krylov(d.adjoint(), u.block(0, 1, 1, n).adjoint(), n);
  Matrix both(n, 2 * n);
  both << ctrl, obs;
  report.sv_controllability = singular_values(ctrl);
  report.sv_observability = singular_values(obs);
  report.sv_simplicity = singular_values(both);
  // An all-zero Krylov block has rank 0 regardless of the relative threshold.
  auto rank_of = [n](const Eigen::VectorXd& sv) {
    return sv.size() == 0 || sv.maxCoeff() <= tol::kUnitary ? 0 : numerical_rank(sv, n);
  };
  report.rank_controllability = rank_of(report.sv_controllability);
  report.rank_observability = rank_of(report.sv_observability);
  report.rank_simplicity = rank_of(report.sv_simplicity);
  return report;
}

MinimalityReport minimality_report(const UnitaryColligation& col) {
  return minimality_report(col.matrix());
}

namespace {
MinimalityReport consistent_report(const UnitaryColligation& col) {
  MinimalityReport r = minimality_report(col);
  if (r.rank_controllability != r.rank_observability ||
      r.rank_controllability != r.rank_simplicity) {
    std::ostringstream msg;
    msg << "ranks disagree for a unitary colligation: " << r.rank_controllability << ", "
        << r.rank_observability << ", " << r.rank_simplicity;
    throw Error(ErrorKind::kInternalInconsistency, msg.str());
  }
  return r;
}
}  // namespace

bool is_minimal(const UnitaryColligation& col) {
  return consistent_report(col).rank_controllability == col.n();
}

bool is_simple(const UnitaryColligation& col) {
  return consistent_report(col).rank_simplicity == col.n();
}

UnitaryColligation apply_state_gauge(const UnitaryColligation& col, const Matrix& v) {
  if (v.rows() != col.n() || v.cols() != col.n())
    throw Error(ErrorKind::kDimensionMismatch, "gauge size does not match state dimension");
  if (unitarity_residual(v) > tol::kUnitary)
    throw Error(ErrorKind::kNotUnitary, "state gauge is not unitary");
  const Matrix w = embed_state(v);
  return UnitaryColligation(w.adjoint() * col.matrix() * w);
}

double intertwining_residual(const Matrix& u1, const Matrix& u2, const Matrix& v) {
  const Matrix w = embed_state(v);
  return max_abs(w * u2 - u1 * w);
}

Matrix nearest_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

std::optional<Equivalence> find_equivalence(const UnitaryColligation& col1,
                                            const UnitaryColligation& col2) {
  if (!is_simple(col1) || !is_simple(col2))
    throw Error(ErrorKind::kNotSimple, "find_equivalence needs simple colligations");
  const int n = std::max(col1.n(), col2.n());
  // Two rational functions of degree ≤ n agree once 2n+1 Taylor coefficients do.
  const auto m1 = markov_parameters(col1, 2 * n + 1);
  const auto m2 = markov_parameters(col2, 2 * n + 1);
  for (std::size_t k = 0; k < m1.size(); ++k)
    if (std::abs(m1[k] - m2[k]) > tol::kRound) return std::nullopt;
  if (col1.n() != col2.n()) return std::nullopt;
  if (n == 0) return Equivalence{Matrix(0, 0), std::abs(col1.A() - col2.A())};

  // V maps f₂ᵏ = D₂ᵏC₂ to f₁ᵏ and g₂ˡ = (D₂*)ˡB₂* to g₁ˡ.
  auto generators = [n](const UnitaryColligation& col) {
    Matrix k(n, 2 * n);
    k << krylov(col.D(), col.C(), n), krylov(col.D().adjoint(), col.B().adjoint(), n);
    return k;
  };
  const Matrix k1 = generators(col1);
  const Matrix k2 = generators(col2);
  // V K₂ = K₁ solved in the least-squares sense: K₂* V* = K₁*.
  const Matrix v_adj = k2.adjoint().completeOrthogonalDecomposition().solve(k1.adjoint());
  const Matrix v = nearest_unitary(v_adj.adjoint());
  Equivalence eq{v, intertwining_residual(col1.matrix(), col2.matrix(), v)};
  if (eq.residual > tol::kEquiv) {
    std::ostringstream msg;
    msg << "equal characteristic functions but intertwining residual " << eq.residual;
    throw Error(ErrorKind::kInternalInconsistency, msg.str());
  }
  return eq;
}

std::vector<Complex> markov_parameters(const Matrix& u, int m) {
  const int n = static_cast<int>(u.rows()) - 1;
  std::vector<Complex> out;
  out.reserve(std::max(m, 0));
  if (m <= 0) return out;
  out.push_back(u(0, 0));
  if (n == 0) {
    out.resize(m, Complex(0.0));
    return out;
  }
  const Matrix d = u.bottomRightCorner(n, n);
  const RowVector b = u.block(0, 1, 1, n);
  Vector x = u.block(1, 0, n, 1);
  for (int k = 1; k < m; ++k) {
    out.push_back((b * x)(0, 0));
    x = d * x;
  }
  return out;
}

std::vector<Complex> markov_parameters(const UnitaryColligation& col, int m) {
  return markov_parameters(col.matrix(), m);
}

int hankel_rank(const UnitaryColligation& col, int k) {
  const auto h = markov_parameters(col, 2 * k + 1);
  Matrix hankel(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) hankel(i, j) = h[i + j + 1];
  return numerical_rank(singular_values(hankel), col.n());
}

Simulation simulate_time_domain(const Matrix& u, const std::vector<Complex>& inputs,
                                const Vector& h0) {
  const int n = static_cast<int>(u.rows()) - 1;
  if (h0.size() != n)
    throw Error(ErrorKind::kDimensionMismatch, "initial state has wrong dimension");
  Simulation sim;
  sim.outputs.reserve(inputs.size());
  sim.states.reserve(inputs.size() + 1);
  sim.states.push_back(h0);
  // Blockwise, in the same operation order as markov_parameters, so an
  // impulse reproduces the Markov parameters bit for bit.
  const Complex a = u(0, 0);
  const RowVector b = u.block(0, 1, 1, n);
  const Vector c = u.block(1, 0, n, 1);
  const Matrix d = u.bottomRightCorner(n, n);
  for (const Complex& phi : inputs) {
    const Vector& h = sim.states.back();
    const Complex psi = n == 0 ? a * phi : a * phi + (b * h)(0, 0);
    Vector next = d * h;
    next += c * phi;
    sim.outputs.push_back(psi);
    sim.states.push_back(std::move(next));
  }
  return sim;
}

Simulation simulate_time_domain(const UnitaryColligation& col,
                                const std::vector<Complex>& inputs, const Vector& h0) {
  return simulate_time_domain(col.matrix(), inputs, h0);
}

double energy_defect(const std::vector<Complex>& inputs, const Simulation& sim) {
  double in = sim.states.front().squaredNorm();
  double out = sim.states.back().squaredNorm();
  for (const Complex& phi : inputs) in += std::norm(phi);
  for (const Complex& psi : sim.outputs) out += std::norm(psi);
  return out - in;
}

double SpectralReport::max_residual() const {
  return std::max({kernel_input, kernel_output, difference, difference_adjoint,
                   diagonal_input, diagonal_output});
}

SpectralReport verify_spectral_identities(const Matrix& u, const std::vector<Complex>& z,
                                          const std::vector<Complex>& zeta) {
  if (z.size() != zeta.size())
    throw Error(ErrorKind::kDimensionMismatch, "sample lists differ in length");
  const int n = static_cast<int>(u.rows()) - 1;
  const Matrix d = u.bottomRightCorner(n, n);
  const Matrix b = u.block(0, 1, 1, n);
  const Matrix c = u.block(1, 0, n, 1);
  const Matrix d_adj = d.adjoint();
  SpectralReport r;
  auto track = [](double& slot, Complex lhs, Complex rhs) {
    slot = std::max(slot, std::abs(lhs - rhs));
  };
  for (std::size_t k = 0; k < z.size(); ++k) {
    const Complex zk = z[k];
    const Complex wk = zeta[k];
    const Complex sz = transfer_function(u, zk);
    const Complex sw = transfer_function(u, wk);
    // (I − zD)^{-1}C, (I − ζD)^{-1}C, (I − z̄D*)^{-1}B*, (I − ζ̄D*)^{-1}B*.
    const Matrix rz_c = resolvent_solve(d, zk, c);
    const Matrix rw_c = resolvent_solve(d, wk, c);
    const Matrix rz_b = resolvent_solve(d_adj, std::conj(zk), b.adjoint());
    const Matrix rw_b = resolvent_solve(d_adj, std::conj(wk), b.adjoint());

    track(r.kernel_input, (1.0 - std::conj(sw) * sz) / (1.0 - std::conj(wk) * zk),
          (rw_c.adjoint() * rz_c)(0, 0));
    track(r.kernel_output, (1.0 - sz * std::conj(sw)) / (1.0 - zk * std::conj(wk)),
          (rz_b.adjoint() * rw_b)(0, 0));
    track(r.diagonal_input, 1.0 - std::norm(sz), (1.0 - std::norm(zk)) * rz_c.squaredNorm());
    track(r.diagonal_output, 1.0 - std::norm(sz), (1.0 - std::norm(zk)) * rz_b.squaredNorm());
    if (std::abs(wk - zk) >= 1e-6) {
      // B(I−ζD)^{-1}(I−zD)^{-1}C and C*(I−ζ̄D*)^{-1}(I−z̄D*)^{-1}B*.
      const Matrix chained = resolvent_solve(d, wk, rz_c);
      track(r.difference, (sw - sz) / (wk - zk), (b * chained)(0, 0));
      const Matrix chained_adj = resolvent_solve(d_adj, std::conj(wk), rz_b);
      track(r.difference_adjoint, (std::conj(sw) - std::conj(sz)) / std::conj(wk - zk),
            (c.adjoint() * chained_adj)(0, 0));
    }
  }
  return r;
}

SpectralReport verify_spectral_identities(const UnitaryColligation& col,
                                          const std::vector<Complex>& z,
                                          const std::vector<Complex>& zeta) {
  return verify_spectral_identities(col.matrix(), z, zeta);
}

}  // namespace schurcol
