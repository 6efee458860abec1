#pragma once

#include <optional>
#include <vector>

#include "schurcol/common.h"

namespace schurcol {

/// Unitary (n+1)×(n+1) colligation matrix U = [A B; C D] with a scalar
/// exterior channel and an n-dimensional state space.
class UnitaryColligation {
 public:
  /// Throws NotUnitary when unitarity_residual(u) > tolerance.
  explicit UnitaryColligation(Matrix u, double tolerance = tol::kUnitary);

  int n() const { return static_cast<int>(u_.rows()) - 1; }
  const Matrix& matrix() const { return u_; }

  Complex A() const { return u_(0, 0); }
  RowVector B() const { return u_.block(0, 1, 1, n()); }
  Vector C() const { return u_.block(1, 0, n(), 1); }
  Matrix D() const { return u_.bottomRightCorner(n(), n()); }

 private:
  Matrix u_;
};

/// A + zB(I − zD)^{-1}C for an arbitrary square block matrix (no unitarity
/// required). Uses a pivoted LU solve; NearPole if I − zD is singular.
Complex transfer_function(const Matrix& u, Complex z);

Complex characteristic_function(const UnitaryColligation& col, Complex z);

struct MinimalityReport {
  int rank_controllability = 0;
  int rank_observability = 0;
  int rank_simplicity = 0;
  Eigen::VectorXd sv_controllability;
  Eigen::VectorXd sv_observability;
  Eigen::VectorXd sv_simplicity;
};

/// Singular values above max(n+1, 8)·1e-10·σ_max count toward rank.
int numerical_rank(const Eigen::VectorXd& singular_values, int n);

/// Ranks of [C, DC, …, D^{n-1}C], [B*, D*B*, …, (D*)^{n-1}B*] and of the two
/// side by side. Works on any square block matrix.
MinimalityReport minimality_report(const Matrix& u);
MinimalityReport minimality_report(const UnitaryColligation& col);

/// Both throw InternalInconsistency if the three ranks disagree, which cannot
/// happen for a unitary colligation.
bool is_minimal(const UnitaryColligation& col);
bool is_simple(const UnitaryColligation& col);

/// diag(1, V*)·U·diag(1, V).
UnitaryColligation apply_state_gauge(const UnitaryColligation& col, const Matrix& v);

struct Equivalence {
  Matrix v;
  double residual = 0.0;  // ‖diag(1,V)U₂ − U₁diag(1,V)‖_max
};

/// State-space unitary V with diag(1,V)·U₂ = U₁·diag(1,V), or nothing when
/// the characteristic functions differ. Both inputs must be simple.
std::optional<Equivalence> find_equivalence(const UnitaryColligation& col1,
                                            const UnitaryColligation& col2);

double intertwining_residual(const Matrix& u1, const Matrix& u2, const Matrix& v);

/// A, BC, BDC, …, BD^{m-2}C.
std::vector<Complex> markov_parameters(const Matrix& u, int m);
std::vector<Complex> markov_parameters(const UnitaryColligation& col, int m);

/// Rank of the (k×k) Hankel matrix of BC, BDC, … built from 2k coefficients.
int hankel_rank(const UnitaryColligation& col, int k);

struct Simulation {
  std::vector<Complex> outputs;
  std::vector<Vector> states;  // h_0, …, h_m
};

/// [ψ_k; h_{k+1}] = U [φ_k; h_k].
Simulation simulate_time_domain(const Matrix& u, const std::vector<Complex>& inputs,
                                const Vector& h0);
Simulation simulate_time_domain(const UnitaryColligation& col,
                                const std::vector<Complex>& inputs, const Vector& h0);

/// Σ|ψ|² + ‖h_m‖² − Σ|φ|² − ‖h_0‖².
double energy_defect(const std::vector<Complex>& inputs, const Simulation& sim);

struct SpectralReport {
  double kernel_input = 0.0;     // (1 − S̄(ζ)S(z))/(1 − ζ̄z) vs C*(I−ζ̄D*)^{-1}(I−zD)^{-1}C
  double kernel_output = 0.0;    // (1 − S(z)S̄(ζ))/(1 − zζ̄) vs B(I−zD)^{-1}(I−ζ̄D*)^{-1}B*
  double difference = 0.0;       // (S(ζ)−S(z))/(ζ−z) vs B(I−ζD)^{-1}(I−zD)^{-1}C
  double difference_adjoint = 0.0;
  double diagonal_input = 0.0;   // 1 − |S(z)|² vs (1−|z|²)‖(I−zD)^{-1}C‖²
  double diagonal_output = 0.0;  // 1 − |S(z)|² vs (1−|z|²)‖(I−z̄D*)^{-1}B*‖²
  double max_residual() const;
};

/// Residuals of the kernel identities at each (z_k, ζ_k) pair. The
/// difference-quotient identities skip pairs with |ζ − z| < 1e-6.
SpectralReport verify_spectral_identities(const Matrix& u, const std::vector<Complex>& z,
                                          const std::vector<Complex>& zeta);
SpectralReport verify_spectral_identities(const UnitaryColligation& col,
                                          const std::vector<Complex>& z,
                                          const std::vector<Complex>& zeta);

/// Nearest unitary matrix (polar factor).
Matrix nearest_unitary(const Matrix& m);

}  // namespace schurcol
