#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace schurcol {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;

/// Numerical margins shared by every module. All are absolute unless noted.
namespace tol {
inline constexpr double kDisc = 1e-9;      // strict interior of the disc
inline constexpr double kUnit = 1e-9;      // unimodularity
inline constexpr double kPole = 1e-12;     // denominators / solves
inline constexpr double kInner = 1e-9;     // sampled inner property
inline constexpr double kRound = 1e-8;     // round-trip comparisons
inline constexpr double kTrim = 1e-11;     // relative to max |coefficient|
inline constexpr double kUnitary = 1e-10;  // ‖U*U − I‖_max
inline constexpr double kEnergy = 1e-10;
inline constexpr double kEquiv = 1e-9;
inline constexpr double kStruct = 1e-12;   // relative to max |M|
inline constexpr double kNorm = 1e-9;
inline constexpr double kFeedback = 1e-12;
inline constexpr double kSeparation = 1e-4;
inline constexpr double kPositiveDefinite = 1e-14;
}  // namespace tol

enum class ErrorKind {
  kInvalidInput,
  kDiscViolation,
  kUnitViolation,
  kNearPole,
  kTerminal,
  kDegreeDropFailure,
  kNotUnitary,
  kNotSimple,
  kNotMinimal,
  kNotNormalized,
  kNormMismatch,
  kZeroVector,
  kDimensionMismatch,
  kFeedbackSingular,
  kZerosTooClose,
  kNotPositiveDefinite,
  kInternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by the caller's data rather than by arithmetic.
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// max_{jk} |(M*M − I)_{jk}| and the same for MM*; the larger of the two.
double unitarity_residual(const Matrix& m);

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// diag(1, V) for an n×n block V.
Matrix embed_state(const Matrix& v);

}  // namespace schurcol
