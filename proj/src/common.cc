#include "schurcol/common.h"

#include <limits>

namespace schurcol {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kDiscViolation: return "DiscViolation";
    case ErrorKind::kUnitViolation: return "UnitViolation";
    case ErrorKind::kNearPole: return "NearPole";
    case ErrorKind::kTerminal: return "Terminal";
    case ErrorKind::kDegreeDropFailure: return "DegreeDropFailure";
    case ErrorKind::kNotUnitary: return "NotUnitary";
    case ErrorKind::kNotSimple: return "NotSimple";
    case ErrorKind::kNotMinimal: return "NotMinimal";
    case ErrorKind::kNotNormalized: return "NotNormalized";
    case ErrorKind::kNormMismatch: return "NormMismatch";
    case ErrorKind::kZeroVector: return "ZeroVector";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kFeedbackSingular: return "FeedbackSingular";
    case ErrorKind::kZerosTooClose: return "ZerosTooClose";
    case ErrorKind::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::kInternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

bool is_validation_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
    case ErrorKind::kDiscViolation:
    case ErrorKind::kUnitViolation:
    case ErrorKind::kNotUnitary:
    case ErrorKind::kNormMismatch:
    case ErrorKind::kZeroVector:
    case ErrorKind::kDimensionMismatch:
    case ErrorKind::kZerosTooClose:
    case ErrorKind::kNotSimple:
      return true;
    default:
      return false;
  }
}

double unitarity_residual(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  const auto id = Matrix::Identity(m.rows(), m.cols());
  return std::max(max_abs(m.adjoint() * m - id), max_abs(m * m.adjoint() - id));
}

Matrix embed_state(const Matrix& v) {
  Matrix out = Matrix::Zero(v.rows() + 1, v.cols() + 1);
  out(0, 0) = 1.0;
  out.bottomRightCorner(v.rows(), v.cols()) = v;
  return out;
}

}  // namespace schurcol
