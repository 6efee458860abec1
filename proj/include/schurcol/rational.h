#pragma once

#include <span>
#include <vector>

#include "schurcol/common.h"

namespace schurcol {

/// Dense polynomial, ascending powers.
using Polynomial = std::vector<Complex>;

namespace poly {
Complex eval(std::span<const Complex> p, Complex z);
Polynomial multiply(std::span<const Complex> a, std::span<const Complex> b);
/// Largest index with |p_k| above `threshold`, or -1 for the zero polynomial.
int effective_degree(std::span<const Complex> p, double threshold);
}  // namespace poly

/// c·∏(z_k − z)/(1 − z z̄_k) with |c| = 1 and every zero strictly inside the
/// disc. The constructor enforces both conditions.
class BlaschkeProduct {
 public:
  BlaschkeProduct(Complex c, std::vector<Complex> zeros);

  Complex c() const { return c_; }
  const std::vector<Complex>& zeros() const { return zeros_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

  Complex operator()(Complex z) const;

 private:
  Complex c_;
  std::vector<Complex> zeros_;
};

/// Scalar rational inner function num/den. Both coefficient vectors are
/// stored padded to length degree()+1 and scaled so that den(0) = 1.
class RationalInner {
 public:
  /// Trims, pads and normalizes; rejects den(0) = 0 and functions that fail
  /// the sampled inner test at tol::kInner.
  static RationalInner from_coefficients(Polynomial num, Polynomial den);

  /// Unimodular constant.
  static RationalInner constant(Complex value);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  int degree() const { return degree_; }

 private:
  friend RationalInner make_rational_unchecked(Polynomial, Polynomial);
  RationalInner(Polynomial num, Polynomial den, int degree)
      : num_(std::move(num)), den_(std::move(den)), degree_(degree) {}

  Polynomial num_;
  Polynomial den_;
  int degree_ = 0;
};

/// Trim/pad/normalize without the sampled inner check. Used for
/// intermediate results whose inner property holds analytically.
RationalInner make_rational_unchecked(Polynomial num, Polynomial den);

/// s_0..s_n with |s_k| < 1 for k < n and |s_n| = 1.
class SchurParameterSequence {
 public:
  explicit SchurParameterSequence(std::vector<Complex> params);

  const std::vector<Complex>& params() const { return params_; }
  int degree() const { return static_cast<int>(params_.size()) - 1; }
  Complex operator[](std::size_t k) const { return params_[k]; }

 private:
  std::vector<Complex> params_;
};

RationalInner blaschke_to_rational(const BlaschkeProduct& b);

/// Horner evaluation of num(z)/den(z); NearPole when |den(z)| < tol::kPole.
Complex eval(const RationalInner& s, Complex z);

/// s'(0) from the low-order coefficients.
Complex derivative_at_zero(const RationalInner& s);

struct SchurTransformResult {
  Complex s0;
  RationalInner omega;
};

/// s ↦ (s(0), ω) with ω(z) = (s(z) − s0) / (z (1 − s̄0 s(z))).
SchurTransformResult schur_transform(const RationalInner& s);

/// (s0, ω) ↦ (s0 + zω)/(1 + z s̄0 ω).
RationalInner inverse_schur_transform(Complex s0, const RationalInner& omega);

SchurParameterSequence schur_parameters(const RationalInner& s);

RationalInner from_schur_parameters(const SchurParameterSequence& p);

struct InnerReport {
  double disc_excess = 0.0;       // max(|s(z)| − 1, 0) over disc samples
  double circle_deviation = 0.0;  // max ||s(t)| − 1| over roots of unity
  bool pass = false;
};

/// 64 interior samples and the 64th roots of unity.
InnerReport is_inner_sampled(const RationalInner& s, double tolerance = tol::kInner);

/// Deterministic spiral of `count` points with modulus ≤ `radius`.
std::vector<Complex> disc_samples(int count, double radius);
std::vector<Complex> roots_of_unity(int count);

}  // namespace schurcol
