#include "schurcol/rational.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace schurcol {
namespace {

double max_coefficient(std::span<const Complex> p) {
  double m = 0.0;
  for (const Complex& c : p) m = std::max(m, std::abs(c));
  return m;
}

void check_disc(Complex value, const char* what) {
  if (std::abs(value) >= 1.0 - tol::kDisc) {
    std::ostringstream msg;
    msg << what << " has modulus " << std::abs(value)
        << ", needs < 1 - " << tol::kDisc;
    throw Error(ErrorKind::kDiscViolation, msg.str());
  }
}

}  // namespace

namespace poly {

Complex eval(std::span<const Complex> p, Complex z) {
  Complex acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial multiply(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

int effective_degree(std::span<const Complex> p, double threshold) {
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
    if (std::abs(p[k]) > threshold) return k;
  return -1;
}

}  // namespace poly

BlaschkeProduct::BlaschkeProduct(Complex c, std::vector<Complex> zeros)
    : c_(c), zeros_(std::move(zeros)) {
  if (std::abs(std::abs(c_) - 1.0) > tol::kUnit)
    throw Error(ErrorKind::kUnitViolation, "Blaschke constant is not unimodular");
  for (const Complex& z : zeros_) check_disc(z, "Blaschke zero");
}

Complex BlaschkeProduct::operator()(Complex z) const {
  Complex value = c_;
  for (const Complex& a : zeros_) value *= (a - z) / (1.0 - z * std::conj(a));
  return value;
}

RationalInner make_rational_unchecked(Polynomial num, Polynomial den) {
  if (num.empty()) num.push_back(0.0);
  if (den.empty()) den.push_back(0.0);
  const double scale = std::max(max_coefficient(num), max_coefficient(den));
  if (std::abs(den[0]) <= tol::kTrim * scale || den[0] == Complex(0.0))
    throw Error(ErrorKind::kInvalidInput, "denominator vanishes at 0");
  const double threshold = tol::kTrim * scale;
  const int degree = std::max({poly::effective_degree(num, threshold),
                               poly::effective_degree(den, threshold), 0});
  num.resize(degree + 1, Complex(0.0));
  den.resize(degree + 1, Complex(0.0));
  const Complex lead = den[0];
  for (auto& c : num) c /= lead;
  for (auto& c : den) c /= lead;
  return RationalInner(std::move(num), std::move(den), degree);
}

RationalInner RationalInner::from_coefficients(Polynomial num, Polynomial den) {
  RationalInner s = make_rational_unchecked(std::move(num), std::move(den));
  const InnerReport report = is_inner_sampled(s);
  if (!report.pass) {
    std::ostringstream msg;
    msg << "function is not inner (disc excess " << report.disc_excess
        << ", circle deviation " << report.circle_deviation << ")";
    throw Error(ErrorKind::kInvalidInput, msg.str());
  }
  return s;
}

RationalInner RationalInner::constant(Complex value) {
  if (std::abs(std::abs(value) - 1.0) > tol::kUnit)
    throw Error(ErrorKind::kUnitViolation, "constant inner function must be unimodular");
  return RationalInner({value}, {1.0}, 0);
}

SchurParameterSequence::SchurParameterSequence(std::vector<Complex> params)
    : params_(std::move(params)) {
  if (params_.empty())
    throw Error(ErrorKind::kInvalidInput, "empty Schur parameter sequence");
  for (std::size_t k = 0; k + 1 < params_.size(); ++k)
    check_disc(params_[k], "Schur parameter");
  if (std::abs(std::abs(params_.back()) - 1.0) > tol::kUnit)
    throw Error(ErrorKind::kUnitViolation, "terminal Schur parameter is not unimodular");
}

RationalInner blaschke_to_rational(const BlaschkeProduct& b) {
  Polynomial num{b.c()};
  Polynomial den{1.0};
  for (const Complex& a : b.zeros()) {
    const Polynomial factor_num{a, -1.0};
    const Polynomial factor_den{1.0, -std::conj(a)};
    num = poly::multiply(num, factor_num);
    den = poly::multiply(den, factor_den);
  }
  // The numerator always has full degree, so only the denominator can need
  // padding (zeros at the origin).
  den.resize(num.size(), Complex(0.0));
  return RationalInner::from_coefficients(std::move(num), std::move(den));
}

Complex eval(const RationalInner& s, Complex z) {
  const Complex q = poly::eval(s.den(), z);
  if (std::abs(q) < tol::kPole)
    throw Error(ErrorKind::kNearPole, "denominator vanishes at evaluation point");
  return poly::eval(s.num(), z) / q;
}

Complex derivative_at_zero(const RationalInner& s) {
  const Complex p0 = s.num()[0];
  const Complex q0 = s.den()[0];
  const Complex p1 = s.degree() >= 1 ? s.num()[1] : Complex(0.0);
  const Complex q1 = s.degree() >= 1 ? s.den()[1] : Complex(0.0);
  return (p1 * q0 - p0 * q1) / (q0 * q0);
}

SchurTransformResult schur_transform(const RationalInner& s) {
  const int n = s.degree();
  const Complex s0 = s.num()[0] / s.den()[0];
  if (n == 0 || std::abs(s0) >= 1.0 - tol::kDisc) {
    std::ostringstream msg;
    msg << "|s(0)| = " << std::abs(s0) << " at degree " << n
        << " (margin " << 1.0 - std::abs(s0) << ")";
    throw Error(ErrorKind::kTerminal, msg.str());
  }
  const Polynomial& p = s.num();
  const Polynomial& q = s.den();
  const double scale = std::max(max_coefficient(p), max_coefficient(q));
  const double threshold = tol::kTrim * scale;
  // Both cancellations are analytic, but the residue grows by roughly
  // 1/(1 − |s_k|²) per preceding step; τ_trim alone is too tight past degree 7.
  const double cancellation = tol::kRound * scale;

  // num_ω = (p − s0 q)/z, den_ω = q − s̄0 p with its top coefficient dropped.
  Polynomial shifted(n + 1);
  Polynomial den_omega(n + 1);
  for (int k = 0; k <= n; ++k) {
    shifted[k] = p[k] - s0 * q[k];
    den_omega[k] = q[k] - std::conj(s0) * p[k];
  }
  if (std::abs(shifted[0]) > cancellation)
    throw Error(ErrorKind::kDegreeDropFailure, "constant term of s - s0 does not vanish");
  if (std::abs(den_omega[n]) > cancellation)
    throw Error(ErrorKind::kDegreeDropFailure, "leading denominator coefficient does not cancel");
  Polynomial num_omega(shifted.begin() + 1, shifted.end());
  den_omega.pop_back();
  if (std::max(std::abs(num_omega.back()), std::abs(den_omega.back())) <= threshold)
    throw Error(ErrorKind::kDegreeDropFailure, "degree dropped by more than one");

  RationalInner omega = make_rational_unchecked(std::move(num_omega), std::move(den_omega));
  if (omega.degree() != n - 1)
    throw Error(ErrorKind::kDegreeDropFailure, "Schur transform did not reduce degree by one");
  return {s0, std::move(omega)};
}

RationalInner inverse_schur_transform(Complex s0, const RationalInner& omega) {
  check_disc(s0, "s0");
  const Polynomial& a = omega.num();
  const Polynomial& b = omega.den();
  const std::size_t m = a.size();
  Polynomial num(m + 1, Complex(0.0));
  Polynomial den(m + 1, Complex(0.0));
  for (std::size_t k = 0; k < m; ++k) {
    num[k] += s0 * b[k];
    num[k + 1] += a[k];
    den[k] += b[k];
    den[k + 1] += std::conj(s0) * a[k];
  }
  return make_rational_unchecked(std::move(num), std::move(den));
}

SchurParameterSequence schur_parameters(const RationalInner& s) {
  std::vector<Complex> params;
  params.reserve(s.degree() + 1);
  RationalInner current = s;
  while (current.degree() > 0) {
    SchurTransformResult step = schur_transform(current);
    params.push_back(step.s0);
    current = std::move(step.omega);
  }
  params.push_back(current.num()[0] / current.den()[0]);
  return SchurParameterSequence(std::move(params));
}

RationalInner from_schur_parameters(const SchurParameterSequence& p) {
  const auto& s = p.params();
  RationalInner current = RationalInner::constant(s.back());
  for (int k = p.degree() - 1; k >= 0; --k) current = inverse_schur_transform(s[k], current);
  return current;
}

std::vector<Complex> disc_samples(int count, double radius) {
  std::vector<Complex> out;
  out.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k) {
    const double r = radius * std::sqrt((k + 0.5) / count);
    out.push_back(std::polar(r, golden * k));
  }
  return out;
}

std::vector<Complex> roots_of_unity(int count) {
  std::vector<Complex> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k)
    out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / count));
  return out;
}

InnerReport is_inner_sampled(const RationalInner& s, double tolerance) {
  InnerReport report;
  for (const Complex& z : disc_samples(64, 0.99))
    report.disc_excess = std::max(report.disc_excess, std::abs(eval(s, z)) - 1.0);
  for (const Complex& t : roots_of_unity(64))
    report.circle_deviation =
        std::max(report.circle_deviation, std::abs(std::abs(eval(s, t)) - 1.0));
  report.pass = report.disc_excess <= tolerance && report.circle_deviation <= tolerance;
  return report;
}

}  // namespace schurcol
