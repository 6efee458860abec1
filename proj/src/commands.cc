#include "schurcol/commands.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "schurcol/realization.h"

namespace schurcol::cli {
namespace {

using io::Json;

constexpr double kSampleRadius = 0.9;
constexpr int kEnergySteps = 1000;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::kInvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) invalid(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

bool has(const Json& j, const char* key) { return j.is_object() && j.contains(key); }

// Any failed diagnostic turns an otherwise successful result into an error.
CommandResult finish(CommandResult r) {
  if (!r.ok) return r;
  for (const Diagnostic& d : r.diagnostics) {
    if (!d.pass()) {
      r.ok = false;
      r.message = "check " + d.check + " failed";
      return r;
    }
  }
  return r;
}

double function_gap(const Matrix& u, const std::function<Complex(Complex)>& f,
                    const std::vector<Complex>& samples) {
  double worst = 0.0;
  for (Complex z : samples) worst = std::max(worst, std::abs(transfer_function(u, z) - f(z)));
  return worst;
}

void add_minimality(CommandResult& r, const Matrix& u) {
  const int n = static_cast<int>(u.rows()) - 1;
  const MinimalityReport m = minimality_report(u);
  r.diagnostics.push_back({"controllability_rank_deficit", double(n - m.rank_controllability), 0.0});
  r.diagnostics.push_back({"observability_rank_deficit", double(n - m.rank_observability), 0.0});
}

std::vector<Complex> random_disc_points(std::mt19937_64& rng, int count, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k)
    out.push_back(std::polar(radius * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng)));
  return out;
}

}  // namespace

int CommandResult::exit_code() const {
  if (ok) return 0;
  if (error && is_validation_error(*error)) return 2;
  return 3;
}

CommandResult cmd_realize(const Json& input, Route route, const GlobalOptions& options) {
  return guarded([&] {
    CommandResult r;
    const auto samples = disc_samples(options.samples, kSampleRadius);
    Matrix u;
    std::function<Complex(Complex)> source;
    if (has(input, "zeros")) {
      const BlaschkeProduct b = io::blaschke_from_json(input);
      const ModelRealization model = model_colligation(b);
      const UnitaryColligation closed =
          colligation_from_schur_parameters(schur_parameters(blaschke_to_rational(b)));
      const auto eq = find_equivalence(model.colligation, closed);
      r.diagnostics.push_back({"route_equivalence",
                               eq ? eq->residual : std::numeric_limits<double>::infinity(),
                               tol::kEquiv});
      u = route == Route::kModel ? model.colligation.matrix() : closed.matrix();
      source = [b](Complex z) { return b(z); };
    } else if (has(input, "params")) {
      if (route == Route::kModel) invalid("the model route needs Blaschke input with \"zeros\"");
      const SchurParameterSequence p = io::params_from_json(input);
      u = colligation_from_schur_parameters(p).matrix();
      const RationalInner s = from_schur_parameters(p);
      source = [s](Complex z) { return eval(s, z); };
    } else {
      invalid("realize expects {\"zeros\": ...} or {\"params\": ...}");
    }
    r.diagnostics.push_back({"unitarity", unitarity_residual(u), tol::kUnitary});
    add_minimality(r, u);
    r.diagnostics.push_back({"characteristic_function", function_gap(u, source, samples),
                             options.tolerance});
    r.payload = io::to_json(UnitaryColligation(u));
    return finish(std::move(r));
  });
}

CommandResult cmd_schur(const Json& input, bool renormalize_each_step,
                        const GlobalOptions& options) {
  return guarded([&] {
    CommandResult r;
    const UnitaryColligation col = io::colligation_from_json(input);
    const SchurStateTrace trace =
        schur_algorithm_state_space(col, SchurOptions{renormalize_each_step});
    r.payload = io::to_json(trace);

    double unitary = 0.0;
    double structure = 0.0;
    for (const Matrix& m : trace.matrices) {
      unitary = std::max(unitary, unitarity_residual(m));
      structure = std::max(structure, structural_residual(m, Orientation::kLower) /
                                          std::max(1.0, max_abs(m)));
    }
    r.diagnostics.push_back({"intermediate_unitarity", unitary, tol::kUnitary});
    r.diagnostics.push_back({"intermediate_structure", structure, tol::kStruct});

    if (!trace.complete()) {
      const TerminationDiagnostic& stop = *trace.early_termination;
      r.diagnostics.push_back({"terminal_at_step_" + std::to_string(stop.step),
                               1.0 - stop.margin, 1.0 - tol::kDisc});
      r.ok = false;
      r.error = ErrorKind::kTerminal;
      r.message = stop.message;
      return r;
    }
    const Matrix rebuilt = closed_form_matrix(trace.parameters);
    const auto samples = disc_samples(options.samples, kSampleRadius);
    r.diagnostics.push_back(
        {"reconstruction",
         function_gap(rebuilt, [&](Complex z) { return characteristic_function(col, z); }, samples),
         options.tolerance});
    return finish(std::move(r));
  });
}

CommandResult cmd_hessenberg(const Json& input, Orientation orientation,
                             const GlobalOptions& options) {
  return guarded([&] {
    CommandResult r;
    const Matrix m = io::colligation_matrix_from_json(input);
    const HessenbergCertificate cert = orientation == Orientation::kLower
                                           ? reduce_to_special_lower_hessenberg(m)
                                           : reduce_to_special_upper_hessenberg(m);
    const double scale = std::max(1.0, max_abs(m));
    r.diagnostics.push_back(
        {"structure", structural_residual(cert.h, orientation) / scale, tol::kStruct});
    double band_sign = 0.0;
    for (double x : cert.band) band_sign = std::max(band_sign, -x);
    r.diagnostics.push_back({"band_nonnegative", band_sign / scale, tol::kStruct});
    r.diagnostics.push_back({"gauge_unitarity", unitarity_residual(cert.v), tol::kUnitary});
    const Matrix w = embed_state(cert.v);
    r.diagnostics.push_back(
        {"gauge_consistency", max_abs(cert.h - w.adjoint() * m * w), options.tolerance});
    r.payload = io::to_json(cert);
    return finish(std::move(r));
  });
}

CommandResult cmd_couple(const Json& input, const GlobalOptions& options) {
  return guarded([&] {
    CommandResult r;
    const PartitionedColligation outer = io::partitioned_from_json(field(input, "outer"));
    const UnitaryColligation inner = io::colligation_from_json(field(input, "inner"));
    const UnitaryColligation coupled = redheffer_product(outer, inner);
    r.diagnostics.push_back({"unitarity", unitarity_residual(coupled.matrix()), tol::kUnitary});
    double worst = 0.0;
    for (Complex z : disc_samples(options.samples, kSampleRadius)) {
      const Matrix s = characteristic_matrix(outer, z);
      const Complex expected = redheffer_transform(s(0, 0), s(0, 1), s(1, 0), s(1, 1),
                                                   characteristic_function(inner, z));
      worst = std::max(worst, std::abs(characteristic_function(coupled, z) - expected));
    }
    r.diagnostics.push_back({"redheffer_transform", worst, options.tolerance});
    r.payload = io::to_json(coupled);
    return finish(std::move(r));
  });
}

CommandResult cmd_eval(const Json& input, std::optional<Complex> z, const GlobalOptions&) {
  return guarded([&] {
    CommandResult r;
    if (!z) {
      if (!has(input, "z")) invalid("no evaluation point: pass --z or a \"z\" field");
      z = io::complex_from_json(input.at("z"));
    }
    Complex value;
    if (input.is_array() || has(input, "matrix")) {
      value = characteristic_function(io::colligation_from_json(input), *z);
    } else if (has(input, "num")) {
      value = eval(io::rational_from_json(input), *z);
    } else if (has(input, "zeros")) {
      value = io::blaschke_from_json(input)(*z);
    } else if (has(input, "params")) {
      value = eval(from_schur_parameters(io::params_from_json(input)), *z);
    } else {
      invalid("eval expects a colligation, rational, Blaschke or parameter document");
    }
    r.payload = io::to_json(value);
    return r;
  });
}

CommandResult cmd_verify(const Json& input, const GlobalOptions& options) {
  return guarded([&] {
    CommandResult r;
    const Matrix u = io::colligation_matrix_from_json(input);
    r.diagnostics.push_back({"unitarity", unitarity_residual(u), tol::kUnitary});
    add_minimality(r, u);
    const int n = static_cast<int>(u.rows()) - 1;

    // Boundary values sit on the circle, where I − zD is singular for
    // non-minimal input; report that as an infinite residual.
    double disc_excess = 0.0;
    double circle = 0.0;
    try {
      for (Complex z : disc_samples(options.samples, 0.99))
        disc_excess = std::max(disc_excess, std::abs(transfer_function(u, z)) - 1.0);
      for (Complex t : roots_of_unity(options.samples))
        circle = std::max(circle, std::abs(std::abs(transfer_function(u, t)) - 1.0));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNearPole) throw;
      circle = std::numeric_limits<double>::infinity();
    }
    r.diagnostics.push_back({"inner_disc_excess", disc_excess, tol::kInner});
    r.diagnostics.push_back({"inner_circle_deviation", circle, tol::kInner});

    std::mt19937_64 rng(options.seed);
    const auto z = random_disc_points(rng, options.samples, kSampleRadius);
    const auto zeta = random_disc_points(rng, options.samples, kSampleRadius);
    const SpectralReport spectral = verify_spectral_identities(u, z, zeta);
    r.diagnostics.push_back({"kernel_input", spectral.kernel_input, options.tolerance});
    r.diagnostics.push_back({"kernel_output", spectral.kernel_output, options.tolerance});
    r.diagnostics.push_back({"difference_quotient", spectral.difference, options.tolerance});
    r.diagnostics.push_back(
        {"difference_quotient_adjoint", spectral.difference_adjoint, options.tolerance});
    r.diagnostics.push_back({"diagonal_input", spectral.diagonal_input, options.tolerance});
    r.diagnostics.push_back({"diagonal_output", spectral.diagonal_output, options.tolerance});

    std::normal_distribution<double> normal;
    std::vector<Complex> inputs(kEnergySteps);
    for (Complex& x : inputs) x = {normal(rng), normal(rng)};
    Vector h0(n);
    for (int k = 0; k < n; ++k) h0(k) = {normal(rng), normal(rng)};
    const Simulation sim = simulate_time_domain(u, inputs, h0);
    r.diagnostics.push_back({"energy_balance", std::abs(energy_defect(inputs, sim)), tol::kEnergy});

    Json summary = Json::object();
    summary["n"] = n;
    summary["checks"] = static_cast<int>(r.diagnostics.size());
    r.payload = std::move(summary);
    return finish(std::move(r));
  });
}

CommandResult cmd_params(const Json& input, const GlobalOptions& options) {
  return guarded([&] {
    CommandResult r;
    const auto samples = disc_samples(options.samples, kSampleRadius);
    if (has(input, "params")) {
      const SchurParameterSequence p = io::params_from_json(input);
      const RationalInner s = from_schur_parameters(p);
      const SchurParameterSequence back = schur_parameters(s);
      double gap = back.degree() == p.degree() ? 0.0 : std::numeric_limits<double>::infinity();
      for (int k = 0; k <= std::min(p.degree(), back.degree()); ++k)
        gap = std::max(gap, std::abs(p[k] - back[k]));
      r.diagnostics.push_back({"parameter_round_trip", gap, options.tolerance});
      r.payload = io::to_json(s);
    } else {
      const RationalInner s = has(input, "zeros") ? blaschke_to_rational(io::blaschke_from_json(input))
                                                  : io::rational_from_json(input);
      const SchurParameterSequence p = schur_parameters(s);
      const RationalInner rebuilt = from_schur_parameters(p);
      double gap = 0.0;
      for (Complex z : samples) gap = std::max(gap, std::abs(eval(rebuilt, z) - eval(s, z)));
      r.diagnostics.push_back({"function_round_trip", gap, options.tolerance});
      r.payload = io::to_json(p);
    }
    return finish(std::move(r));
  });
}

std::string diagnostics_lines(const CommandResult& result) {
  std::string out;
  for (const Diagnostic& d : result.diagnostics) {
    Json line = Json::object();
    line["check"] = d.check;
    line["residual"] = d.residual;
    line["tolerance"] = d.tolerance;
    line["pass"] = d.pass();
    out += io::dump(line);
  }
  Json status = Json::object();
  status["status"] = result.ok ? "ok" : "error";
  if (!result.ok) {
    if (result.error) status["kind"] = std::string(to_string(*result.error));
    status["message"] = result.message;
  }
  status["exit_code"] = result.exit_code();
  out += io::dump(status);
  return out;
}

}  // namespace schurcol::cli
