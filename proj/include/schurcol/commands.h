#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schurcol/json_io.h"

namespace schurcol::cli {

struct Diagnostic {
  std::string check;
  double residual = 0.0;
  double tolerance = 0.0;

  bool pass() const { return residual <= tolerance; }
};

struct CommandResult {
  bool ok = true;
  io::Json payload;  // null when there is nothing to emit
  std::vector<Diagnostic> diagnostics;
  std::optional<ErrorKind> error;
  std::string message;

  /// 0 ok, 2 validation failure, 3 numerical failure.
  int exit_code() const;
};

struct GlobalOptions {
  double tolerance = tol::kRound;  // diagnostics only
  int samples = 32;
  std::uint64_t seed = 1;
};

enum class Route { kModel, kClosedForm };

/// Blaschke input ({"zeros"}) or parameter input ({"params"}). With zeros
/// input both routes are built and their equivalence residual is reported.
CommandResult cmd_realize(const io::Json& input, Route route, const GlobalOptions& options);

CommandResult cmd_schur(const io::Json& input, bool renormalize_each_step,
                        const GlobalOptions& options);

CommandResult cmd_hessenberg(const io::Json& input, Orientation orientation,
                             const GlobalOptions& options);

/// {"outer": partitioned, "inner": colligation}.
CommandResult cmd_couple(const io::Json& input, const GlobalOptions& options);

/// Colligation, rational, Blaschke or parameter input. The evaluation point
/// comes from `z` or, failing that, from the "z" field of the input.
CommandResult cmd_eval(const io::Json& input, std::optional<Complex> z,
                       const GlobalOptions& options);

/// Unitarity, minimality, sampled inner property and the kernel identities.
CommandResult cmd_verify(const io::Json& input, const GlobalOptions& options);

/// Rational or Blaschke input yields parameters; parameter input yields the
/// rational function.
CommandResult cmd_params(const io::Json& input, const GlobalOptions& options);

/// Catches library errors and turns them into an error result.
template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    CommandResult r;
    r.ok = false;
    r.error = e.kind();
    r.message = e.what();
    return r;
  }
}

/// One JSON line per diagnostic, then a status line.
std::string diagnostics_lines(const CommandResult& result);

}  // namespace schurcol::cli
