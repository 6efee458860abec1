#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "schurcol/commands.h"

namespace {

using schurcol::cli::CommandResult;
using schurcol::io::Json;

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json read_document(const std::string& path) {
  if (path.empty() || path == "-") return schurcol::io::parse(read_all(std::cin));
  std::ifstream file(path);
  if (!file) throw schurcol::Error(schurcol::ErrorKind::kInvalidInput, "cannot open " + path);
  return schurcol::io::parse(read_all(file));
}

int emit(const CommandResult& result, const std::string& output) {
  if (!result.payload.is_null()) {
    const std::string text = schurcol::io::dump(result.payload);
    if (output.empty() || output == "-") {
      std::cout << text;
    } else {
      std::ofstream(output) << text;
    }
  }
  std::cerr << schurcol::cli::diagnostics_lines(result);
  return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary colligations and the state-space Schur algorithm"};
  app.require_subcommand(1);

  schurcol::cli::GlobalOptions options;
  std::string input_path;
  std::string output_path;
  app.add_option("--tolerance", options.tolerance, "Tolerance for reported round-trip checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--samples", options.samples, "Disc and circle sample count")
      ->check(CLI::Range(1, 100000));
  app.add_option("--seed", options.seed, "Seed for randomized checks");
  app.add_option("--input", input_path, "Input JSON path (default stdin)");
  app.add_option("--output", output_path, "Output JSON path (default stdout)");

  std::string route = "closed-form";
  auto* realize = app.add_subcommand("realize", "Blaschke product or parameters to a colligation");
  realize->add_option("--route", route)->check(CLI::IsMember({"model", "closed-form"}));

  bool renormalize = false;
  auto* schur = app.add_subcommand("schur", "State-space Schur algorithm");
  schur->add_flag("--renormalize-each-step", renormalize, "Re-apply B-row normalization before every step");

  std::string orientation = "lower";
  auto* hessenberg = app.add_subcommand("hessenberg", "Special Hessenberg form by state gauge");
  hessenberg->add_option("--orientation", orientation)->check(CLI::IsMember({"lower", "upper"}));

  std::string outer_path;
  std::string inner_path;
  auto* couple = app.add_subcommand("couple", "Redheffer product of a two-channel and a scalar colligation");
  couple->add_option("--outer", outer_path, "Partitioned colligation JSON");
  couple->add_option("--inner", inner_path, "Colligation JSON");

  std::string z_text;
  auto* eval = app.add_subcommand("eval", "Evaluate a colligation or rational function");
  eval->add_option("--z", z_text, "Point as a number or [re, im]");

  auto* verify = app.add_subcommand("verify", "Unitarity, minimality, inner and kernel checks");
  auto* params = app.add_subcommand("params", "Rational function to parameters and back");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  namespace cli = schurcol::cli;
  const CommandResult result = cli::guarded([&]() -> CommandResult {
    if (*couple && (!outer_path.empty() || !inner_path.empty())) {
      Json doc = Json::object();
      doc["outer"] = read_document(outer_path);
      doc["inner"] = read_document(inner_path);
      return cli::cmd_couple(doc, options);
    }
    const Json doc = read_document(input_path);
    if (*realize)
      return cli::cmd_realize(doc, route == "model" ? cli::Route::kModel : cli::Route::kClosedForm,
                              options);
    if (*schur) return cli::cmd_schur(doc, renormalize, options);
    if (*hessenberg)
      return cli::cmd_hessenberg(doc,
                                 orientation == "upper" ? schurcol::Orientation::kUpper
                                                        : schurcol::Orientation::kLower,
                                 options);
    if (*couple) return cli::cmd_couple(doc, options);
    if (*eval) {
      std::optional<schurcol::Complex> z;
      if (!z_text.empty()) z = schurcol::io::complex_from_json(schurcol::io::parse(z_text));
      return cli::cmd_eval(doc, z, options);
    }
    if (*verify) return cli::cmd_verify(doc, options);
    if (*params) return cli::cmd_params(doc, options);
    throw schurcol::Error(schurcol::ErrorKind::kInvalidInput, "unknown subcommand");
  });
  return emit(result, output_path);
}
