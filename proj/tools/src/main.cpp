#include <chrono>
#include <exception>
#include <iostream>
#include <stdexcept>

#ifdef WEYLMOD_CLI11_SINGLE_HEADER
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "weylmod_cli/commands.hpp"

using namespace weylmod::cli;

int main(int argc, char** argv) {
  CLI::App app{"Weyl modules for sl_{r+1}[t]: basis counts, fermionic characters, Kostka and fusion checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  int rank = 0;
  bool timing = false;
  app.add_option("--rank", rank, "rank r of sl_{r+1} (default: inferred from the weight)")->check(CLI::Range(1, 64));
  app.add_option("--threads", opts.threads, "enumeration threads (1 keeps output order deterministic)")
      ->capture_default_str()
      ->check(CLI::Range(1u, 256u));
  app.add_option("--max-grade", opts.max_grade, "safety bound on the grade of the fusion closure")->capture_default_str();
  app.add_flag("--timing", timing, "add wall time in seconds to the report");

  std::string weight, format = "json", spec, points;
  int max_rank = 2, max_level = 2;
  std::size_t fusion_max_dim = 64;

  auto* dim = app.add_subcommand("dim", "enumerated and closed-form size of the basis");
  dim->add_option("--weight,weight", weight, "dominant weight m1,...,mr")->required();

  auto* character = app.add_subcommand("character", "fermionic graded character, cross-checked against the basis");
  character->add_option("--weight,weight", weight, "dominant weight m1,...,mr")->required();
  character->add_option("--format", format, "json or csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));

  auto* kostka = app.add_subcommand("kostka", "decomposition into irreducibles against Kostka polynomials");
  kostka->add_option("--weight,weight", weight, "dominant weight m1,...,mr")->required();

  auto* fusion = app.add_subcommand("fusion", "fusion product of fundamental evaluation modules");
  fusion->add_option("spec", spec, "e.g. \"r=2; factors=w1@0,w1@1,w2@5\"")->required();
  auto* alt = fusion->add_option("--points,--alt-points", points, "second point set p1,...,pk for the independence check");

  auto* verify = app.add_subcommand("verify-all", "every check over all weights up to a rank and level");
  verify->add_option("--max-rank", max_rank, "largest rank")->capture_default_str();
  verify->add_option("--max-level", max_level, "largest m1+...+mr")->capture_default_str();
  verify->add_option("--fusion-max-dim", fusion_max_dim, "skip fusion checks above this tensor dimension")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(Exit::Usage);
  }
  if (rank > 0) opts.rank = rank;

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (*dim) {
      report = cmd_dim(weight, opts);
    } else if (*character) {
      report = cmd_character(weight, format, opts);
    } else if (*kostka) {
      report = cmd_kostka(weight, opts);
    } else if (*fusion) {
      report = cmd_fusion(spec, *alt ? std::optional<std::string>(points) : std::nullopt, opts);
    } else {
      std::cerr << "sweeping rank <= " << max_rank << ", level <= " << max_level << "\n";
      report = cmd_verify_all(max_rank, max_level, opts, fusion_max_dim);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(Exit::Usage);
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return static_cast<int>(Exit::Mismatch);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (timing) report.doc["wall_time_s"] = seconds;

  if (report.csv)
    std::cout << *report.csv;
  else
    std::cout << report.doc.dump(2) << "\n";
  std::cerr << report.doc["command"].get<std::string>() << ": " << report.doc["outcome"].get<std::string>() << " ("
            << seconds << " s)\n";
  return static_cast<int>(report.exit_code());
}
