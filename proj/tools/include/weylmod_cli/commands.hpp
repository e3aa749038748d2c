#pragma once

// The subcommands of the weylmod tool, callable without the argument parser.
// Every command returns a report {command, input, outcome, payload}; outcome
// is "pass" or "mismatch". Bad input throws std::invalid_argument.

#include <optional>
#include <string>
#include <vector>

#include "weylmod_cli/serialize.hpp"

namespace weylmod::cli {

enum class Exit { Pass = 0, Mismatch = 1, Usage = 2 };

struct Report {
  json doc;
  /// Set by cmd_character with --format csv; printed instead of the JSON.
  std::optional<std::string> csv;

  bool passed() const { return doc.at("outcome") == "pass"; }
  Exit exit_code() const { return passed() ? Exit::Pass : Exit::Mismatch; }
};

struct Options {
  /// Rank r of sl_{r+1}; inferred from the weight when absent.
  std::optional<int> rank;
  unsigned threads = 1;
  long max_grade = 64;
};

/// Parse "m1,...,mr" and check it against opts.rank.
DominantWeight read_weight(const std::string& text, const Options& opts);

Report cmd_dim(const std::string& weight, const Options& opts);
/// format is "json" or "csv".
Report cmd_character(const std::string& weight, const std::string& format, const Options& opts);
Report cmd_kostka(const std::string& weight, const Options& opts);
/// spec as accepted by parse_fusion_spec; alt_points as "p1,p2,...".
Report cmd_fusion(const std::string& spec, const std::optional<std::string>& alt_points, const Options& opts);
/// Fusion is checked only when the tensor product has dimension at most
/// fusion_max_dim.
Report cmd_verify_all(int max_rank, int max_level, const Options& opts, std::size_t fusion_max_dim = 64);

/// All dominant weights of rank r with 1 <= level <= max_level.
std::vector<DominantWeight> sweep_weights(int rank, int max_level);

std::vector<Coord> parse_points(const std::string& text);

}  // namespace weylmod::cli
