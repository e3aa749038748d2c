#include "weylmod_cli/commands.hpp"

#include <charconv>
#include <stdexcept>

#include "weylmod/fusion.hpp"

namespace weylmod::cli {
namespace {

json weight_input(const DominantWeight& lambda) {
  return {{"rank", lambda.rank()}, {"weight", to_json(lambda.weight())}};
}

json dimensions(const DominantWeight& lambda, unsigned threads) {
  const std::uint64_t enumerated = BasisEnumerator(lambda).count(threads);
  const BigInt closed = count_basis(lambda);
  return {{"enumerated", enumerated}, {"closed_form", to_json(closed)}, {"equal", BigInt(std::to_string(enumerated)) == closed}};
}

Report make_report(const std::string& command, json input, bool pass, json payload) {
  return {json{{"command", command}, {"input", std::move(input)}, {"outcome", pass ? "pass" : "mismatch"},
               {"payload", std::move(payload)}},
          std::nullopt};
}

}  // namespace

DominantWeight read_weight(const std::string& text, const Options& opts) {
  const DominantWeight lambda = parse_dominant_weight(text);
  if (opts.rank && *opts.rank != lambda.rank())
    throw std::invalid_argument("weight " + text + " has " + std::to_string(lambda.rank()) + " coordinates, rank is " +
                                std::to_string(*opts.rank));
  return lambda;
}

std::vector<Coord> parse_points(const std::string& text) {
  std::vector<Coord> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = std::string_view(text).substr(pos, comma - pos);
    Coord v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw std::invalid_argument("bad point list: " + text);
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

Report cmd_dim(const std::string& weight, const Options& opts) {
  const DominantWeight lambda = read_weight(weight, opts);
  json payload = dimensions(lambda, opts.threads);
  const bool pass = payload["equal"].get<bool>();
  return make_report("dim", weight_input(lambda), pass, std::move(payload));
}

Report cmd_character(const std::string& weight, const std::string& format, const Options& opts) {
  if (format != "json" && format != "csv") throw std::invalid_argument("format must be json or csv");
  const DominantWeight lambda = read_weight(weight, opts);
  const GradedCharacter fermionic = fermionic_character(lambda);
  const bool basis_equal = fermionic == character_from_basis(lambda, opts.threads);
  json payload = dimensions(lambda, opts.threads);
  payload["basis_character_equal"] = basis_equal;
  payload["mass"] = to_json(fermionic.mass());
  payload["character"] = to_json(fermionic);
  const bool pass = basis_equal && payload["equal"].get<bool>();
  Report report = make_report("character", weight_input(lambda), pass, std::move(payload));
  if (format == "csv") report.csv = to_csv(fermionic);
  return report;
}

Report cmd_kostka(const std::string& weight, const Options& opts) {
  const DominantWeight lambda = read_weight(weight, opts);
  const KostkaReport kr = verify_kostka(lambda);
  json payload = dimensions(lambda, opts.threads);
  payload["decomposition"] = to_json(kr.decomposition);
  payload["highest_coefficient_is_one"] = kr.highest_coefficient_is_one;
  payload["selected_reading"] = selected_kostka_reading().name;
  payload["matching_readings"] = kr.matching_readings;
  payload["mismatches"] = kr.mismatches;
  const bool pass = kr.selected_matches() && payload["equal"].get<bool>();
  return make_report("kostka", weight_input(lambda), pass, std::move(payload));
}

Report cmd_fusion(const std::string& spec_text, const std::optional<std::string>& alt_points, const Options& opts) {
  const FusionSpec spec = parse_fusion_spec(spec_text);
  if (opts.rank && *opts.rank != spec.rank) throw std::invalid_argument("--rank disagrees with the fusion spec");
  const auto factors = make_factors(spec.rank, spec.indices, spec.points);
  const DominantWeight lambda = spec.highest_weight();

  json input = {{"spec", to_string(spec)}, {"rank", spec.rank}, {"weight", to_json(lambda.weight())},
                {"points", spec.points}};
  const FusionResult fusion = fusion_product(factors, opts.max_grade);
  const GradedCharacter fermionic = fermionic_character(lambda);
  const bool equal = fusion.character == fermionic;

  json payload = dimensions(lambda, opts.threads);
  payload["ambient_dim"] = fusion.ambient_dim;
  payload["cumulative_dims"] = fusion.cumulative_dims;
  payload["top_grade"] = fusion.top_grade;
  payload["character"] = to_json(fusion.character);
  payload["fermionic_equal"] = equal;
  bool pass = equal && payload["equal"].get<bool>();

  if (alt_points) {
    const auto alt = parse_points(*alt_points);
    input["alt_points"] = alt;
    const PointIndependenceReport pi = point_independence(factors, alt, opts.max_grade);
    payload["point_independence"] = {{"equal", pi.equal}, {"alt_character", to_json(pi.second)}};
    pass = pass && pi.equal;
  }
  return make_report("fusion", std::move(input), pass, std::move(payload));
}

std::vector<DominantWeight> sweep_weights(int rank, int max_level) {
  std::vector<DominantWeight> out;
  WeightVector m(rank);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i > rank) {
      if (left < max_level) out.emplace_back(m);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      m[i] = v;
      self(self, i + 1, left - v);
    }
    m[i] = 0;
  };
  if (rank >= 1 && max_level >= 1) rec(rec, 1, max_level);
  return out;
}

Report cmd_verify_all(int max_rank, int max_level, const Options& opts, std::size_t fusion_max_dim) {
  if (max_rank < 0 || max_level < 0) throw std::invalid_argument("--max-rank and --max-level must be non-negative");
  json cases = json::array();
  std::size_t checks = 0, failures = 0;
  for (int r = 1; r <= max_rank; ++r) {
    for (const auto& lambda : sweep_weights(r, max_level)) {
      json c = {{"rank", r}, {"weight", to_json(lambda.weight())}};
      auto check = [&](const char* name, bool ok) {
        c["checks"][name] = ok;
        ++checks;
        if (!ok) ++failures;
      };
      const json dims = dimensions(lambda, opts.threads);
      c["enumerated"] = dims["enumerated"];
      c["closed_form"] = dims["closed_form"];
      check("dimension", dims["equal"].get<bool>());

      const GradedCharacter fermionic = fermionic_character(lambda);
      check("fermionic_equals_basis", fermionic == character_from_basis(lambda, opts.threads));
      check("grade_zero", fermionic.slice(0) == classical_character(lambda) &&
                              BigInt(std::to_string(enum_V_basis(lambda).size())) == weyl_dim(lambda));
      check("demazure", verify_demazure_factorization(lambda).holds);
      check("kostka", verify_kostka(lambda).selected_matches());
      check("weyl_symmetry", fermionic.is_weyl_symmetric());
      if (r >= 2) check("recursion", check_recursion(lambda).holds);

      std::vector<int> indices;
      for (int i = 1; i <= r; ++i)
        for (Coord k = 0; k < lambda[i]; ++k) indices.push_back(i);
      std::vector<Coord> points(indices.size());
      for (std::size_t k = 0; k < points.size(); ++k) points[k] = static_cast<Coord>(k);
      const auto factors = make_factors(r, indices, points);
      if (ambient_dim(factors) <= fusion_max_dim) {
        check("fusion", fusion_graded_character(factors, opts.max_grade) == fermionic);
        std::vector<Coord> alt(points.size());
        for (std::size_t k = 0; k < alt.size(); ++k) alt[k] = static_cast<Coord>(3 * k * k + 2 * k) - 1;
        check("point_independence", point_independence(factors, alt, opts.max_grade).equal);
      }
      cases.push_back(std::move(c));
    }
  }
  json payload = {{"cases", cases}, {"checks", checks}, {"failures", failures}};
  json input = {{"max_rank", max_rank}, {"max_level", max_level}, {"fusion_max_dim", fusion_max_dim}};
  return make_report("verify-all", std::move(input), failures == 0, std::move(payload));
}

}  // namespace weylmod::cli
