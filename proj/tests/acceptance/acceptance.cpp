// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "weylmod/basisenum.hpp"
#include "weylmod/charring.hpp"
#include "weylmod/fusion.hpp"

using namespace weylmod;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string failure;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      failure = what;
    }
  }
};

// r in {1,2,3}; level <= 4 for r <= 2 and <= 3 for r = 3.
std::vector<DominantWeight> main_sweep() {
  std::vector<DominantWeight> out;
  for (int r = 1; r <= 3; ++r)
    for (const auto& lambda : oracle::weights_up_to(r, r <= 2 ? 4 : 3)) out.push_back(lambda);
  return out;
}

std::string label(const DominantWeight& lambda) { return "r=" + std::to_string(lambda.rank()) + " lambda=(" + to_string(lambda.weight()) + ")"; }

struct FusionCase {
  int rank;
  std::vector<int> indices;
};

// Multisets of fundamental indices: r <= 2 with k <= 3, and r = 3 with k = 2.
std::vector<FusionCase> fusion_cases() {
  std::vector<FusionCase> out;
  auto add_all = [&](int r, int k) {
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int lo) {
      if (static_cast<int>(idx.size()) == k) {
        out.push_back({r, idx});
        return;
      }
      for (int i = lo; i <= r; ++i) {
        idx.push_back(i);
        rec(i);
        idx.pop_back();
      }
    };
    rec(1);
  };
  for (int r = 1; r <= 2; ++r)
    for (int k = 1; k <= 3; ++k) add_all(r, k);
  add_all(3, 2);
  return out;
}

std::string describe(const FusionCase& c) {
  std::ostringstream s;
  s << "r=" << c.rank << " factors=";
  for (std::size_t k = 0; k < c.indices.size(); ++k) s << (k ? "," : "") << "w" << c.indices[k];
  return s.str();
}

DominantWeight fusion_weight(const FusionCase& c) {
  WeightVector w(c.rank);
  for (int i : c.indices) w[i] += 1;
  return DominantWeight(w);
}

// Characters produced by criteria 3 and 7, re-checked in criterion 9.
std::vector<std::pair<std::string, GradedCharacter>> g_characters;

Outcome criterion1() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& lambda : main_sweep()) {
    const std::uint64_t enumerated = BasisEnumerator(lambda).count();
    BigInt product = 1;
    for (int i = 1; i <= lambda.rank(); ++i)
      product *= power(binomial(static_cast<unsigned long>(lambda.rank() + 1), static_cast<unsigned long>(i)),
                       static_cast<unsigned long>(lambda[i]));
    o.require(BigInt(std::to_string(enumerated)) == product && count_basis(lambda) == product, label(lambda));
    ++n;
  }
  o.detail = std::to_string(n) + " weights";
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (Coord n = 0; n <= 12; ++n) {
    const DominantWeight lambda{n};
    o.require(BasisEnumerator(lambda).count() == (std::uint64_t{1} << n), "count n=" + std::to_string(n));
    GradedCharacter want(1);
    for (Coord l = 0; l <= n; ++l) want.add(WeightVector{n - 2 * l}, qbinom(n, l));
    o.require(character_from_basis(lambda) == want, "character n=" + std::to_string(n));
    o.require(fermionic_character(lambda) == want, "fermionic n=" + std::to_string(n));
  }
  o.detail = "n <= 12";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& lambda : main_sweep()) {
    const auto ch = fermionic_character(lambda);
    o.require(ch == character_from_basis(lambda), label(lambda));
    g_characters.emplace_back("fermionic " + label(lambda), ch);
  }
  o.detail = std::to_string(g_characters.size()) + " weights";
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const auto& lambda : main_sweep()) {
    o.require(fermionic_character(lambda).slice(0) == classical_character(lambda), "slice " + label(lambda));
    o.require(BigInt(std::to_string(enum_V_basis(lambda).size())) == weyl_dim(lambda), "count " + label(lambda));
  }
  o.require(enum_V_basis(DominantWeight{1, 1}).size() == 8, "r=2 lambda=(1,1) gives 8");
  o.detail = std::to_string(main_sweep().size()) + " weights";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const auto& lambda : main_sweep()) o.require(verify_demazure_factorization(lambda).holds, label(lambda));
  o.detail = std::to_string(main_sweep().size()) + " weights";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t n = 0;
  for (int r = 1; r <= 2; ++r)
    for (const auto& lambda : oracle::weights_up_to(r, 3)) {
      const auto rep = verify_kostka(lambda);
      o.require(rep.highest_coefficient_is_one, "c_{xi^lambda} != 1 at " + label(lambda));
      o.require(rep.matches(selected_kostka_reading().name), label(lambda));
      // Independent evaluation of the Kostka side.
      const Partition columns = transpose(weight_to_partition(lambda));
      for (const auto& xi : partitions_of(weight_to_partition(lambda).size(), static_cast<std::size_t>(r + 1))) {
        const auto it = rep.decomposition.find(xi);
        const QPoly got = it == rep.decomposition.end() ? QPoly{} : it->second;
        o.require(got == oracle::lusztig_kostka(transpose(xi), columns), "Lusztig " + label(lambda) + " xi=" + to_string(xi));
      }
      ++n;
    }
  o.detail = std::to_string(n) + " weights, reading " + selected_kostka_reading().name;
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t n = 0;
  double slowest = 0;
  for (const auto& c : fusion_cases()) {
    std::vector<Coord> points(c.indices.size());
    for (std::size_t k = 0; k < points.size(); ++k) points[k] = static_cast<Coord>(k);
    const auto factors = make_factors(c.rank, c.indices, points);
    const auto start = std::chrono::steady_clock::now();
    const auto ch = fusion_graded_character(factors);
    slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    o.require(ch == fermionic_character(fusion_weight(c)), describe(c));
    g_characters.emplace_back("fusion " + describe(c), ch);
    ++n;
  }
  std::ostringstream s;
  s << n << " configurations, slowest " << slowest << " s";
  o.detail = s.str();
  return o;
}

Outcome criterion8() {
  Outcome o;
  const std::vector<Coord> alt{-1, 4, 5};
  for (const auto& c : fusion_cases()) {
    std::vector<Coord> points(c.indices.size());
    for (std::size_t k = 0; k < points.size(); ++k) points[k] = static_cast<Coord>(k);
    const auto factors = make_factors(c.rank, c.indices, points);
    const auto rep = point_independence(factors, std::span(alt).first(c.indices.size()));
    o.require(rep.equal, describe(c));
    g_characters.emplace_back("fusion at -1,4,5 " + describe(c), rep.second);
  }
  o.detail = "points 0,1,2 vs -1,4,5";
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (const auto& [name, ch] : g_characters) o.require(ch.is_weyl_symmetric(), name);
  o.detail = std::to_string(g_characters.size()) + " graded characters";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t n = 0;
  for (int r = 2; r <= 3; ++r)
    for (const auto& lambda : oracle::weights_up_to(r, 3)) {
      const auto rep = check_recursion(lambda);
      o.require(rep.holds, label(lambda) + ": " + rep.counterexample);
      o.require(BigInt(std::to_string(rep.basis_size)) == count_basis(lambda), label(lambda) + " size");
      ++n;
    }
  o.detail = std::to_string(n) + " weights";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"dimension equals product of binomials", criterion1},
      {"sl2 base case", criterion2},
      {"fermionic formula equals basis character", criterion3},
      {"grade-zero slice is the irreducible", criterion4},
      {"Demazure factorization at t=1", criterion5},
      {"Kostka decomposition", criterion6},
      {"fusion product equals fermionic character", criterion7},
      {"independence of evaluation points", criterion8},
      {"Weyl symmetry of graded slices", criterion9},
      {"recursion on the last column", criterion10},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s [%s] (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(),
                seconds, o.pass ? "" : " first failure: ", o.failure.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
