#include <gtest/gtest.h>

#include <set>

#include "../oracles.hpp"
#include "weylmod/basisenum.hpp"
#include "weylmod/charring.hpp"

using namespace weylmod;

TEST(Factors, SmallSets) {
  EXPECT_EQ(enum_F(0), (std::vector<PbwFactor>{{0, {}}}));
  const std::vector<PbwFactor> f2 = enum_F(2);
  const std::set<PbwFactor> got(f2.begin(), f2.end());
  const std::set<PbwFactor> want{{0, {}}, {1, {0}}, {1, {1}}, {2, {0, 0}}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(f2.size(), 4u);
  EXPECT_TRUE(enum_F(-1).empty());
}

TEST(Factors, CountsAndMembership) {
  for (Coord m = 0; m <= 10; ++m) {
    const auto f = enum_F(m);
    EXPECT_EQ(f.size(), std::size_t{1} << m);
    std::vector<std::size_t> by_length(static_cast<std::size_t>(m + 1));
    for (const auto& x : f) {
      EXPECT_TRUE(x.in_F(m));
      ++by_length[static_cast<std::size_t>(x.length)];
    }
    for (Coord l = 0; l <= m; ++l)
      EXPECT_EQ(by_length[static_cast<std::size_t>(l)],
                binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(l)).get_ui());
  }
  EXPECT_FALSE((PbwFactor{1, {2}}).in_F(2));
  EXPECT_FALSE((PbwFactor{2, {1, 0}}).in_F(3));
}

TEST(Factors, ColexOrder) {
  std::vector<Coord> t{0, 0};
  std::vector<std::vector<Coord>> seen{t};
  while (next_colex(t, 2)) seen.push_back(t);
  const std::vector<std::vector<Coord>> want{{0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {2, 2}};
  EXPECT_EQ(seen, want);
}

TEST(Basis, ClosedForm) {
  EXPECT_EQ(count_basis(DominantWeight{1, 1}), 9);
  EXPECT_EQ(count_basis(DominantWeight{0, 1, 0}), 6);
  EXPECT_EQ(count_basis(DominantWeight{2, 0}), 9);
  EXPECT_EQ(count_basis(DominantWeight{1, 1, 1}), 96);
}

TEST(Basis, EnumerationCounts) {
  for (Coord n = 0; n <= 12; ++n) EXPECT_EQ(BasisEnumerator(DominantWeight{n}).count(), std::uint64_t{1} << n);
  EXPECT_EQ(BasisEnumerator(DominantWeight{1, 0}).count(), 3u);
  EXPECT_EQ(BasisEnumerator(DominantWeight{1, 1}).count(), 9u);
  EXPECT_EQ(BasisEnumerator(DominantWeight{0, 1, 0}).count(), 6u);
}

TEST(Basis, SlTwoStreamIsF) {
  for (Coord n = 0; n <= 5; ++n) {
    std::set<PbwFactor> got;
    for (const auto& b : BasisEnumerator(DominantWeight{n}).collect()) got.insert(b.factor(1, 1));
    const auto f = enum_F(n);
    EXPECT_EQ(got, std::set<PbwFactor>(f.begin(), f.end()));
  }
}

TEST(Basis, MatchesBruteForce) {
  for (int r = 1; r <= 3; ++r)
    for (const auto& lambda : oracle::weights_up_to(r, r == 3 ? 1 : 2)) {
      auto got = BasisEnumerator(lambda).collect();
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, oracle::brute_basis(lambda)) << to_string(lambda.weight());
    }
}

TEST(Basis, PredicatesAgree) {
  for (int r = 1; r <= 2; ++r)
    for (const auto& lambda : oracle::weights_up_to(r, 2)) {
      const Coord level = lambda.level();
      const auto factors = oracle::all_factors(level, level);
      BasisElement b(r);
      std::function<void(int, int)> rec = [&](int i, int j) {
        if (j > r) {
          const bool a = is_admissible(b, lambda);
          EXPECT_EQ(a, is_admissible_shifted(b, lambda));
          EXPECT_EQ(a, oracle::admissible(b, lambda));
          return;
        }
        for (const auto& f : factors) {
          b.factor(i, j) = f;
          if (i < j)
            rec(i + 1, j);
          else
            rec(1, j + 1);
        }
      };
      rec(1, 1);
    }
}

TEST(Basis, ElementInvariants) {
  const DominantWeight lambda{2, 1};
  std::set<BasisElement> seen;
  BasisEnumerator(lambda).for_each([&](const BasisElement& b) {
    EXPECT_TRUE(is_admissible(b, lambda));
    const auto root = b.ell_array().root_content();
    EXPECT_EQ(b.weight(lambda), lambda.weight() - root_to_weight(root));
    Coord grade = 0;
    for (int j = 1; j <= 2; ++j)
      for (int i = 1; i <= j; ++i) grade += b.factor(i, j).degree();
    EXPECT_EQ(b.grade(), grade);
    EXPECT_TRUE(seen.insert(b).second);
  });
  EXPECT_EQ(seen.size(), 27u);
}

TEST(Basis, DeterministicOrderAndThreadedCount) {
  const DominantWeight lambda{1, 1, 1};
  EXPECT_EQ(BasisEnumerator(lambda).collect(), BasisEnumerator(lambda).collect());
  for (unsigned threads : {1u, 2u, 4u}) EXPECT_EQ(BasisEnumerator(lambda).count(threads), 96u);
}

TEST(Basis, GradeZeroBijection) {
  EXPECT_EQ(enum_V_basis(DominantWeight{1, 0}).size(), 3u);
  EXPECT_EQ(enum_V_basis(DominantWeight{1, 1}).size(), 8u);
  for (Coord n = 0; n <= 6; ++n) EXPECT_EQ(enum_V_basis(DominantWeight{n}).size(), static_cast<std::size_t>(n + 1));
  for (int r = 1; r <= 3; ++r)
    for (const auto& lambda : oracle::weights_up_to(r, 3)) {
      std::set<EllArray> grade_zero;
      BasisEnumerator(lambda).for_each([&](const BasisElement& b) {
        if (b.grade() == 0) EXPECT_TRUE(grade_zero.insert(b.ell_array()).second);
      });
      const auto feasible = enum_V_basis(lambda);
      EXPECT_EQ(grade_zero, std::set<EllArray>(feasible.begin(), feasible.end()));
      for (const auto& ell : feasible) EXPECT_TRUE(is_feasible_ell(ell, lambda));
    }
}

TEST(Basis, FixedEllGeneratingFunctionFactors) {
  for (int r = 1; r <= 3; ++r)
    for (const auto& lambda : oracle::weights_up_to(r, 3)) {
      std::map<EllArray, QPoly> by_ell;
      BasisEnumerator(lambda).for_each([&](const BasisElement& b) { by_ell[b.ell_array()].add_term(b.grade(), 1); });
      for (const auto& [ell, poly] : by_ell) {
        QPoly want{1};
        for (int j = 1; j <= r; ++j)
          for (int i = 1; i <= j; ++i) want *= qbinom(column_bound(ell, lambda, i, j), ell(i, j));
        EXPECT_EQ(poly, want);
      }
    }
}

TEST(Recursion, Examples) {
  const auto rep = check_recursion(DominantWeight{1, 1});
  EXPECT_TRUE(rep.holds) << rep.counterexample;
  EXPECT_EQ(rep.basis_size, 9u);
  for (const auto& [ells, counts] : rep.column_multiplicities)
    EXPECT_EQ(counts.second, binomial(1, static_cast<unsigned long>(ells[0])) * binomial(1, static_cast<unsigned long>(ells[1])));
  const auto zero = check_recursion(DominantWeight{0, 0});
  EXPECT_TRUE(zero.holds);
  EXPECT_EQ(zero.basis_size, 1u);
  const auto r3 = check_recursion(DominantWeight{1, 0, 1});
  EXPECT_TRUE(r3.holds) << r3.counterexample;
  EXPECT_EQ(r3.basis_size, 16u);
}

TEST(Recursion, StripLastColumn) {
  BasisElement b(2);
  b.factor(1, 1) = {1, {0}};
  b.factor(1, 2) = {1, {1}};
  b.factor(2, 2) = {0, {}};
  const BasisElement s = strip_last_column(b);
  EXPECT_EQ(s.rank(), 1);
  EXPECT_EQ(s.factor(1, 1), (PbwFactor{1, {0}}));
  EXPECT_THROW(check_recursion(DominantWeight{2}), std::invalid_argument);
}
