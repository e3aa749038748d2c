#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "weylmod/charring.hpp"
#include "weylmod/kostka.hpp"

using namespace weylmod;

namespace {

GradedCharacter table(int rank, std::initializer_list<std::pair<WeightVector, QPoly>> entries) {
  GradedCharacter ch(rank);
  for (const auto& [mu, p] : entries) ch.add(mu, p);
  return ch;
}

// dim V(lambda)_mu as the number of SSYT of shape xi^lambda whose content,
// read as a gl_{r+1} weight, restricts to mu.
BigInt weight_multiplicity(const DominantWeight& lambda, const WeightVector& mu) {
  const int r = lambda.rank();
  const Partition xi = weight_to_partition(lambda);
  Coord moment = 0;
  for (int k = 1; k <= r; ++k) moment += k * mu[k];
  const Coord numerator = xi.size() - moment;
  if (numerator % (r + 1) != 0) return 0;
  std::vector<Coord> w(static_cast<std::size_t>(r + 1));
  w[static_cast<std::size_t>(r)] = numerator / (r + 1);
  for (int i = r; i >= 1; --i) w[static_cast<std::size_t>(i - 1)] = w[static_cast<std::size_t>(i)] + mu[i];
  if (std::any_of(w.begin(), w.end(), [](Coord c) { return c < 0; })) return 0;
  std::sort(w.rbegin(), w.rend());
  return kostka_number(xi, Partition(w));
}

}  // namespace

TEST(Classical, Examples) {
  const auto c = classical_character(DominantWeight{1, 0});
  EXPECT_EQ(c.table().size(), 3u);
  EXPECT_EQ(c.multiplicity(WeightVector{1, 0}), 1);
  EXPECT_EQ(c.multiplicity(WeightVector{-1, 1}), 1);
  EXPECT_EQ(c.multiplicity(WeightVector{0, -1}), 1);

  const auto adj = classical_character(DominantWeight{1, 1});
  EXPECT_EQ(adj.mass(), 8);
  EXPECT_EQ(adj.multiplicity(WeightVector{0, 0}), 2);
  EXPECT_EQ(adj.table().size(), 7u);

  for (Coord n = 0; n <= 5; ++n) {
    const auto s = classical_character(DominantWeight{n});
    EXPECT_EQ(s.table().size(), static_cast<std::size_t>(n + 1));
    for (const auto& [mu, m] : s.table()) EXPECT_EQ(m, 1);
  }
}

TEST(Classical, WeylDimension) {
  EXPECT_EQ(weyl_dim(DominantWeight{1, 1}), 8);
  EXPECT_EQ(weyl_dim(DominantWeight{0, 1, 0}), 6);
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(weyl_dim(DominantWeight::zero(r)), 1);
}

TEST(Classical, AgreesWithTableauCounts) {
  for (int r = 1; r <= 3; ++r)
    for (const auto& lambda : oracle::weights_up_to(r, 3)) {
      const auto ch = classical_character(lambda);
      EXPECT_EQ(ch.mass(), weyl_dim(lambda));
      EXPECT_TRUE(ch.is_weyl_symmetric());
      for (const auto& [mu, m] : ch.table()) EXPECT_EQ(m, weight_multiplicity(lambda, mu)) << to_string(mu);
    }
}

TEST(Fermionic, Examples) {
  EXPECT_EQ(fermionic_character(DominantWeight{1}), table(1, {{WeightVector{1}, QPoly{1}}, {WeightVector{-1}, QPoly{1}}}));
  EXPECT_EQ(fermionic_character(DominantWeight{2}),
            table(1, {{WeightVector{2}, QPoly{1}}, {WeightVector{0}, QPoly({1, 1})}, {WeightVector{-2}, QPoly{1}}}));
  for (int r = 1; r <= 3; ++r)
    EXPECT_EQ(fermionic_character(DominantWeight::zero(r)), table(r, {{WeightVector(r), QPoly{1}}}));
}

TEST(Fermionic, FromBasisExamples) {
  EXPECT_EQ(character_from_basis(DominantWeight{1}), fermionic_character(DominantWeight{1}));
  const auto c = character_from_basis(DominantWeight{1, 0});
  EXPECT_EQ(c.table().size(), 3u);
  for (const auto& [mu, p] : c.table()) EXPECT_EQ(p, QPoly{1});
  EXPECT_EQ(character_from_basis(DominantWeight{1, 1}).mass(), 9);
}

TEST(Fermionic, BruteForceBasisCharacter) {
  for (int r = 1; r <= 3; ++r)
    for (const auto& lambda : oracle::weights_up_to(r, r == 3 ? 1 : 2)) {
      GradedCharacter brute(r);
      for (const auto& b : oracle::brute_basis(lambda)) brute.add(b.weight(lambda), QPoly::monomial(b.grade()));
      EXPECT_EQ(fermionic_character(lambda), brute);
    }
}

TEST(Fermionic, Properties) {
  for (int r = 1; r <= 3; ++r)
    for (const auto& lambda : oracle::weights_up_to(r, 3)) {
      const auto ch = fermionic_character(lambda);
      EXPECT_EQ(ch, character_from_basis(lambda, 2));
      EXPECT_TRUE(ch.has_nonnegative_coeffs());
      EXPECT_TRUE(ch.is_weyl_symmetric());
      EXPECT_EQ(ch.slice(0), classical_character(lambda));
      EXPECT_EQ(ch.mass(), count_basis(lambda));
      EXPECT_TRUE(verify_demazure_factorization(lambda).holds);
    }
}

TEST(Decompose, Examples) {
  const auto d = decompose_graded(fermionic_character(DominantWeight{2}));
  EXPECT_EQ(d, (Decomposition{{Partition{2}, QPoly{1}}, {Partition{1, 1}, QPoly({0, 1})}}));
  EXPECT_EQ(decompose_graded(fermionic_character(DominantWeight{1, 0})), (Decomposition{{Partition{1}, QPoly{1}}}));
  for (const auto& lambda : oracle::weights_up_to(2, 3)) {
    const auto g = GradedCharacter::from_classical(classical_character(lambda));
    EXPECT_EQ(decompose_graded(g), (Decomposition{{weight_to_partition(lambda).trimmed(), QPoly{1}}}));
  }
}

TEST(Decompose, ReconstructsExactly) {
  for (int r = 1; r <= 3; ++r)
    for (const auto& lambda : oracle::weights_up_to(r, 3)) {
      const auto ch = fermionic_character(lambda);
      const auto d = decompose_graded(ch);
      for (const auto& [xi, p] : d) EXPECT_TRUE(p.has_nonnegative_coeffs());
      EXPECT_EQ(reconstruct(d, r), ch);
    }
}

TEST(Decompose, RejectsNonCharacters) {
  GradedCharacter lone(1);
  lone.add(WeightVector{-1}, QPoly{1});
  EXPECT_THROW(decompose_graded(lone), std::domain_error);
  GradedCharacter partial(2);
  partial.add(WeightVector{1, 1}, QPoly{1});
  EXPECT_THROW(decompose_graded(partial), std::domain_error);
}

TEST(KostkaDecomposition, Examples) {
  const auto two = verify_kostka(DominantWeight{2});
  EXPECT_TRUE(two.selected_matches());
  EXPECT_EQ(two.decomposition.at(Partition{2}), QPoly{1});
  EXPECT_EQ(two.decomposition.at(Partition{1, 1}), QPoly({0, 1}));
  EXPECT_TRUE(verify_kostka(DominantWeight{1, 1}).selected_matches());
  const auto single = verify_kostka(DominantWeight{0, 1});
  EXPECT_TRUE(single.selected_matches());
  EXPECT_EQ(single.decomposition.size(), 1u);
}

TEST(KostkaDecomposition, SelectedReadingHoldsAndFirstCandidateFails) {
  bool first_failed_somewhere = false;
  for (int r = 1; r <= 3; ++r)
    for (const auto& lambda : oracle::weights_up_to(r, r == 3 ? 2 : 4)) {
      const auto rep = verify_kostka(lambda);
      EXPECT_TRUE(rep.highest_coefficient_is_one);
      EXPECT_TRUE(rep.selected_matches()) << to_string(lambda.weight());
      if (!rep.matches(kostka_readings().front().name)) first_failed_somewhere = true;
    }
  EXPECT_TRUE(first_failed_somewhere);
}

TEST(Characters, TensorProduct) {
  const auto v = classical_character(DominantWeight{1, 0});
  const auto vv = v * v;
  EXPECT_EQ(vv.mass(), 9);
  ClassicalCharacter sum = classical_character(DominantWeight{2, 0});
  sum += classical_character(DominantWeight{0, 1});
  EXPECT_EQ(vv, sum);
}
