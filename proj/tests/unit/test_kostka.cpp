#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "weylmod/kostka.hpp"

using namespace weylmod;

TEST(Charge, Words) {
  const std::vector<Coord> w12{1, 2}, w21{2, 1}, standard{2, 1, 3}, repeated{2, 1, 1, 2};
  EXPECT_EQ(charge(w12), 1);
  EXPECT_EQ(charge(w21), 0);
  EXPECT_EQ(charge(std::vector<Coord>{1, 2, 3}), 3);
  EXPECT_EQ(charge(std::vector<Coord>{3, 2, 1}), 0);
  EXPECT_EQ(charge(std::vector<Coord>{1, 1, 2, 2}), 2);
  EXPECT_THROW(charge(std::vector<Coord>{2, 2, 1}), std::invalid_argument);
}

TEST(Kostka, Examples) {
  EXPECT_EQ(kostka(Partition{2}, Partition{1, 1}), QPoly({0, 1}));
  EXPECT_EQ(kostka(Partition{1, 1}, Partition{1, 1}), QPoly{1});
  for (Coord n = 0; n <= 6; ++n)
    for (const auto& xi : partitions_of(n, 10)) EXPECT_EQ(kostka(xi, xi), QPoly{1});
  EXPECT_EQ(kostka(Partition{2}, Partition{1}), QPoly{});
  EXPECT_EQ(kostka(Partition{1, 1}, Partition{2}), QPoly{});
}

TEST(Kostka, KnownPolynomials) {
  EXPECT_EQ(kostka(Partition{3}, Partition{1, 1, 1}), QPoly({0, 0, 0, 1}));
  EXPECT_EQ(kostka(Partition{2, 1}, Partition{1, 1, 1}), QPoly({0, 1, 1}));
  EXPECT_EQ(kostka(Partition{2, 2}, Partition{2, 1, 1}), QPoly({0, 1}));
  EXPECT_EQ(kostka(Partition{3, 1}, Partition{2, 1, 1}), QPoly({0, 1, 1}));
}

TEST(Kostka, TableauxAreSemistandard) {
  for (const auto& t : semistandard_tableaux(Partition{3, 2}, Partition{2, 2, 1})) {
    EXPECT_TRUE(t.is_semistandard());
    EXPECT_EQ(t.content(3), (std::vector<Coord>{2, 2, 1}));
  }
  const Tableau bad{Partition{2, 1}, {{1, 1}, {1}}};
  EXPECT_FALSE(bad.is_semistandard());
}

TEST(Kostka, ReadingWordIsBottomRowFirst) {
  const Tableau t{Partition{2, 1}, {{1, 1}, {2}}};
  EXPECT_EQ(t.reading_word(), (std::vector<Coord>{2, 1, 1}));
}

TEST(Kostka, AtOneCountsTableaux) {
  for (Coord n = 1; n <= 6; ++n)
    for (const auto& shape : partitions_of(n, 6))
      for (const auto& content : partitions_of(n, 6)) {
        const long brute = oracle::ssyt_count(shape, content);
        EXPECT_EQ(eval_at_one(kostka(shape, content)), brute) << to_string(shape) << " " << to_string(content);
        EXPECT_EQ(kostka_number(shape, content), brute);
      }
}

TEST(Kostka, ChargeAgreesWithLusztigFormula) {
  for (Coord n = 1; n <= 6; ++n)
    for (const auto& shape : partitions_of(n, 6))
      for (const auto& content : partitions_of(n, 6))
        EXPECT_EQ(kostka(shape, content), oracle::lusztig_kostka(shape, content))
            << to_string(shape) << " " << to_string(content);
}

TEST(Kostka, CochargeComplements) {
  for (Coord n = 1; n <= 5; ++n)
    for (const auto& shape : partitions_of(n, 5))
      for (const auto& content : partitions_of(n, 5)) {
        const QPoly c = kostka(shape, content, KostkaStatistic::Charge);
        const QPoly cc = kostka(shape, content, KostkaStatistic::Cocharge);
        const long top = content.weighted_size();
        QPoly reversed;
        for (long k = 0; k <= c.degree(); ++k) reversed.add_term(top - k, c.coeff(k));
        EXPECT_EQ(cc, reversed);
      }
}
