#pragma once

// Classical and graded characters of sl_{r+1} and sl_{r+1}[t] modules.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylmod/kostka.hpp"
#include "weylmod/lattice.hpp"
#include "weylmod/numbers.hpp"
#include "weylmod/qpoly.hpp"

namespace weylmod {

/// sum dim(V_mu) e(mu), stored sparsely without zero entries.
class ClassicalCharacter {
 public:
  using Table = std::map<WeightVector, BigInt>;

  explicit ClassicalCharacter(int rank = 1) : rank_(rank) {}

  int rank() const { return rank_; }
  const Table& table() const { return table_; }
  bool empty() const { return table_.empty(); }

  void add(const WeightVector& mu, const BigInt& mult);
  BigInt multiplicity(const WeightVector& mu) const;
  /// Total dimension.
  BigInt mass() const;
  /// Invariant under every simple reflection.
  bool is_weyl_symmetric() const;

  ClassicalCharacter& operator+=(const ClassicalCharacter& other);
  ClassicalCharacter& operator-=(const ClassicalCharacter& other);
  friend ClassicalCharacter operator*(const BigInt& c, const ClassicalCharacter& ch);
  /// Character of the tensor product.
  friend ClassicalCharacter operator*(const ClassicalCharacter& a, const ClassicalCharacter& b);
  friend bool operator==(const ClassicalCharacter&, const ClassicalCharacter&) = default;

 private:
  int rank_;
  Table table_;
};

/// sum dim(M_{mu,s}) t^s e(mu).
class GradedCharacter {
 public:
  using Table = std::map<WeightVector, QPoly>;

  explicit GradedCharacter(int rank = 1) : rank_(rank) {}
  /// All multiplicities placed in degree zero.
  static GradedCharacter from_classical(const ClassicalCharacter& ch);

  int rank() const { return rank_; }
  const Table& table() const { return table_; }
  bool empty() const { return table_.empty(); }

  void add(const WeightVector& mu, const QPoly& p);
  QPoly at(const WeightVector& mu) const;

  /// Coefficient of t^degree as a classical character.
  ClassicalCharacter slice(long degree) const;
  /// Specialization t = 1.
  ClassicalCharacter at_one() const;
  /// Highest t-degree present, or -1 when empty.
  long top_degree() const;
  BigInt mass() const;
  bool has_nonnegative_coeffs() const;
  /// Every t-degree slice is Weyl symmetric.
  bool is_weyl_symmetric() const;

  friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;

 private:
  int rank_;
  Table table_;
};

/// Gelfand-Tsetlin pattern: rows of lengths n, n-1, ..., 1 with
/// upper_i >= lower_i >= upper_{i+1}.
struct GTPattern {
  std::vector<std::vector<Coord>> rows;

  bool is_valid() const;
  /// gl_n weight (sigma_k - sigma_{k-1}) where sigma_k is the sum of the row of length k.
  std::vector<Coord> gl_weight() const;
  /// sl_n weight in the fundamental-weight basis.
  WeightVector weight() const;
};

/// Visit all GT patterns with the given top row (length n >= 2).
template <class Visitor>
void for_each_gt_pattern(const std::vector<Coord>& top, Visitor&& visit) {
  GTPattern pattern;
  pattern.rows.push_back(top);
  auto rec = [&](auto&& self) -> void {
    const std::vector<Coord> upper = pattern.rows.back();
    if (upper.size() == 1) {
      visit(static_cast<const GTPattern&>(pattern));
      return;
    }
    std::vector<Coord> lower(upper.size() - 1);
    auto fill = [&](auto&& fill_self, std::size_t k) -> void {
      if (k == lower.size()) {
        pattern.rows.push_back(lower);
        self(self);
        pattern.rows.pop_back();
        return;
      }
      for (Coord v = upper[k + 1]; v <= upper[k]; ++v) {
        lower[k] = v;
        fill_self(fill_self, k + 1);
      }
    };
    fill(fill, 0);
  };
  rec(rec);
}

/// ch V(lambda) from GT patterns with top row xi^lambda.
ClassicalCharacter classical_character(const DominantWeight& lambda);
/// Weyl dimension formula prod_{i<=j} (m_i + ... + m_j + j - i + 1) / (j - i + 1).
BigInt weyl_dim(const DominantWeight& lambda);

/// sum over l-arrays of prod_{i<=j} [m_{i,j} choose l_{i,j}]_t e(lambda - sum l_{i,j} alpha_{i,j}).
GradedCharacter fermionic_character(const DominantWeight& lambda);
/// sum over B^r(lambda) of t^{grade} e(weight).
GradedCharacter character_from_basis(const DominantWeight& lambda, unsigned threads = 1);

using Decomposition = std::map<Partition, QPoly>;

/// Write ch as sum_xi c_xi(t) ch V(lambda_xi) by repeatedly removing a
/// dominance-maximal weight. Keys are partitions of size partition_size
/// with at most rank+1 parts; by default the size is that of xi^mu for the
/// first weight mu removed (the highest weight of a cyclic module).
/// Throws std::domain_error when ch is not a non-negative combination of
/// irreducible characters.
Decomposition decompose_graded(const GradedCharacter& ch, std::optional<Coord> partition_size = std::nullopt);
/// sum_xi c_xi(t) ch V(lambda_xi).
GradedCharacter reconstruct(const Decomposition& decomposition, int rank);

/// How the two indices of K_{lambda, xi^tr}(t) are turned into a tableau
/// shape and content.
struct KostkaReading {
  enum class Shape { LambdaPartition, LambdaColumns, XiTranspose };
  enum class Content { XiTranspose, LambdaPartition, LambdaColumns };

  std::string name;
  Shape shape;
  Content content;
  KostkaStatistic statistic;

  Partition shape_for(const DominantWeight& lambda, const Partition& xi) const;
  Partition content_for(const DominantWeight& lambda, const Partition& xi) const;
  QPoly evaluate(const DominantWeight& lambda, const Partition& xi) const;
};

/// Candidate readings, in the order they are tried. The first is
/// shape = xi^lambda, content = xi^tr with the charge statistic.
const std::vector<KostkaReading>& kostka_readings();
/// The reading that agrees with the decomposition: shape xi^tr, content
/// 1^{m_1} 2^{m_2} ... r^{m_r}, charge statistic.
const KostkaReading& selected_kostka_reading();

struct KostkaReport {
  DominantWeight lambda;
  Decomposition decomposition;
  bool highest_coefficient_is_one = false;
  /// Names of readings that match every coefficient.
  std::vector<std::string> matching_readings;
  /// For readings that do not match: first mismatching partition.
  std::map<std::string, std::string> mismatches;

  bool matched() const { return highest_coefficient_is_one && !matching_readings.empty(); }
  bool matches(const std::string& reading) const;
  /// Highest coefficient is 1 and the selected reading matches.
  bool selected_matches() const;
};

/// Compare decompose_graded(fermionic_character(lambda)) with Kostka
/// polynomials under every candidate reading.
KostkaReport verify_kostka(const DominantWeight& lambda);

struct DemazureReport {
  bool holds = false;
  ClassicalCharacter at_one;
  ClassicalCharacter tensor_product;
};

/// fermionic_character(lambda) at t = 1 against prod_i ch V(omega_i)^{m_i}.
DemazureReport verify_demazure_factorization(const DominantWeight& lambda);

}  // namespace weylmod
