#pragma once

// Weight and root lattice arithmetic for sl_{r+1}, plus partitions.
//
// Every lattice value carries its rank. Operations that combine two values
// check that the ranks agree and throw std::invalid_argument otherwise.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weylmod {

// Lattice coordinates, basis-array entries and t-exponents. Counts and
// polynomial coefficients use BigInt (see numbers.hpp).
using Coord = std::int64_t;

/// An element of the weight lattice P, in the basis of fundamental weights.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(int rank);
  explicit WeightVector(std::vector<Coord> coords);
  WeightVector(std::initializer_list<Coord> coords);

  int rank() const { return static_cast<int>(coords_.size()); }
  // 1-based, matching omega_1 .. omega_r.
  Coord operator[](int i) const { return coords_[static_cast<std::size_t>(i - 1)]; }
  Coord& operator[](int i) { return coords_[static_cast<std::size_t>(i - 1)]; }
  std::span<const Coord> coords() const { return coords_; }

  bool is_dominant() const;
  bool is_zero() const;

  WeightVector& operator+=(const WeightVector& other);
  WeightVector& operator-=(const WeightVector& other);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(Coord k, WeightVector a);

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  // Lexicographic on the omega-coordinates.
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Coord> coords_;
};

/// An element of the root lattice Q, in the basis of simple roots.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(int rank);
  explicit RootVector(std::vector<Coord> coords);
  RootVector(std::initializer_list<Coord> coords);

  /// alpha_{i,j} = alpha_i + ... + alpha_j, 1 <= i <= j <= rank.
  static RootVector positive_root(int rank, int i, int j);
  static RootVector simple_root(int rank, int i) { return positive_root(rank, i, i); }

  int rank() const { return static_cast<int>(coords_.size()); }
  Coord operator[](int i) const { return coords_[static_cast<std::size_t>(i - 1)]; }
  Coord& operator[](int i) { return coords_[static_cast<std::size_t>(i - 1)]; }
  std::span<const Coord> coords() const { return coords_; }

  bool is_nonnegative() const;  // membership in Q^+

  RootVector& operator+=(const RootVector& other);
  RootVector& operator-=(const RootVector& other);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(Coord k, RootVector a);

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;

 private:
  std::vector<Coord> coords_;
};

/// lambda = sum m_i omega_i with every m_i >= 0.
class DominantWeight {
 public:
  DominantWeight() = default;
  explicit DominantWeight(std::vector<Coord> m);
  DominantWeight(std::initializer_list<Coord> m);
  explicit DominantWeight(const WeightVector& w);

  /// m_i omega_i for a single fundamental weight.
  static DominantWeight fundamental(int rank, int i);
  static DominantWeight zero(int rank);

  int rank() const { return weight_.rank(); }
  Coord operator[](int i) const { return weight_[i]; }
  const WeightVector& weight() const { return weight_; }
  operator const WeightVector&() const { return weight_; }

  /// Sum of the m_i.
  Coord level() const;

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

 private:
  WeightVector weight_;
};

/// Weakly decreasing sequence of non-negative integers. Trailing zeros are
/// kept as given; equality ignores them.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Coord> parts);
  Partition(std::initializer_list<Coord> parts);

  std::span<const Coord> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  // 1-based; parts beyond the stored length read as zero.
  Coord operator[](std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  Coord size() const;              // |xi|
  std::size_t num_nonzero() const; // number of positive parts
  Partition trimmed() const;
  Partition padded(std::size_t len) const;
  /// n(xi) = sum (i-1) xi_i.
  Coord weighted_size() const;

  /// Dominance order on partitions of equal size.
  bool dominates(const Partition& other) const;

  friend bool operator==(const Partition& a, const Partition& b);
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<Coord> parts_;
};

/// All partitions of n with at most max_parts parts, in reverse lexicographic
/// order starting from (n).
std::vector<Partition> partitions_of(Coord n, std::size_t max_parts);

// Cartan matrix of sl_{r+1}: <alpha_j, h_i> = 2 delta_ij - delta_{|i-j|,1}.
int cartan_entry(int i, int j);

WeightVector root_to_weight(const RootVector& root);
/// Inverse Cartan transform; nullopt if the weight is not in the root lattice.
std::optional<RootVector> weight_to_root(const WeightVector& weight);

/// mu >= nu in the dominance order on P, i.e. mu - nu in Q^+.
bool dominance_geq(const WeightVector& mu, const WeightVector& nu);

/// xi^lambda_i = sum_{j >= i} m_j, of length r+1 with last part 0.
Partition weight_to_partition(const DominantWeight& lambda);
/// lambda_xi = sum (xi_i - xi_{i+1}) omega_i. Throws if xi has a nonzero
/// part beyond index rank+1.
DominantWeight partition_to_weight(const Partition& xi, int rank);

Partition transpose(const Partition& xi);

/// s_i(mu) = mu - mu(h_i) alpha_i.
WeightVector simple_reflection(int i, const WeightVector& mu);

/// Throws std::invalid_argument when ranks differ.
void require_same_rank(int a, int b, std::string_view what);

// Text forms: weights as "m1,m2,...,mr", partitions as "[3,1,1]".
WeightVector parse_weight(std::string_view text);
DominantWeight parse_dominant_weight(std::string_view text);
Partition parse_partition(std::string_view text);
std::string to_string(const WeightVector& w);
std::string to_string(const Partition& p);

}  // namespace weylmod
