#pragma once

// Dense exact-rational matrices and incremental row-echelon bases.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "weylmod/numbers.hpp"

namespace weylmod {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;
  /// Entries flattened row-major.
  const RationalVector& entries() const { return data_; }

  RationalVector apply(std::span<const Rational> v) const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& c, RationalMatrix a);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RationalVector data_;
};

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);
/// [a, b] = ab - ba
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

/// Nonzero entries of a matrix, for repeated matrix-vector products.
class SparseOperator {
 public:
  SparseOperator() = default;
  explicit SparseOperator(const RationalMatrix& m);

  std::size_t dim() const { return dim_; }
  bool is_zero() const { return entries_.empty(); }
  RationalVector apply(std::span<const Rational> v) const;

 private:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Rational value;
  };
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

/// Span of a set of vectors kept as rows with distinct pivots; each row has a
/// unit pivot and is zero at the pivots of all earlier rows.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduce v against the current rows.
  RationalVector reduce(RationalVector v) const;
  bool contains(const RationalVector& v) const;
  /// Add v to the span; returns true if the span grew.
  bool insert(RationalVector v);

 private:
  std::size_t dim_;
  std::vector<std::pair<std::size_t, RationalVector>> rows_;
};

std::size_t rank_of(const std::vector<RationalVector>& vectors);

}  // namespace weylmod
