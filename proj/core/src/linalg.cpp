#include "weylmod/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylmod {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool RationalMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

RationalVector RationalMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RationalMatrix operator*(const Rational& c, RationalMatrix a) {
  for (auto& x : a.data_) x *= c;
  return a;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

SparseOperator::SparseOperator(const RationalMatrix& m) : dim_(m.cols()) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SparseOperator needs a square matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) entries_.push_back({i, j, m(i, j)});
}

RationalVector SparseOperator::apply(std::span<const Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("operator-vector size mismatch");
  RationalVector out(dim_);
  for (const auto& e : entries_)
    if (sgn(v[e.col]) != 0) out[e.row] += e.value * v[e.col];
  return out;
}

RationalVector EchelonBasis::reduce(RationalVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: vector size mismatch");
  for (const auto& [pivot, row] : rows_) {
    if (sgn(v[pivot]) == 0) continue;
    const Rational factor = v[pivot];
    for (std::size_t k = 0; k < dim_; ++k)
      if (sgn(row[k]) != 0) v[k] -= factor * row[k];
  }
  return v;
}

bool EchelonBasis::contains(const RationalVector& v) const {
  const auto reduced = reduce(v);
  return std::all_of(reduced.begin(), reduced.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool EchelonBasis::insert(RationalVector v) {
  v = reduce(std::move(v));
  const auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (it == v.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - v.begin());
  const Rational inv = 1 / v[pivot];
  for (auto& x : v) x *= inv;
  rows_.emplace_back(pivot, std::move(v));
  return true;
}

std::size_t rank_of(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  EchelonBasis basis(vectors.front().size());
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

}  // namespace weylmod
