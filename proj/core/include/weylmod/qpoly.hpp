#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "weylmod/numbers.hpp"

namespace weylmod {

/// Polynomial in t with arbitrary-precision integer coefficients.
///
/// Stored lowest degree first with no trailing zero coefficient, so the zero
/// polynomial has an empty coefficient vector and degree() == -1.
class QPoly {
 public:
  static constexpr long kZeroDegree = -1;

  QPoly() = default;
  explicit QPoly(std::vector<BigInt> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly constant(const BigInt& c);
  /// c * t^k
  static QPoly monomial(long k, const BigInt& c = 1);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  /// Coefficient of t^k; zero outside the stored range.
  BigInt coeff(long k) const;
  bool has_nonnegative_coeffs() const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  /// Multiply by t^k, k >= 0.
  QPoly shifted(long k) const;
  /// Add c * t^k in place.
  void add_term(long k, const BigInt& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const BigInt& c, const QPoly& p);
  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// Gaussian binomial [n choose k]_t. Zero when k < 0, k > n or n < 0.
QPoly qbinom(long n, long k);

/// p(1), the sum of the coefficients.
BigInt eval_at_one(const QPoly& p);

/// Human-readable form such as "1+2t+t^2".
std::string to_string(const QPoly& p);

}  // namespace weylmod
