#include "weylmod/qpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace weylmod {

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

QPoly QPoly::constant(const BigInt& c) { return QPoly(std::vector<BigInt>{c}); }

QPoly QPoly::monomial(long k, const BigInt& c) {
  if (k < 0) throw std::invalid_argument("QPoly::monomial: negative exponent");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(k + 1));
  coeffs.back() = c;
  return QPoly(std::move(coeffs));
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPoly::coeff(long k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

bool QPoly::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly operator*(const BigInt& c, const QPoly& p) {
  QPoly out = p;
  for (auto& x : out.coeffs_) x *= c;
  out.normalize();
  return out;
}

QPoly& QPoly::operator*=(const QPoly& other) { return *this = *this * other; }

QPoly QPoly::shifted(long k) const {
  if (k < 0) throw std::invalid_argument("QPoly::shifted: negative shift");
  if (is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(k));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(out));
}

void QPoly::add_term(long k, const BigInt& c) {
  if (k < 0) throw std::invalid_argument("QPoly::add_term: negative exponent");
  if (static_cast<std::size_t>(k) >= coeffs_.size()) coeffs_.resize(static_cast<std::size_t>(k + 1));
  coeffs_[static_cast<std::size_t>(k)] += c;
  normalize();
}

namespace {

// Rows of the q-Pascal triangle, grown on demand:
//   [n, k] = [n-1, k-1] + t^k [n-1, k].
class QPascalTable {
 public:
  QPoly get(long n, long k) {
    std::lock_guard lock(mutex_);
    while (static_cast<long>(rows_.size()) <= n) extend();
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  void extend() {
    const long n = static_cast<long>(rows_.size());
    std::vector<QPoly> row(static_cast<std::size_t>(n + 1));
    row[0] = QPoly{1};
    row[static_cast<std::size_t>(n)] = QPoly{1};
    for (long k = 1; k < n; ++k) {
      const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
      row[static_cast<std::size_t>(k)] =
          prev[static_cast<std::size_t>(k - 1)] + prev[static_cast<std::size_t>(k)].shifted(k);
    }
    rows_.push_back(std::move(row));
  }

  std::mutex mutex_;
  std::vector<std::vector<QPoly>> rows_;
};

}  // namespace

QPoly qbinom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  static QPascalTable table;
  return table.get(n, k);
}

BigInt eval_at_one(const QPoly& p) {
  BigInt sum = 0;
  for (const auto& c : p.coeffs()) sum += c;
  return sum;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = 0; k <= p.degree(); ++k) {
    BigInt c = p.coeff(k);
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    BigInt a = abs(c);
    if (k == 0 || a != 1) out += a.get_str();
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace weylmod
