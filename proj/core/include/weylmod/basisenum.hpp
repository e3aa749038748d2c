#pragma once

// Enumeration of the PBW-type basis of the Weyl module W(lambda) for the
// current algebra sl_{r+1}[t].
//
// A basis element is a triangular array of factors (l_{i,j}, s_{i,j}),
// 1 <= i <= j <= r, standing for the monomial
//   prod_{j=1..r} prod_{i=1..j} (x^-_{i,j} t^{s_{i,j}(1)}) ... (x^-_{i,j} t^{s_{i,j}(l)})
// with each s_{i,j} weakly increasing. It lies in B^r(lambda) iff for all
// (i,j) either l_{i,j} = 0 or
//   s_{i,j}(l_{i,j}) <= m_i + sum_{s>j} l_{i+1,s} - sum_{s>=j} l_{i,s}.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "weylmod/lattice.hpp"
#include "weylmod/numbers.hpp"

namespace weylmod {

/// (l, s): a power x^l of one root vector with t-exponents s(1) <= ... <= s(l).
struct PbwFactor {
  Coord length = 0;
  std::vector<Coord> exponents;

  /// Sum of the exponents.
  Coord degree() const;
  /// Well-formed: exponents has the stated length, is weakly increasing and
  /// non-negative.
  bool well_formed() const;
  /// Membership in F(m): l = 0, or 0 <= s(i) <= m - l for all i. F(m) is
  /// empty for m < 0.
  bool in_F(Coord m) const;

  friend bool operator==(const PbwFactor&, const PbwFactor&) = default;
  friend auto operator<=>(const PbwFactor&, const PbwFactor&) = default;
};

/// Storage for an array indexed by 1 <= i <= j <= r, column by column.
inline std::size_t triangular_size(int rank) { return static_cast<std::size_t>(rank * (rank + 1) / 2); }
inline std::size_t triangular_index(int i, int j) { return static_cast<std::size_t>((j - 1) * j / 2 + (i - 1)); }

/// Triangular array of non-negative integers (l_{i,j}).
class EllArray {
 public:
  EllArray() = default;
  explicit EllArray(int rank) : rank_(rank), values_(triangular_size(rank), 0) {}

  int rank() const { return rank_; }
  Coord operator()(int i, int j) const { return values_[triangular_index(i, j)]; }
  Coord& operator()(int i, int j) { return values_[triangular_index(i, j)]; }

  /// sum l_{i,j} alpha_{i,j}
  RootVector root_content() const;

  friend bool operator==(const EllArray&, const EllArray&) = default;
  friend auto operator<=>(const EllArray&, const EllArray&) = default;

 private:
  int rank_ = 0;
  std::vector<Coord> values_;
};

/// m_{i,j} = m_i + sum_{s>j} (l_{i+1,s} - l_{i,s}); l_{a,b} with a > b reads 0.
Coord column_bound(const EllArray& ell, const DominantWeight& lambda, int i, int j);

class BasisElement {
 public:
  BasisElement() = default;
  explicit BasisElement(int rank) : rank_(rank), factors_(triangular_size(rank)) {}

  int rank() const { return rank_; }
  const PbwFactor& factor(int i, int j) const { return factors_[triangular_index(i, j)]; }
  PbwFactor& factor(int i, int j) { return factors_[triangular_index(i, j)]; }
  Coord ell(int i, int j) const { return factor(i, j).length; }

  EllArray ell_array() const;
  /// Total t-degree s(b).
  Coord grade() const;
  /// mu(b) = lambda - sum l_{i,j} alpha_{i,j}.
  WeightVector weight(const DominantWeight& lambda) const;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;

 private:
  int rank_ = 0;
  std::vector<PbwFactor> factors_;
};

/// Admissibility in the explicit per-entry form.
bool is_admissible(const BasisElement& b, const DominantWeight& lambda);

/// Admissibility checked column by column against the shifted weight
///   (l_j, s_j) in F^j(lambda - sum_{s>j} eta_s(l_s)),
/// computed with lattice arithmetic. Must agree with is_admissible.
bool is_admissible_shifted(const BasisElement& b, const DominantWeight& lambda);

/// The l-array condition m_{i,j} - l_{i,j} >= 0 for all (i,j) (grade-zero
/// slice of the basis).
bool is_feasible_ell(const EllArray& ell, const DominantWeight& lambda);

/// Advance a weakly increasing tuple with entries in [0, max_entry] to its
/// successor in colex order. Returns false after the last tuple.
bool next_colex(std::vector<Coord>& tuple, Coord max_entry);

/// Visit every member of F(m) in order of increasing l, colex within l.
template <class Visitor>
void for_each_F(Coord m, Visitor&& visit) {
  if (m < 0) return;
  PbwFactor f;
  for (Coord l = 0; l <= m; ++l) {
    f.length = l;
    f.exponents.assign(static_cast<std::size_t>(l), 0);
    do {
      visit(static_cast<const PbwFactor&>(f));
    } while (next_colex(f.exponents, m - l));
  }
}

std::vector<PbwFactor> enum_F(Coord m);

/// Depth-first enumerator for B^r(lambda).
///
/// Positions are filled column by column from j = r down to j = 1, rows in
/// increasing order within a column. The bound for (i,j) only involves
/// entries of columns >= j in rows i and i+1, all of which are already fixed
/// when (i,j) is reached, so every partial assignment extends to at least
/// one element and no backtracking on failure is needed.
class BasisEnumerator {
 public:
  explicit BasisEnumerator(DominantWeight lambda);

  const DominantWeight& lambda() const { return lambda_; }

  /// Deterministic single-threaded traversal.
  template <class Visitor>
  void for_each(Visitor&& visit) const {
    State state = initial_state();
    descend(0, positions_.size(), state, visit);
  }

  /// Split the traversal over the choices for column r and fold each subtree
  /// into its own accumulator; merge order is unspecified.
  template <class Acc, class Visit, class Merge>
  Acc parallel_reduce(unsigned threads, Acc init, Visit visit, Merge merge) const;

  std::uint64_t count(unsigned threads = 1) const;
  std::vector<BasisElement> collect() const;

 private:
  struct State {
    BasisElement element;
    std::vector<Coord> row_sums;  // sum of l_{i,s} already chosen in row i; index r+1 stays 0
  };

  struct PrefixSink {
    std::vector<State>* out;
  };

  State initial_state() const;

  template <class Visitor>
  void descend(std::size_t pos, std::size_t stop, State& state, Visitor& visit) const {
    if (pos == stop) {
      if constexpr (std::is_same_v<std::remove_cvref_t<Visitor>, PrefixSink>) {
        visit.out->push_back(state);
      } else {
        visit(static_cast<const BasisElement&>(state.element));
      }
      return;
    }
    const auto [i, j] = positions_[pos];
    const auto iu = static_cast<std::size_t>(i);
    const Coord bound = lambda_[i] + state.row_sums[iu + 1] - state.row_sums[iu];
    PbwFactor& f = state.element.factor(i, j);
    for (Coord l = 0; l <= bound; ++l) {
      f.length = l;
      f.exponents.assign(static_cast<std::size_t>(l), 0);
      state.row_sums[iu] += l;
      do {
        descend(pos + 1, stop, state, visit);
      } while (next_colex(f.exponents, bound - l));
      state.row_sums[iu] -= l;
    }
    f = PbwFactor{};
  }

  DominantWeight lambda_;
  std::vector<std::pair<int, int>> positions_;
};

template <class Acc, class Visit, class Merge>
Acc BasisEnumerator::parallel_reduce(unsigned threads, Acc init, Visit visit, Merge merge) const {
  const std::size_t split = static_cast<std::size_t>(lambda_.rank());
  if (threads <= 1) {
    Acc acc = std::move(init);
    auto fold = [&](const BasisElement& b) { visit(acc, b); };
    for_each(fold);
    return acc;
  }
  std::vector<State> prefixes;
  {
    State s = initial_state();
    PrefixSink keep{&prefixes};
    descend(0, split, s, keep);
  }
  std::vector<Acc> partial(threads, init);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      Acc& acc = partial[t];
      auto fold = [&](const BasisElement& b) { visit(acc, b); };
      for (std::size_t k = next++; k < prefixes.size(); k = next++) {
        State st = prefixes[k];
        descend(split, positions_.size(), st, fold);
      }
    });
  }
  for (auto& th : pool) th.join();
  Acc acc = std::move(init);
  for (auto& p : partial) merge(acc, std::move(p));
  return acc;
}

/// Closed form prod_i binomial(r+1, i)^{m_i}.
BigInt count_basis(const DominantWeight& lambda);

/// Visit every l-array satisfying is_feasible_ell, in the same position
/// order as BasisEnumerator.
template <class Visitor>
void for_each_feasible_ell(const DominantWeight& lambda, Visitor&& visit) {
  const int r = lambda.rank();
  std::vector<std::pair<int, int>> positions;
  for (int j = r; j >= 1; --j)
    for (int i = 1; i <= j; ++i) positions.emplace_back(i, j);
  EllArray ell(r);
  std::vector<Coord> row_sums(static_cast<std::size_t>(r + 2), 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == positions.size()) {
      visit(static_cast<const EllArray&>(ell));
      return;
    }
    const auto [i, j] = positions[pos];
    const auto iu = static_cast<std::size_t>(i);
    const Coord bound = lambda[i] + row_sums[iu + 1] - row_sums[iu];
    for (Coord l = 0; l <= bound; ++l) {
      ell(i, j) = l;
      row_sums[iu] += l;
      self(self, pos + 1);
      row_sums[iu] -= l;
    }
    ell(i, j) = 0;
  };
  rec(rec, 0);
}

/// The basis of V(lambda) indexed by feasible l-arrays.
std::vector<EllArray> enum_V_basis(const DominantWeight& lambda);

struct RecursionReport {
  bool holds = true;
  std::string counterexample;
  std::uint64_t basis_size = 0;
  /// Number of distinct last columns, i.e. |F^r(lambda)|.
  std::uint64_t column_count = 0;
  /// For each l-vector (l_{1,r}, ..., l_{r,r}): number of last columns with
  /// that l-vector, and prod_i binomial(m_i, l_i).
  std::map<std::vector<Coord>, std::pair<std::uint64_t, BigInt>> column_multiplicities;
};

/// Check that stripping the last column of every element of B^r(lambda)
/// gives an element of B^{r-1}(lambda - eta_r(l)) and that the resulting
/// decomposition is a disjoint exhaustive cover. Requires rank >= 2.
RecursionReport check_recursion(const DominantWeight& lambda);

/// Restrict an element to columns 1..r-1 as a rank r-1 element.
BasisElement strip_last_column(const BasisElement& b);

/// lambda - eta_r(l) restricted to rank r-1, for the l-vector of column r.
WeightVector shifted_weight_after_last_column(const DominantWeight& lambda, const std::vector<Coord>& column_ells);

}  // namespace weylmod
