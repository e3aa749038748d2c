#include "weylmod/basisenum.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace weylmod {

namespace {

std::string describe(const BasisElement& b) {
  std::ostringstream os;
  os << "{";
  for (int j = 1; j <= b.rank(); ++j) {
    for (int i = 1; i <= j; ++i) {
      const auto& f = b.factor(i, j);
      if (f.length == 0) continue;
      os << " (" << i << "," << j << "):l=" << f.length << ",s=[";
      for (std::size_t k = 0; k < f.exponents.size(); ++k) os << (k ? "," : "") << f.exponents[k];
      os << "]";
    }
  }
  os << " }";
  return os.str();
}

}  // namespace

// --- PbwFactor -------------------------------------------------------------

Coord PbwFactor::degree() const { return std::accumulate(exponents.begin(), exponents.end(), Coord{0}); }

bool PbwFactor::well_formed() const {
  if (length < 0 || exponents.size() != static_cast<std::size_t>(length)) return false;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] < 0) return false;
    if (k > 0 && exponents[k] < exponents[k - 1]) return false;
  }
  return true;
}

bool PbwFactor::in_F(Coord m) const {
  if (m < 0 || !well_formed()) return false;
  if (length == 0) return true;
  return exponents.back() <= m - length;
}

bool next_colex(std::vector<Coord>& tuple, Coord max_entry) {
  const std::size_t n = tuple.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Coord cap = k + 1 < n ? tuple[k + 1] : max_entry;
    if (tuple[k] < cap) {
      ++tuple[k];
      std::fill(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(k), Coord{0});
      return true;
    }
  }
  return false;
}

std::vector<PbwFactor> enum_F(Coord m) {
  std::vector<PbwFactor> out;
  for_each_F(m, [&](const PbwFactor& f) { out.push_back(f); });
  return out;
}

// --- arrays ----------------------------------------------------------------

RootVector EllArray::root_content() const {
  RootVector root(rank_);
  for (int j = 1; j <= rank_; ++j)
    for (int i = 1; i <= j; ++i)
      if ((*this)(i, j) != 0) root += (*this)(i, j) * RootVector::positive_root(rank_, i, j);
  return root;
}

Coord column_bound(const EllArray& ell, const DominantWeight& lambda, int i, int j) {
  const int r = ell.rank();
  Coord bound = lambda[i];
  for (int s = j + 1; s <= r; ++s) {
    if (i + 1 <= s) bound += ell(i + 1, s);
    bound -= ell(i, s);
  }
  return bound;
}

EllArray BasisElement::ell_array() const {
  EllArray ell(rank_);
  for (int j = 1; j <= rank_; ++j)
    for (int i = 1; i <= j; ++i) ell(i, j) = factor(i, j).length;
  return ell;
}

Coord BasisElement::grade() const {
  Coord g = 0;
  for (const auto& f : factors_) g += f.degree();
  return g;
}

WeightVector BasisElement::weight(const DominantWeight& lambda) const {
  require_same_rank(rank_, lambda.rank(), "basis element weight");
  return lambda.weight() - root_to_weight(ell_array().root_content());
}

bool is_admissible(const BasisElement& b, const DominantWeight& lambda) {
  require_same_rank(b.rank(), lambda.rank(), "admissibility");
  const EllArray ell = b.ell_array();
  for (int j = 1; j <= b.rank(); ++j) {
    for (int i = 1; i <= j; ++i) {
      const PbwFactor& f = b.factor(i, j);
      if (!f.well_formed()) return false;
      if (f.length == 0) continue;
      if (f.exponents.back() > column_bound(ell, lambda, i, j) - f.length) return false;
    }
  }
  return true;
}

bool is_admissible_shifted(const BasisElement& b, const DominantWeight& lambda) {
  const int r = b.rank();
  require_same_rank(r, lambda.rank(), "admissibility");
  WeightVector shifted = lambda.weight();
  for (int j = r; j >= 1; --j) {
    for (int i = 1; i <= j; ++i) {
      if (!b.factor(i, j).in_F(shifted[i])) return false;
    }
    // eta_j(l_j) = sum_i l_{i,j} alpha_{i,j}
    RootVector eta(r);
    for (int i = 1; i <= j; ++i) eta += b.ell(i, j) * RootVector::positive_root(r, i, j);
    shifted -= root_to_weight(eta);
  }
  return true;
}

bool is_feasible_ell(const EllArray& ell, const DominantWeight& lambda) {
  require_same_rank(ell.rank(), lambda.rank(), "l-array feasibility");
  for (int j = 1; j <= ell.rank(); ++j)
    for (int i = 1; i <= j; ++i)
      if (ell(i, j) < 0 || column_bound(ell, lambda, i, j) - ell(i, j) < 0) return false;
  return true;
}

// --- enumeration -----------------------------------------------------------

BasisEnumerator::BasisEnumerator(DominantWeight lambda) : lambda_(std::move(lambda)) {
  const int r = lambda_.rank();
  for (int j = r; j >= 1; --j)
    for (int i = 1; i <= j; ++i) positions_.emplace_back(i, j);
}

BasisEnumerator::State BasisEnumerator::initial_state() const {
  return State{BasisElement(lambda_.rank()), std::vector<Coord>(static_cast<std::size_t>(lambda_.rank() + 2), 0)};
}

std::uint64_t BasisEnumerator::count(unsigned threads) const {
  return parallel_reduce(
      threads, std::uint64_t{0}, [](std::uint64_t& n, const BasisElement&) { ++n; },
      [](std::uint64_t& a, std::uint64_t b) { a += b; });
}

std::vector<BasisElement> BasisEnumerator::collect() const {
  std::vector<BasisElement> out;
  for_each([&](const BasisElement& b) { out.push_back(b); });
  return out;
}

BigInt count_basis(const DominantWeight& lambda) {
  const int r = lambda.rank();
  BigInt total = 1;
  for (int i = 1; i <= r; ++i) {
    total *= power(binomial(static_cast<unsigned long>(r + 1), static_cast<unsigned long>(i)),
                   static_cast<unsigned long>(lambda[i]));
  }
  return total;
}

std::vector<EllArray> enum_V_basis(const DominantWeight& lambda) {
  std::vector<EllArray> out;
  for_each_feasible_ell(lambda, [&](const EllArray& ell) { out.push_back(ell); });
  return out;
}

// --- recursion -------------------------------------------------------------

BasisElement strip_last_column(const BasisElement& b) {
  const int r = b.rank();
  if (r < 2) throw std::invalid_argument("strip_last_column: rank must be at least 2");
  BasisElement out(r - 1);
  for (int j = 1; j <= r - 1; ++j)
    for (int i = 1; i <= j; ++i) out.factor(i, j) = b.factor(i, j);
  return out;
}

WeightVector shifted_weight_after_last_column(const DominantWeight& lambda, const std::vector<Coord>& column_ells) {
  const int r = lambda.rank();
  if (static_cast<int>(column_ells.size()) != r) throw std::invalid_argument("column length must equal rank");
  RootVector eta(r);
  for (int i = 1; i <= r; ++i) eta += column_ells[static_cast<std::size_t>(i - 1)] * RootVector::positive_root(r, i, r);
  const WeightVector full = lambda.weight() - root_to_weight(eta);
  const auto c = full.coords();
  return WeightVector(std::vector<Coord>(c.begin(), c.end() - 1));
}

RecursionReport check_recursion(const DominantWeight& lambda) {
  const int r = lambda.rank();
  if (r < 2) throw std::invalid_argument("check_recursion: rank must be at least 2");

  RecursionReport report;
  auto fail = [&](std::string why) {
    if (report.holds) {
      report.holds = false;
      report.counterexample = std::move(why);
    }
  };

  using Column = std::vector<PbwFactor>;
  std::map<Column, std::uint64_t> per_column;
  std::set<BasisElement> seen;

  BasisEnumerator(lambda).for_each([&](const BasisElement& b) {
    ++report.basis_size;
    if (!seen.insert(b).second) fail("duplicate element " + describe(b));
    Column column;
    std::vector<Coord> ells;
    for (int i = 1; i <= r; ++i) {
      column.push_back(b.factor(i, r));
      ells.push_back(b.ell(i, r));
      if (!b.factor(i, r).in_F(lambda[i])) fail("last column not in F^r(lambda) for " + describe(b));
    }
    const WeightVector rest_weight = shifted_weight_after_last_column(lambda, ells);
    if (!rest_weight.is_dominant()) {
      fail("shifted weight " + to_string(rest_weight) + " not dominant for " + describe(b));
    } else if (!is_admissible(strip_last_column(b), DominantWeight(rest_weight))) {
      fail("stripped element not in B^{r-1}(" + to_string(rest_weight) + ") for " + describe(b));
    }
    ++per_column[column];
  });

  // Every column of F^r(lambda) must occur, each exactly |B^{r-1}(shifted)| times.
  std::uint64_t cover_total = 0;
  Column column(static_cast<std::size_t>(r));
  auto walk = [&](auto&& self, int i) -> void {
    if (i > r) {
      ++report.column_count;
      std::vector<Coord> ells;
      for (const auto& f : column) ells.push_back(f.length);
      const DominantWeight rest(shifted_weight_after_last_column(lambda, ells));
      const std::uint64_t expected = BasisEnumerator(rest).count();
      cover_total += expected;
      const auto it = per_column.find(column);
      const std::uint64_t got = it == per_column.end() ? 0 : it->second;
      if (got != expected) {
        fail("column with l=" + to_string(WeightVector(ells)) + " covers " + std::to_string(got) +
             " elements, expected " + std::to_string(expected));
      }
      auto& mult = report.column_multiplicities[ells];
      if (mult.first == 0) {
        BigInt product = 1;
        for (int k = 1; k <= r; ++k)
          product *= binomial(static_cast<unsigned long>(lambda[k]), static_cast<unsigned long>(ells[static_cast<std::size_t>(k - 1)]));
        mult.second = product;
      }
      ++mult.first;
      return;
    }
    for_each_F(lambda[i], [&](const PbwFactor& f) {
      column[static_cast<std::size_t>(i - 1)] = f;
      self(self, i + 1);
    });
  };
  walk(walk, 1);

  if (per_column.size() != report.column_count) fail("enumeration produced a column outside F^r(lambda)");
  if (cover_total != report.basis_size) {
    fail("cover has " + std::to_string(cover_total) + " elements, basis has " + std::to_string(report.basis_size));
  }
  for (const auto& [ells, mult] : report.column_multiplicities) {
    if (BigInt(static_cast<unsigned long>(mult.first)) != mult.second) {
      fail("column multiplicity for l=" + to_string(WeightVector(ells)) + " is " + std::to_string(mult.first) +
           ", expected " + mult.second.get_str());
    }
  }
  return report;
}

}  // namespace weylmod
