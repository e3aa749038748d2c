#include "weylmod/charring.hpp"

#include <algorithm>
#include <stdexcept>

#include "weylmod/basisenum.hpp"

namespace weylmod {

// --- ClassicalCharacter ----------------------------------------------------

void ClassicalCharacter::add(const WeightVector& mu, const BigInt& mult) {
  require_same_rank(rank_, mu.rank(), "character entry");
  if (mult == 0) return;
  auto [it, inserted] = table_.try_emplace(mu, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) table_.erase(it);
  }
}

BigInt ClassicalCharacter::multiplicity(const WeightVector& mu) const {
  const auto it = table_.find(mu);
  return it == table_.end() ? BigInt(0) : it->second;
}

BigInt ClassicalCharacter::mass() const {
  BigInt total = 0;
  for (const auto& [mu, m] : table_) total += m;
  return total;
}

bool ClassicalCharacter::is_weyl_symmetric() const {
  for (int i = 1; i <= rank_; ++i) {
    for (const auto& [mu, m] : table_) {
      if (multiplicity(simple_reflection(i, mu)) != m) return false;
    }
  }
  return true;
}

ClassicalCharacter& ClassicalCharacter::operator+=(const ClassicalCharacter& other) {
  require_same_rank(rank_, other.rank_, "character sum");
  for (const auto& [mu, m] : other.table_) add(mu, m);
  return *this;
}

ClassicalCharacter& ClassicalCharacter::operator-=(const ClassicalCharacter& other) {
  require_same_rank(rank_, other.rank_, "character difference");
  for (const auto& [mu, m] : other.table_) add(mu, -m);
  return *this;
}

ClassicalCharacter operator*(const BigInt& c, const ClassicalCharacter& ch) {
  ClassicalCharacter out(ch.rank_);
  if (c == 0) return out;
  for (const auto& [mu, m] : ch.table_) out.table_.emplace(mu, c * m);
  return out;
}

ClassicalCharacter operator*(const ClassicalCharacter& a, const ClassicalCharacter& b) {
  require_same_rank(a.rank_, b.rank_, "character product");
  ClassicalCharacter out(a.rank_);
  for (const auto& [mu, m] : a.table_)
    for (const auto& [nu, n] : b.table_) out.add(mu + nu, m * n);
  return out;
}

// --- GradedCharacter -------------------------------------------------------

GradedCharacter GradedCharacter::from_classical(const ClassicalCharacter& ch) {
  GradedCharacter out(ch.rank());
  for (const auto& [mu, m] : ch.table()) out.add(mu, QPoly::constant(m));
  return out;
}

void GradedCharacter::add(const WeightVector& mu, const QPoly& p) {
  require_same_rank(rank_, mu.rank(), "character entry");
  if (p.is_zero()) return;
  auto [it, inserted] = table_.try_emplace(mu, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) table_.erase(it);
  }
}

QPoly GradedCharacter::at(const WeightVector& mu) const {
  const auto it = table_.find(mu);
  return it == table_.end() ? QPoly{} : it->second;
}

ClassicalCharacter GradedCharacter::slice(long degree) const {
  ClassicalCharacter out(rank_);
  for (const auto& [mu, p] : table_) out.add(mu, p.coeff(degree));
  return out;
}

ClassicalCharacter GradedCharacter::at_one() const {
  ClassicalCharacter out(rank_);
  for (const auto& [mu, p] : table_) out.add(mu, eval_at_one(p));
  return out;
}

long GradedCharacter::top_degree() const {
  long top = -1;
  for (const auto& [mu, p] : table_) top = std::max(top, p.degree());
  return top;
}

BigInt GradedCharacter::mass() const {
  BigInt total = 0;
  for (const auto& [mu, p] : table_) total += eval_at_one(p);
  return total;
}

bool GradedCharacter::has_nonnegative_coeffs() const {
  return std::all_of(table_.begin(), table_.end(), [](const auto& e) { return e.second.has_nonnegative_coeffs(); });
}

bool GradedCharacter::is_weyl_symmetric() const {
  for (long d = 0; d <= top_degree(); ++d) {
    if (!slice(d).is_weyl_symmetric()) return false;
  }
  return true;
}

// --- GT patterns -----------------------------------------------------------

bool GTPattern::is_valid() const {
  if (rows.empty()) return false;
  const std::size_t n = rows.front().size();
  if (rows.size() != n) return false;
  for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
    const auto& upper = rows[k];
    const auto& lower = rows[k + 1];
    if (upper.size() != n - k || lower.size() != n - k - 1) return false;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (!(upper[i] >= lower[i] && lower[i] >= upper[i + 1])) return false;
    }
  }
  return true;
}

std::vector<Coord> GTPattern::gl_weight() const {
  const std::size_t n = rows.size();
  std::vector<Coord> sums(n + 1, 0);  // sums[k] = sum of the row of length k
  for (const auto& row : rows) {
    Coord s = 0;
    for (Coord x : row) s += x;
    sums[row.size()] = s;
  }
  std::vector<Coord> w(n);
  for (std::size_t k = 1; k <= n; ++k) w[k - 1] = sums[k] - sums[k - 1];
  return w;
}

WeightVector GTPattern::weight() const {
  const auto w = gl_weight();
  WeightVector mu(static_cast<int>(w.size()) - 1);
  for (int i = 1; i <= mu.rank(); ++i) mu[i] = w[static_cast<std::size_t>(i - 1)] - w[static_cast<std::size_t>(i)];
  return mu;
}

ClassicalCharacter classical_character(const DominantWeight& lambda) {
  ClassicalCharacter out(lambda.rank());
  const Partition xi = weight_to_partition(lambda);
  std::vector<Coord> top(xi.parts().begin(), xi.parts().end());
  for_each_gt_pattern(top, [&](const GTPattern& p) { out.add(p.weight(), 1); });
  return out;
}

BigInt weyl_dim(const DominantWeight& lambda) {
  const int r = lambda.rank();
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 1; i <= r; ++i) {
    Coord partial = 0;
    for (int j = i; j <= r; ++j) {
      partial += lambda[j];
      num *= BigInt(static_cast<long>(partial + j - i + 1));
      den *= BigInt(static_cast<long>(j - i + 1));
    }
  }
  return num / den;
}

// --- graded characters of W(lambda) ----------------------------------------

GradedCharacter fermionic_character(const DominantWeight& lambda) {
  const int r = lambda.rank();
  GradedCharacter out(r);
  std::vector<std::pair<int, int>> positions;
  for (int j = r; j >= 1; --j)
    for (int i = 1; i <= j; ++i) positions.emplace_back(i, j);

  EllArray ell(r);
  auto rec = [&](auto&& self, std::size_t pos, const QPoly& product) -> void {
    if (pos == positions.size()) {
      out.add(lambda.weight() - root_to_weight(ell.root_content()), product);
      return;
    }
    const auto [i, j] = positions[pos];
    // m_{i,j} involves only columns > j, all fixed at this point.
    const Coord m = column_bound(ell, lambda, i, j);
    for (Coord l = 0; l <= std::max<Coord>(m, 0); ++l) {
      const QPoly factor = qbinom(m, l);
      if (factor.is_zero()) continue;
      ell(i, j) = l;
      self(self, pos + 1, product * factor);
    }
    ell(i, j) = 0;
  };
  rec(rec, 0, QPoly{1});
  return out;
}

GradedCharacter character_from_basis(const DominantWeight& lambda, unsigned threads) {
  using Tally = std::map<std::pair<WeightVector, Coord>, std::uint64_t>;
  const Tally tally = BasisEnumerator(lambda).parallel_reduce(
      threads, Tally{}, [&](Tally& acc, const BasisElement& b) { ++acc[{b.weight(lambda), b.grade()}]; },
      [](Tally& acc, Tally&& part) {
        for (auto& [key, n] : part) acc[key] += n;
      });
  GradedCharacter out(lambda.rank());
  for (const auto& [key, n] : tally) out.add(key.first, QPoly::monomial(key.second, BigInt(static_cast<unsigned long>(n))));
  return out;
}

// --- decomposition ---------------------------------------------------------

namespace {

// Among weights with nonzero entry pick one that is maximal for the dominance
// order; ties between incomparable maxima go to the lexicographically largest.
WeightVector pick_maximal(const ClassicalCharacter& ch) {
  std::vector<WeightVector> maxima;
  for (const auto& [mu, m] : ch.table()) {
    bool dominated = false;
    for (const auto& [nu, n] : ch.table()) {
      if (nu != mu && dominance_geq(nu, mu)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maxima.push_back(mu);
  }
  return *std::max_element(maxima.begin(), maxima.end());
}

Partition lift_partition(const WeightVector& mu, std::optional<Coord> size) {
  const DominantWeight lambda(mu);
  const Partition base = weight_to_partition(lambda);
  if (!size) return base;
  const Coord n = static_cast<Coord>(lambda.rank() + 1);
  const Coord gap = *size - base.size();
  if (gap < 0 || gap % n != 0) {
    throw std::domain_error("weight " + to_string(mu) + " does not lift to a partition of size " +
                            std::to_string(*size));
  }
  std::vector<Coord> parts(base.parts().begin(), base.parts().end());
  for (auto& p : parts) p += gap / n;
  return Partition(std::move(parts));
}

}  // namespace

Decomposition decompose_graded(const GradedCharacter& ch, std::optional<Coord> partition_size) {
  Decomposition out;
  std::map<WeightVector, ClassicalCharacter> irreducibles;
  for (long d = 0; d <= ch.top_degree(); ++d) {
    ClassicalCharacter rest = ch.slice(d);
    while (!rest.empty()) {
      const WeightVector top = pick_maximal(rest);
      const BigInt c = rest.multiplicity(top);
      if (!partition_size && top.is_dominant()) partition_size = weight_to_partition(DominantWeight(top)).size();
      if (!top.is_dominant()) {
        throw std::domain_error("maximal weight " + to_string(top) + " in degree " + std::to_string(d) +
                                " is not dominant");
      }
      if (c < 0) {
        throw std::domain_error("negative coefficient " + c.get_str() + " for weight " + to_string(top) +
                                " in degree " + std::to_string(d));
      }
      auto it = irreducibles.find(top);
      if (it == irreducibles.end()) it = irreducibles.emplace(top, classical_character(DominantWeight(top))).first;
      rest -= c * it->second;
      out[lift_partition(top, partition_size)].add_term(d, c);
    }
  }
  return out;
}

GradedCharacter reconstruct(const Decomposition& decomposition, int rank) {
  GradedCharacter out(rank);
  for (const auto& [xi, poly] : decomposition) {
    const ClassicalCharacter irr = classical_character(partition_to_weight(xi, rank));
    for (const auto& [mu, m] : irr.table()) out.add(mu, m * poly);
  }
  return out;
}

// --- Kostka ----------------------------------------------------------------

Partition KostkaReading::shape_for(const DominantWeight& lambda, const Partition& xi) const {
  switch (shape) {
    case Shape::LambdaPartition: return weight_to_partition(lambda);
    case Shape::LambdaColumns: return transpose(weight_to_partition(lambda));
    case Shape::XiTranspose: return transpose(xi);
  }
  throw std::logic_error("unknown Kostka shape reading");
}

Partition KostkaReading::content_for(const DominantWeight& lambda, const Partition& xi) const {
  switch (content) {
    case Content::XiTranspose: return transpose(xi);
    case Content::LambdaPartition: return weight_to_partition(lambda);
    case Content::LambdaColumns: return transpose(weight_to_partition(lambda));
  }
  throw std::logic_error("unknown Kostka content reading");
}

QPoly KostkaReading::evaluate(const DominantWeight& lambda, const Partition& xi) const {
  return kostka(shape_for(lambda, xi), content_for(lambda, xi), statistic);
}

const std::vector<KostkaReading>& kostka_readings() {
  using S = KostkaReading::Shape;
  using C = KostkaReading::Content;
  using K = KostkaStatistic;
  // "columns" is the partition 1^{m_1} 2^{m_2} ... r^{m_r}, i.e. the transpose of xi^lambda.
  static const std::vector<KostkaReading> readings = {
      {"shape=xi^lambda,content=xi^tr,charge", S::LambdaPartition, C::XiTranspose, K::Charge},
      {"shape=xi^lambda,content=xi^tr,cocharge", S::LambdaPartition, C::XiTranspose, K::Cocharge},
      {"shape=columns(lambda),content=xi^tr,charge", S::LambdaColumns, C::XiTranspose, K::Charge},
      {"shape=columns(lambda),content=xi^tr,cocharge", S::LambdaColumns, C::XiTranspose, K::Cocharge},
      {"shape=xi^tr,content=xi^lambda,charge", S::XiTranspose, C::LambdaPartition, K::Charge},
      {"shape=xi^tr,content=xi^lambda,cocharge", S::XiTranspose, C::LambdaPartition, K::Cocharge},
      {"shape=xi^tr,content=columns(lambda),charge", S::XiTranspose, C::LambdaColumns, K::Charge},
      {"shape=xi^tr,content=columns(lambda),cocharge", S::XiTranspose, C::LambdaColumns, K::Cocharge},
  };
  return readings;
}

const KostkaReading& selected_kostka_reading() { return kostka_readings()[6]; }

bool KostkaReport::selected_matches() const {
  return highest_coefficient_is_one && matches(selected_kostka_reading().name);
}

bool KostkaReport::matches(const std::string& reading) const {
  return std::find(matching_readings.begin(), matching_readings.end(), reading) != matching_readings.end();
}

KostkaReport verify_kostka(const DominantWeight& lambda) {
  KostkaReport report;
  report.lambda = lambda;
  const Partition xi_lambda = weight_to_partition(lambda);
  const Coord size = xi_lambda.size();
  report.decomposition = decompose_graded(fermionic_character(lambda), size);

  const auto top = report.decomposition.find(xi_lambda);
  report.highest_coefficient_is_one = top != report.decomposition.end() && top->second == QPoly{1};

  const auto candidates = partitions_of(size, static_cast<std::size_t>(lambda.rank() + 1));
  for (const auto& reading : kostka_readings()) {
    bool ok = true;
    for (const auto& xi : candidates) {
      const auto it = report.decomposition.find(xi);
      const QPoly got = it == report.decomposition.end() ? QPoly{} : it->second;
      const QPoly want = reading.evaluate(lambda, xi);
      if (got != want) {
        report.mismatches[reading.name] = "xi=" + to_string(xi) + ": decomposition " + to_string(got) +
                                          ", Kostka " + to_string(want);
        ok = false;
        break;
      }
    }
    if (ok) report.matching_readings.push_back(reading.name);
  }
  return report;
}

DemazureReport verify_demazure_factorization(const DominantWeight& lambda) {
  const int r = lambda.rank();
  DemazureReport report;
  report.at_one = fermionic_character(lambda).at_one();
  ClassicalCharacter product(r);
  product.add(WeightVector(r), 1);
  for (int i = 1; i <= r; ++i) {
    const ClassicalCharacter fundamental = classical_character(DominantWeight::fundamental(r, i));
    for (Coord k = 0; k < lambda[i]; ++k) product = product * fundamental;
  }
  report.tensor_product = std::move(product);
  report.holds = report.at_one == report.tensor_product;
  return report;
}

}  // namespace weylmod
