#include "weylmod/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace weylmod {

namespace {

void require_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
}

void require_index(int i, int rank, std::string_view what) {
  if (i < 1 || i > rank) {
    throw std::invalid_argument(std::string(what) + ": index " + std::to_string(i) +
                                " out of range for rank " + std::to_string(rank));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<Coord> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<Coord> out;
  text = trim(text);
  if (text.empty()) throw std::invalid_argument(std::string(what) + ": empty input");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    Coord value = 0;
    const auto* first = item.data();
    const auto* last = item.data() + item.size();
    if (!item.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc() || ptr != last) {
      throw std::invalid_argument(std::string(what) + ": cannot parse '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

void require_same_rank(int a, int b, std::string_view what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": rank mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

// --- WeightVector ----------------------------------------------------------

WeightVector::WeightVector(int rank) : coords_(static_cast<std::size_t>(rank), 0) { require_rank(rank); }

WeightVector::WeightVector(std::vector<Coord> coords) : coords_(std::move(coords)) {
  require_rank(static_cast<int>(coords_.size()));
}

WeightVector::WeightVector(std::initializer_list<Coord> coords) : WeightVector(std::vector<Coord>(coords)) {}

bool WeightVector::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c >= 0; });
}

bool WeightVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

WeightVector& WeightVector::operator+=(const WeightVector& other) {
  require_same_rank(rank(), other.rank(), "weight addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& other) {
  require_same_rank(rank(), other.rank(), "weight subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

WeightVector operator*(Coord k, WeightVector a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

// --- RootVector ------------------------------------------------------------

RootVector::RootVector(int rank) : coords_(static_cast<std::size_t>(rank), 0) { require_rank(rank); }

RootVector::RootVector(std::vector<Coord> coords) : coords_(std::move(coords)) {
  require_rank(static_cast<int>(coords_.size()));
}

RootVector::RootVector(std::initializer_list<Coord> coords) : RootVector(std::vector<Coord>(coords)) {}

RootVector RootVector::positive_root(int rank, int i, int j) {
  require_index(i, rank, "positive_root");
  require_index(j, rank, "positive_root");
  if (i > j) throw std::invalid_argument("positive_root: need i <= j");
  RootVector root(rank);
  for (int k = i; k <= j; ++k) root[k] = 1;
  return root;
}

bool RootVector::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c >= 0; });
}

RootVector& RootVector::operator+=(const RootVector& other) {
  require_same_rank(rank(), other.rank(), "root addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& other) {
  require_same_rank(rank(), other.rank(), "root subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

RootVector operator*(Coord k, RootVector a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

// --- DominantWeight --------------------------------------------------------

DominantWeight::DominantWeight(std::vector<Coord> m) : DominantWeight(WeightVector(std::move(m))) {}

DominantWeight::DominantWeight(std::initializer_list<Coord> m) : DominantWeight(std::vector<Coord>(m)) {}

DominantWeight::DominantWeight(const WeightVector& w) : weight_(w) {
  if (!w.is_dominant()) throw std::invalid_argument("weight " + to_string(w) + " is not dominant");
}

DominantWeight DominantWeight::fundamental(int rank, int i) {
  require_rank(rank);
  require_index(i, rank, "fundamental weight");
  WeightVector w(rank);
  w[i] = 1;
  return DominantWeight(w);
}

DominantWeight DominantWeight::zero(int rank) { return DominantWeight(WeightVector(rank)); }

Coord DominantWeight::level() const {
  const auto c = weight_.coords();
  return std::accumulate(c.begin(), c.end(), Coord{0});
}

// --- Partition -------------------------------------------------------------

Partition::Partition(std::vector<Coord> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<Coord> parts) : Partition(std::vector<Coord>(parts)) {}

Coord Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), Coord{0}); }

std::size_t Partition::num_nonzero() const {
  return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](Coord p) { return p > 0; }));
}

Partition Partition::trimmed() const {
  return Partition(std::vector<Coord>(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(num_nonzero())));
}

Partition Partition::padded(std::size_t len) const {
  if (num_nonzero() > len) throw std::invalid_argument("partition has more than " + std::to_string(len) + " parts");
  std::vector<Coord> out(len, 0);
  std::copy_n(parts_.begin(), std::min(len, parts_.size()), out.begin());
  return Partition(std::move(out));
}

Coord Partition::weighted_size() const {
  Coord n = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) n += static_cast<Coord>(i) * parts_[i];
  return n;
}

bool Partition::dominates(const Partition& other) const {
  if (size() != other.size()) return false;
  const std::size_t len = std::max(length(), other.length());
  Coord a = 0;
  Coord b = 0;
  for (std::size_t i = 1; i <= len; ++i) {
    a += (*this)[i];
    b += other[i];
    if (a < b) return false;
  }
  return true;
}

bool operator==(const Partition& a, const Partition& b) {
  const std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 1; i <= len; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  const std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 1; i <= len; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<Partition> partitions_of(Coord n, std::size_t max_parts) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<Coord> cur;
  // Depth-first with parts bounded by the previous part.
  auto rec = [&](auto&& self, Coord remaining, Coord max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (cur.size() == max_parts) return;
    for (Coord p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// --- conversions -----------------------------------------------------------

int cartan_entry(int i, int j) {
  if (i == j) return 2;
  if (i - j == 1 || j - i == 1) return -1;
  return 0;
}

WeightVector root_to_weight(const RootVector& root) {
  const int r = root.rank();
  WeightVector w(r);
  for (int i = 1; i <= r; ++i) {
    Coord c = 2 * root[i];
    if (i > 1) c -= root[i - 1];
    if (i < r) c -= root[i + 1];
    w[i] = c;
  }
  return w;
}

std::optional<RootVector> weight_to_root(const WeightVector& weight) {
  // (A^{-1})_{ij} = min(i,j) (r+1-max(i,j)) / (r+1) for type A_r.
  const int r = weight.rank();
  RootVector root(r);
  for (int i = 1; i <= r; ++i) {
    Coord num = 0;
    for (int j = 1; j <= r; ++j) {
      num += static_cast<Coord>(std::min(i, j)) * (r + 1 - std::max(i, j)) * weight[j];
    }
    if (num % (r + 1) != 0) return std::nullopt;
    root[i] = num / (r + 1);
  }
  return root;
}

bool dominance_geq(const WeightVector& mu, const WeightVector& nu) {
  require_same_rank(mu.rank(), nu.rank(), "dominance order");
  const auto diff = weight_to_root(mu - nu);
  return diff && diff->is_nonnegative();
}

Partition weight_to_partition(const DominantWeight& lambda) {
  const int r = lambda.rank();
  std::vector<Coord> parts(static_cast<std::size_t>(r + 1), 0);
  Coord running = 0;
  for (int i = r; i >= 1; --i) {
    running += lambda[i];
    parts[static_cast<std::size_t>(i - 1)] = running;
  }
  return Partition(std::move(parts));
}

DominantWeight partition_to_weight(const Partition& xi, int rank) {
  require_rank(rank);
  const auto r1 = static_cast<std::size_t>(rank + 1);
  if (xi.num_nonzero() > r1) {
    throw std::invalid_argument("partition too long for rank " + std::to_string(rank) + ": " + to_string(xi));
  }
  WeightVector w(rank);
  for (int i = 1; i <= rank; ++i) {
    w[i] = xi[static_cast<std::size_t>(i)] - xi[static_cast<std::size_t>(i + 1)];
  }
  return DominantWeight(w);
}

Partition transpose(const Partition& xi) {
  const Coord first = xi[1];
  std::vector<Coord> out(static_cast<std::size_t>(first), 0);
  for (Coord col = 1; col <= first; ++col) {
    Coord count = 0;
    for (std::size_t i = 1; i <= xi.length(); ++i) {
      if (xi[i] >= col) ++count;
    }
    out[static_cast<std::size_t>(col - 1)] = count;
  }
  return Partition(std::move(out));
}

WeightVector simple_reflection(int i, const WeightVector& mu) {
  require_index(i, mu.rank(), "simple_reflection");
  const Coord pairing = mu[i];
  return mu - pairing * root_to_weight(RootVector::simple_root(mu.rank(), i));
}

// --- text ------------------------------------------------------------------

WeightVector parse_weight(std::string_view text) { return WeightVector(parse_int_list(text, "weight")); }

DominantWeight parse_dominant_weight(std::string_view text) { return DominantWeight(parse_weight(text)); }

Partition parse_partition(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("partition: expected '[p1,p2,...]', got '" + std::string(text) + "'");
  }
  text = trim(text.substr(1, text.size() - 2));
  if (text.empty()) return Partition();
  return Partition(parse_int_list(text, "partition"));
}

std::string to_string(const WeightVector& w) {
  std::string out;
  for (int i = 1; i <= w.rank(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string to_string(const Partition& p) {
  std::string out = "[";
  const auto t = p.trimmed();
  for (std::size_t i = 1; i <= t.length(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(t[i]);
  }
  return out + "]";
}

}  // namespace weylmod
