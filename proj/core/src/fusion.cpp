#include "weylmod/fusion.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace weylmod {

namespace {

// E_{a,b} on the exterior power: e_S -> +-e_{S - b + a} when b in S, a not in S.
RationalMatrix wedge_unit(const std::vector<std::vector<int>>& labels, int a, int b) {
  const std::size_t dim = labels.size();
  RationalMatrix m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const auto& s = labels[col];
    const bool has_b = std::find(s.begin(), s.end(), b) != s.end();
    const bool has_a = std::find(s.begin(), s.end(), a) != s.end();
    if (a == b) {
      if (has_a) m(col, col) = 1;
      continue;
    }
    if (!has_b || has_a) continue;
    std::vector<int> image;
    int between = 0;
    for (int x : s) {
      if (x != b) image.push_back(x);
      if ((x > std::min(a, b)) && (x < std::max(a, b))) ++between;
    }
    image.push_back(a);
    std::sort(image.begin(), image.end());
    const auto row = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), image) - labels.begin());
    m(row, col) = between % 2 == 0 ? 1 : -1;
  }
  return m;
}

Rational point_power(Coord a, long s) {
  if (s == 0) return 1;
  return Rational(power(BigInt(static_cast<long>(a)), static_cast<unsigned long>(s)));
}

std::vector<Generator> all_generators(int rank) {
  std::vector<Generator> gens;
  for (int i = 1; i <= rank; ++i) {
    gens.push_back({Generator::Kind::XMinus, i});
    gens.push_back({Generator::Kind::XPlus, i});
    gens.push_back({Generator::Kind::H, i});
  }
  return gens;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

template <class Int>
Int parse_int(std::string_view text, std::string_view what) {
  text = trim(text);
  Int value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("fusion spec: cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

void validate_factors(std::span<const EvaluationFactor> factors) {
  if (factors.empty()) throw std::invalid_argument("fusion needs at least one factor");
  std::set<Coord> points;
  for (const auto& f : factors) {
    require_same_rank(factors.front().module.rank, f.module.rank, "fusion factors");
    if (!points.insert(f.point).second) {
      throw std::invalid_argument("evaluation points must be pairwise distinct (repeated " + std::to_string(f.point) + ")");
    }
  }
}

}  // namespace

// --- ExplicitModule --------------------------------------------------------

const RationalMatrix& ExplicitModule::matrix(Generator g) const {
  if (g.index < 1 || g.index > rank) throw std::invalid_argument("generator index out of range");
  const auto k = static_cast<std::size_t>(g.index - 1);
  switch (g.kind) {
    case Generator::Kind::XPlus: return x_plus[k];
    case Generator::Kind::XMinus: return x_minus[k];
    case Generator::Kind::H: return h[k];
  }
  throw std::logic_error("unknown generator kind");
}

WeightVector ExplicitModule::weight_of(std::size_t basis_index) const {
  WeightVector w(rank);
  for (int i = 1; i <= rank; ++i) {
    const Rational& ev = h[static_cast<std::size_t>(i - 1)](basis_index, basis_index);
    if (ev.get_den() != 1) throw std::logic_error("non-integral h eigenvalue");
    w[i] = ev.get_num().get_si();
  }
  return w;
}

bool ExplicitModule::check_invariants(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const auto r = static_cast<std::size_t>(rank);
  if (x_plus.size() != r || x_minus.size() != r || h.size() != r) return fail("wrong number of generator matrices");
  for (std::size_t i = 0; i < r; ++i) {
    if (!h[i].is_diagonal()) return fail("h_" + std::to_string(i + 1) + " is not diagonal");
    for (std::size_t j = 0; j < r; ++j) {
      if (!commutator(h[i], h[j]).is_zero()) return fail("h matrices do not commute");
    }
    if (commutator(x_plus[i], x_minus[i]) != h[i]) {
      return fail("[x_" + std::to_string(i + 1) + "^+, x_" + std::to_string(i + 1) + "^-] != h_" + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < r; ++j) {
      const Rational a = cartan_entry(static_cast<int>(i + 1), static_cast<int>(j + 1));
      if (commutator(h[i], x_plus[j]) != a * x_plus[j]) return fail("[h, x^+] relation fails");
      if (commutator(h[i], x_minus[j]) != (-a) * x_minus[j]) return fail("[h, x^-] relation fails");
      if (i != j && !commutator(x_plus[i], x_minus[j]).is_zero()) return fail("[x_i^+, x_j^-] != 0 for i != j");
    }
  }
  return true;
}

ExplicitModule build_fundamental(int rank, int i) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (i < 1 || i > rank) throw std::invalid_argument("fundamental index out of range");
  ExplicitModule m;
  m.rank = rank;
  const int n = rank + 1;
  // i-subsets in lexicographic order; {1..i} comes first.
  std::vector<int> subset(static_cast<std::size_t>(i));
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == i) {
      m.labels.push_back(subset);
      return;
    }
    for (int x = start; x <= n - (i - pos) + 1; ++x) {
      subset[static_cast<std::size_t>(pos)] = x;
      self(self, pos + 1, x + 1);
    }
  };
  rec(rec, 0, 1);
  m.dim = m.labels.size();
  m.highest = 0;
  for (int k = 1; k <= rank; ++k) {
    m.x_plus.push_back(wedge_unit(m.labels, k, k + 1));
    m.x_minus.push_back(wedge_unit(m.labels, k + 1, k));
    m.h.push_back(wedge_unit(m.labels, k, k) - wedge_unit(m.labels, k + 1, k + 1));
  }
  return m;
}

std::vector<EvaluationFactor> make_factors(int rank, std::span<const int> indices, std::span<const Coord> points) {
  if (indices.size() != points.size()) throw std::invalid_argument("need one point per factor");
  std::vector<EvaluationFactor> out;
  for (std::size_t k = 0; k < indices.size(); ++k) out.push_back({build_fundamental(rank, indices[k]), points[k]});
  return out;
}

std::size_t ambient_dim(std::span<const EvaluationFactor> factors) {
  std::size_t d = 1;
  for (const auto& f : factors) d *= f.module.dim;
  return d;
}

RationalMatrix current_action(std::span<const EvaluationFactor> factors, Generator x, long s) {
  if (s < 0) throw std::invalid_argument("grade must be non-negative");
  const std::size_t dim = ambient_dim(factors);
  RationalMatrix total(dim, dim);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const Rational coeff = point_power(factors[j].point, s);
    if (sgn(coeff) == 0) continue;
    RationalMatrix term = RationalMatrix::identity(1);
    for (std::size_t k = 0; k < factors.size(); ++k) {
      term = kronecker(term, k == j ? factors[k].module.matrix(x) : RationalMatrix::identity(factors[k].module.dim));
    }
    total += coeff * std::move(term);
  }
  return total;
}

// --- closure ---------------------------------------------------------------

FusionResult fusion_product(std::span<const EvaluationFactor> factors, long max_grade) {
  validate_factors(factors);
  const int rank = factors.front().module.rank;
  const std::size_t k = factors.size();
  const std::size_t dim = ambient_dim(factors);

  // Weight of each tensor basis vector; the first factor is the most
  // significant digit, matching kronecker().
  std::vector<WeightVector> basis_weight(dim, WeightVector(rank));
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t rest = idx;
    for (std::size_t f = k; f-- > 0;) {
      const std::size_t d = factors[f].module.dim;
      basis_weight[idx] += factors[f].module.weight_of(rest % d);
      rest /= d;
    }
  }
  std::size_t highest = 0;
  for (std::size_t f = 0; f < k; ++f) highest = highest * factors[f].module.dim + factors[f].module.highest;

  // Only grades s < k are needed: for s >= k the powers a_j^s are linear
  // combinations of a_j^0 .. a_j^{k-1}.
  const auto gens = all_generators(rank);
  std::vector<std::vector<SparseOperator>> ops(k);
  for (std::size_t s = 0; s < k; ++s)
    for (const auto& g : gens) ops[s].emplace_back(current_action(factors, g, static_cast<long>(s)));

  auto weight_of_vector = [&](const RationalVector& v) -> std::optional<WeightVector> {
    std::optional<WeightVector> w;
    for (std::size_t idx = 0; idx < dim; ++idx) {
      if (sgn(v[idx]) == 0) continue;
      if (!w) w = basis_weight[idx];
      else if (*w != basis_weight[idx]) throw std::logic_error("generated vector is not a weight vector");
    }
    return w;
  };

  std::map<WeightVector, EchelonBasis> span;
  std::vector<std::vector<RationalVector>> fresh;
  std::vector<std::map<WeightVector, std::size_t>> dims_at;
  std::size_t total = 0;

  FusionResult result;
  result.ambient_dim = dim;
  const std::size_t window = std::max<std::size_t>(k - 1, 1);

  for (long n = 0;; ++n) {
    if (n > max_grade) {
      throw std::runtime_error("fusion closure exceeded max grade " + std::to_string(max_grade) + " at dimension " +
                               std::to_string(total) + " of " + std::to_string(dim));
    }
    fresh.emplace_back();
    std::deque<RationalVector> queue;
    auto try_add = [&](RationalVector v) {
      const auto w = weight_of_vector(v);
      if (!w) return;
      auto it = span.try_emplace(*w, dim).first;
      if (it->second.insert(v)) {
        ++total;
        fresh.back().push_back(v);
        queue.push_back(std::move(v));
      }
    };

    if (n == 0) {
      RationalVector v(dim);
      v[highest] = 1;
      try_add(std::move(v));
    } else {
      for (std::size_t s = 1; s < k && static_cast<long>(s) <= n; ++s) {
        const auto& source = fresh[static_cast<std::size_t>(n) - s];
        for (const auto& v : source)
          for (const auto& op : ops[s]) try_add(op.apply(v));
      }
    }
    while (!queue.empty()) {
      const RationalVector v = std::move(queue.front());
      queue.pop_front();
      for (const auto& op : ops[0]) try_add(op.apply(v));
    }

    auto& snapshot = dims_at.emplace_back();
    for (const auto& [w, basis] : span) snapshot[w] = basis.rank();
    result.cumulative_dims.push_back(total);

    if (total == dim) {
      result.top_grade = n;
      break;
    }
    if (static_cast<std::size_t>(n + 1) >= window) {
      bool stalled = true;
      for (std::size_t back = 0; back < window; ++back) {
        if (!fresh[static_cast<std::size_t>(n) - back].empty()) stalled = false;
      }
      if (stalled) {
        throw std::runtime_error("fusion closure stabilized at dimension " + std::to_string(total) + " of " +
                                 std::to_string(dim));
      }
    }
  }

  GradedCharacter ch(rank);
  for (std::size_t n = 0; n < dims_at.size(); ++n) {
    for (const auto& [w, d] : dims_at[n]) {
      std::size_t prev = 0;
      if (n > 0) {
        const auto it = dims_at[n - 1].find(w);
        if (it != dims_at[n - 1].end()) prev = it->second;
      }
      if (d > prev) ch.add(w, QPoly::monomial(static_cast<long>(n), BigInt(static_cast<unsigned long>(d - prev))));
    }
  }
  result.character = std::move(ch);
  return result;
}

GradedCharacter fusion_graded_character(std::span<const EvaluationFactor> factors, long max_grade) {
  return fusion_product(factors, max_grade).character;
}

PointIndependenceReport point_independence(std::span<const EvaluationFactor> factors,
                                           std::span<const Coord> alt_points, long max_grade) {
  if (alt_points.size() != factors.size()) throw std::invalid_argument("need one alternative point per factor");
  std::vector<EvaluationFactor> moved(factors.begin(), factors.end());
  for (std::size_t k = 0; k < moved.size(); ++k) moved[k].point = alt_points[k];
  PointIndependenceReport report;
  report.first = fusion_graded_character(factors, max_grade);
  report.second = fusion_graded_character(moved, max_grade);
  report.equal = report.first == report.second;
  return report;
}

// --- spec strings ----------------------------------------------------------

DominantWeight FusionSpec::highest_weight() const {
  WeightVector w(rank);
  for (int i : indices) w[i] += 1;
  return DominantWeight(w);
}

FusionSpec parse_fusion_spec(std::string_view text) {
  FusionSpec spec;
  bool have_rank = false;
  std::vector<std::string_view> factor_tokens;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto semi = text.find(';', pos);
    const auto part = trim(text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos));
    if (!part.empty()) {
      const auto eq = part.find('=');
      if (eq == std::string_view::npos) throw std::invalid_argument("fusion spec: expected key=value, got '" + std::string(part) + "'");
      const auto key = trim(part.substr(0, eq));
      const auto value = trim(part.substr(eq + 1));
      if (key == "r") {
        spec.rank = parse_int<int>(value, "rank");
        have_rank = true;
      } else if (key == "factors") {
        std::size_t p = 0;
        while (p <= value.size()) {
          const auto comma = value.find(',', p);
          factor_tokens.push_back(trim(value.substr(p, comma == std::string_view::npos ? std::string_view::npos : comma - p)));
          if (comma == std::string_view::npos) break;
          p = comma + 1;
        }
      } else {
        throw std::invalid_argument("fusion spec: unknown key '" + std::string(key) + "'");
      }
    }
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  if (!have_rank || spec.rank < 1) throw std::invalid_argument("fusion spec: missing or invalid r=");
  if (factor_tokens.empty()) throw std::invalid_argument("fusion spec: missing factors=");

  std::size_t with_points = 0;
  for (const auto token : factor_tokens) {
    if (token.size() < 2 || token.front() != 'w') {
      throw std::invalid_argument("fusion spec: factor must look like w<i>[@<point>], got '" + std::string(token) + "'");
    }
    const auto at = token.find('@');
    const int index = parse_int<int>(token.substr(1, at == std::string_view::npos ? std::string_view::npos : at - 1), "factor index");
    if (index < 1 || index > spec.rank) {
      throw std::invalid_argument("fusion spec: factor index " + std::to_string(index) + " out of range for r=" +
                                  std::to_string(spec.rank));
    }
    spec.indices.push_back(index);
    if (at != std::string_view::npos) {
      spec.points.push_back(parse_int<Coord>(token.substr(at + 1), "point"));
      ++with_points;
    }
  }
  if (with_points == 0) {
    for (std::size_t k = 0; k < spec.indices.size(); ++k) spec.points.push_back(static_cast<Coord>(k));
  } else if (with_points != spec.indices.size()) {
    throw std::invalid_argument("fusion spec: give a point for every factor or for none");
  }
  std::set<Coord> distinct(spec.points.begin(), spec.points.end());
  if (distinct.size() != spec.points.size()) throw std::invalid_argument("fusion spec: points must be pairwise distinct");
  return spec;
}

std::string to_string(const FusionSpec& spec) {
  std::string out = "r=" + std::to_string(spec.rank) + "; factors=";
  for (std::size_t k = 0; k < spec.indices.size(); ++k) {
    if (k > 0) out += ',';
    out += "w" + std::to_string(spec.indices[k]) + "@" + std::to_string(spec.points[k]);
  }
  return out;
}

}  // namespace weylmod
