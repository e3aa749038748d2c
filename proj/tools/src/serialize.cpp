#include "weylmod_cli/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace weylmod::cli {

json to_json(const BigInt& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

json to_json(const QPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

QPoly qpoly_from_json(const json& j) {
  QPoly p;
  long k = 0;
  for (const auto& c : j) p.add_term(k++, big_from_json(c));
  return p;
}

json to_json(const WeightVector& w) {
  json out = json::array();
  for (Coord c : w.coords()) out.push_back(c);
  return out;
}

json to_json(const Partition& p) {
  json out = json::array();
  const Partition t = p.trimmed();
  for (Coord c : t.parts()) out.push_back(c);
  return out;
}

json to_json(const GradedCharacter& ch) {
  json out = json::array();
  for (const auto& [mu, poly] : ch.table()) out.push_back({{"weight", to_json(mu)}, {"poly", to_json(poly)}});
  return out;
}

GradedCharacter graded_from_json(const json& j, int rank) {
  GradedCharacter ch(rank);
  for (const auto& entry : j) {
    WeightVector mu(rank);
    const auto& w = entry.at("weight");
    if (static_cast<int>(w.size()) != rank) throw std::invalid_argument("weight has wrong rank");
    for (int i = 1; i <= rank; ++i) mu[i] = w[static_cast<std::size_t>(i - 1)].get<Coord>();
    ch.add(mu, qpoly_from_json(entry.at("poly")));
  }
  return ch;
}

json to_json(const ClassicalCharacter& ch) {
  json out = json::array();
  for (const auto& [mu, mult] : ch.table()) out.push_back({{"weight", to_json(mu)}, {"multiplicity", to_json(mult)}});
  return out;
}

json to_json(const Decomposition& d) {
  json out = json::array();
  for (const auto& [xi, poly] : d) out.push_back({{"partition", to_json(xi)}, {"poly", to_json(poly)}});
  return out;
}

json to_json(const BasisElement& b, const DominantWeight& lambda) {
  const int r = b.rank();
  json l = json::array(), s = json::array();
  for (int i = 1; i <= r; ++i) {
    json lrow = json::array(), srow = json::array();
    for (int j = i; j <= r; ++j) {
      const auto& f = b.factor(i, j);
      lrow.push_back(f.length);
      srow.push_back(f.exponents);
    }
    l.push_back(std::move(lrow));
    s.push_back(std::move(srow));
  }
  return {{"l", l}, {"s", s}, {"grade", b.grade()}, {"weight", to_json(b.weight(lambda))}};
}

std::string to_csv(const GradedCharacter& ch) {
  std::ostringstream out;
  out << "weight,degree,multiplicity\n";
  for (const auto& [mu, poly] : ch.table()) {
    std::string w;
    for (Coord c : mu.coords()) w += (w.empty() ? "" : " ") + std::to_string(c);
    const auto coeffs = poly.coeffs();
    for (std::size_t d = 0; d < coeffs.size(); ++d)
      if (sgn(coeffs[d]) != 0) out << w << ',' << d << ',' << coeffs[d].get_str() << '\n';
  }
  return out.str();
}

}  // namespace weylmod::cli
