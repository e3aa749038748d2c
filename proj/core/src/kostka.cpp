#include "weylmod/kostka.hpp"

#include <stdexcept>

namespace weylmod {

bool Tableau::is_semistandard() const {
  const Partition sh = shape.trimmed();
  if (rows.size() != sh.length()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Coord>(rows[i].size()) != sh[i + 1]) return false;
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      if (rows[i][c] < 1) return false;
      if (c > 0 && rows[i][c] < rows[i][c - 1]) return false;
      if (i > 0 && rows[i][c] <= rows[i - 1][c]) return false;
    }
  }
  return true;
}

std::vector<Coord> Tableau::content(std::size_t max_letter) const {
  std::vector<Coord> out(max_letter, 0);
  for (const auto& row : rows) {
    for (Coord x : row) {
      if (x >= 1 && static_cast<std::size_t>(x) <= max_letter) ++out[static_cast<std::size_t>(x - 1)];
    }
  }
  return out;
}

std::vector<Coord> Tableau::reading_word() const {
  std::vector<Coord> word;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  return word;
}

std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Partition& content) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, content, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

Coord charge(std::span<const Coord> word) {
  const std::size_t n = word.size();
  Coord max_letter = 0;
  for (Coord x : word) {
    if (x < 1) throw std::invalid_argument("charge: letters must be positive");
    max_letter = std::max(max_letter, x);
  }
  std::vector<Coord> counts(static_cast<std::size_t>(max_letter) + 1, 0);
  for (Coord x : word) ++counts[static_cast<std::size_t>(x)];
  for (std::size_t k = 2; k < counts.size(); ++k) {
    if (counts[k] > counts[k - 1]) throw std::invalid_argument("charge: content of the word is not a partition");
  }

  std::vector<bool> used(n, false);
  std::size_t remaining = n;
  Coord total = 0;
  while (remaining > 0) {
    // Extract one standard subword: letters 1, 2, ... read leftwards
    // cyclically from the right end. The index goes up by one each time the
    // scan wraps around.
    std::size_t pos = n;
    Coord index = 0;
    for (Coord letter = 1; letter <= max_letter; ++letter) {
      std::size_t found = n;
      for (std::size_t p = pos; p-- > 0;) {
        if (!used[p] && word[p] == letter) {
          found = p;
          break;
        }
      }
      if (found == n && letter > 1) {
        for (std::size_t p = n; p-- > pos + 1;) {
          if (!used[p] && word[p] == letter) {
            found = p;
            break;
          }
        }
        if (found != n) ++index;
      }
      if (found == n) break;  // letter exhausted: this subword ends
      used[found] = true;
      --remaining;
      total += index;
      pos = found;
    }
  }
  return total;
}

QPoly kostka(const Partition& shape, const Partition& content, KostkaStatistic statistic) {
  QPoly out;
  if (shape.size() != content.size()) return out;
  const Coord n_content = content.trimmed().weighted_size();
  for_each_ssyt(shape, content, [&](const Tableau& t) {
    const auto word = t.reading_word();
    const Coord c = charge(word);
    out.add_term(statistic == KostkaStatistic::Charge ? c : n_content - c, 1);
  });
  return out;
}

BigInt kostka_number(const Partition& shape, const Partition& content) {
  BigInt n = 0;
  for_each_ssyt(shape, content, [&](const Tableau&) { ++n; });
  return n;
}

}  // namespace weylmod
