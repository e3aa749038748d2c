#pragma once

// Semistandard tableaux and Kostka-Foulkes polynomials via the charge
// statistic of Lascoux and Schutzenberger.

#include <algorithm>
#include <span>
#include <vector>

#include "weylmod/lattice.hpp"
#include "weylmod/numbers.hpp"
#include "weylmod/qpoly.hpp"

namespace weylmod {

struct Tableau {
  Partition shape;
  std::vector<std::vector<Coord>> rows;  // entries are 1-based letters

  /// Rows weakly increasing, columns strictly increasing, shape respected.
  bool is_semistandard() const;
  /// Number of occurrences of each letter 1..max_letter.
  std::vector<Coord> content(std::size_t max_letter) const;
  /// Rows read left to right, from the bottom row up.
  std::vector<Coord> reading_word() const;
};

/// Visit every semistandard tableau of the given shape whose content is
/// `content` (letter k occurs content[k] times).
template <class Visitor>
void for_each_ssyt(const Partition& shape, const Partition& content, Visitor&& visit);

std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Partition& content);

/// Charge of a word whose content is a partition (letter 1 most frequent).
/// Throws std::invalid_argument otherwise.
Coord charge(std::span<const Coord> word);

enum class KostkaStatistic { Charge, Cocharge };

/// K_{shape, content}(t) = sum over SSYT(shape, content) of t^{charge}; with
/// Cocharge the exponent is n(content) - charge. Zero when sizes differ.
QPoly kostka(const Partition& shape, const Partition& content, KostkaStatistic statistic = KostkaStatistic::Charge);

/// Number of SSYT of the given shape and content.
BigInt kostka_number(const Partition& shape, const Partition& content);

// --- implementation ----------------------------------------------------------

template <class Visitor>
void for_each_ssyt(const Partition& shape, const Partition& content, Visitor&& visit) {
  const Partition sh = shape.trimmed();
  const Partition ct = content.trimmed();
  if (sh.size() != ct.size()) return;
  Tableau t;
  t.shape = sh;
  t.rows.resize(sh.length());
  // Fill letter by letter: the cells holding letters <= k form a shape nu_k,
  // and nu_k / nu_{k-1} is a horizontal strip of size content[k].
  std::vector<Coord> filled(sh.length(), 0);
  const std::size_t letters = ct.length();
  auto rec = [&](auto&& self, std::size_t letter) -> void {
    if (letter > letters) {
      visit(static_cast<const Tableau&>(t));
      return;
    }
    const Coord need = ct[letter];
    // Distribute `need` cells over rows; row i may gain at most
    // min(shape_i, prev_filled_{i-1}) - filled_i cells (horizontal strip).
    const std::vector<Coord> before = filled;
    auto place = [&](auto&& place_self, std::size_t row, Coord remaining) -> void {
      if (row == sh.length()) {
        if (remaining == 0) self(self, letter + 1);
        return;
      }
      const Coord cap_shape = sh[row + 1] - before[row];
      const Coord cap_strip = row == 0 ? cap_shape : before[row - 1] - before[row];
      const Coord cap = std::min({cap_shape, cap_strip, remaining});
      for (Coord add = cap; add >= 0; --add) {
        for (Coord c = 0; c < add; ++c) t.rows[row].push_back(static_cast<Coord>(letter));
        filled[row] = before[row] + add;
        place_self(place_self, row + 1, remaining - add);
        t.rows[row].resize(static_cast<std::size_t>(before[row]));
        filled[row] = before[row];
      }
    };
    place(place, 0, need);
  };
  rec(rec, 1);
}

}  // namespace weylmod
