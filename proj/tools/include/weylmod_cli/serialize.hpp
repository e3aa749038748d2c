#pragma once

// JSON and CSV forms of the library types used in reports.

#include <string>

#include <nlohmann/json.hpp>

#include "weylmod/basisenum.hpp"
#include "weylmod/charring.hpp"
#include "weylmod/numbers.hpp"
#include "weylmod/qpoly.hpp"

namespace weylmod::cli {

using nlohmann::json;

/// Integer when it fits in 64 bits, decimal string otherwise.
json to_json(const BigInt& n);
BigInt big_from_json(const json& j);

/// Coefficients lowest degree first.
json to_json(const QPoly& p);
QPoly qpoly_from_json(const json& j);

json to_json(const WeightVector& w);
json to_json(const Partition& p);

/// Array of {"weight": [...], "poly": [...]} sorted lexicographically by weight.
json to_json(const GradedCharacter& ch);
GradedCharacter graded_from_json(const json& j, int rank);

/// Array of {"weight": [...], "multiplicity": n} sorted by weight.
json to_json(const ClassicalCharacter& ch);

/// Array of {"partition": [...], "poly": [...]} sorted by partition.
json to_json(const Decomposition& d);

/// {"l": [[...]], "s": [[...]], "grade": n, "weight": [...]}; row i holds
/// the entries (i, j) for j = i .. r.
json to_json(const BasisElement& b, const DominantWeight& lambda);

/// Columns weight, degree, multiplicity; one row per nonzero coefficient.
std::string to_csv(const GradedCharacter& ch);

}  // namespace weylmod::cli
