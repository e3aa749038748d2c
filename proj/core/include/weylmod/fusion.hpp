#pragma once

// Fusion products of evaluation modules at fundamental weights, built as
// explicit exact-rational linear algebra on the tensor product.
//
// For factors V(omega_{i_1})_{a_1}, ..., V(omega_{i_k})_{a_k} with distinct
// points, x (x) t^s acts on the tensor product as
//   sum_j a_j^s (1 (x) ... (x) rho_j(x) (x) ... (x) 1).
// V^n is the span of g.v over elements g of U(g[t]) of grade at most n, where
// v is the tensor product of highest-weight vectors. The graded character of
// the fusion product is sum_n (dim V^n_mu - dim V^{n-1}_mu) t^n e(mu).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylmod/charring.hpp"
#include "weylmod/lattice.hpp"
#include "weylmod/linalg.hpp"

namespace weylmod {

struct Generator {
  enum class Kind { XPlus, XMinus, H };
  Kind kind;
  int index;  // 1..rank

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Finite-dimensional sl_{r+1}-module given by matrices of the Chevalley
/// generators x_i^+, x_i^-, h_i in a weight basis.
struct ExplicitModule {
  int rank = 0;
  std::size_t dim = 0;
  /// Basis labels: for V(omega_i), the i-subsets of {1, ..., r+1}.
  std::vector<std::vector<int>> labels;
  std::vector<RationalMatrix> x_plus;   // index i-1
  std::vector<RationalMatrix> x_minus;  // index i-1
  std::vector<RationalMatrix> h;        // index i-1
  std::size_t highest = 0;

  const RationalMatrix& matrix(Generator g) const;
  /// Weight of a basis vector, read off the diagonal h matrices.
  WeightVector weight_of(std::size_t basis_index) const;
  /// h diagonal and commuting, [x_i^+, x_i^-] = h_i, [h_i, x_j^+-] = +-<alpha_j, h_i> x_j^+-.
  /// On failure `why` receives a description.
  bool check_invariants(std::string* why = nullptr) const;
};

/// V(omega_i) realized as the i-th exterior power of C^{r+1}.
ExplicitModule build_fundamental(int rank, int i);

struct EvaluationFactor {
  ExplicitModule module;
  Coord point = 0;
};

/// Fundamental evaluation factors V(omega_{indices[k]}) at points[k].
std::vector<EvaluationFactor> make_factors(int rank, std::span<const int> indices, std::span<const Coord> points);

/// Tensor product dimension.
std::size_t ambient_dim(std::span<const EvaluationFactor> factors);

/// Matrix of x (x) t^s on the tensor product.
RationalMatrix current_action(std::span<const EvaluationFactor> factors, Generator x, long s);

struct FusionResult {
  GradedCharacter character;
  std::size_t ambient_dim = 0;
  /// dim V^n for n = 0 .. top_grade.
  std::vector<std::size_t> cumulative_dims;
  long top_grade = -1;
};

/// Grade filtration by span closure. Throws std::runtime_error if the closure
/// stabilizes below the full dimension or max_grade is exceeded, and
/// std::invalid_argument for repeated points or mixed ranks.
FusionResult fusion_product(std::span<const EvaluationFactor> factors, long max_grade = 64);

GradedCharacter fusion_graded_character(std::span<const EvaluationFactor> factors, long max_grade = 64);

struct PointIndependenceReport {
  bool equal = false;
  GradedCharacter first;
  GradedCharacter second;
};

/// Compare the fusion character at the given points with the same factors
/// moved to alt_points.
PointIndependenceReport point_independence(std::span<const EvaluationFactor> factors,
                                           std::span<const Coord> alt_points, long max_grade = 64);

/// Text form "r=2; factors=w1@0,w1@1,w2@5". Points may be omitted
/// ("w1,w1,w2"), in which case they default to 0, 1, ..., k-1.
struct FusionSpec {
  int rank = 0;
  std::vector<int> indices;
  std::vector<Coord> points;

  /// Sum of the fundamental weights.
  DominantWeight highest_weight() const;
};

FusionSpec parse_fusion_spec(std::string_view text);
std::string to_string(const FusionSpec& spec);

}  // namespace weylmod
