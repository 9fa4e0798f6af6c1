#ifndef RAAG_BOUNDS_HPP_
#define RAAG_BOUNDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/structure.hpp"

namespace raag {

struct OuterSpaceDims {
  int num_leaves = 0;
  int k = 0;                // Σ over cyclic V₀ vertices of δ₀
  int dim_q = 0;            // Σ over cyclic V₀ vertices of (δ₀ − 1)
  int spine_dim_bound = 0;  // Σ over V₀ of (2δ − 3)
};

struct TreeBounds {
  int lower = 0;  // e − 1 + 2ℓ − ℓ₀
  int upper = 0;  // e + ℓ − 3 + Σ_{W₀}(δ − 1)
};

struct BoundsReport {
  int rank_k0 = 0;
  int rank_kp = 0;
  std::optional<int> rank_g;  // absent for stars
  int vcd_lower = 0;
  int vcd_upper_hs = 0;
  int vcd_upper_better = 0;
  std::optional<int> vcd_exact;
  std::optional<OuterSpaceDims> outer_space_dims;  // absent for stars
  std::optional<TreeBounds> tree_bounds;           // non-star trees only
  std::vector<std::string> applied_formulas;
  // V₀ vertices whose rank_G summand δ_C − τ − 1 is negative.
  VertexSet negative_summands;
};

// All of these need an admissible graph and the report for it.
int rank_k0(const SimplicialGraph& g, const StructureReport& sr);
int rank_kp(const SimplicialGraph& g, const StructureReport& sr);
// 2|V∖V₀| + Σ_{V₀}(δ_C − τ − 1), checked against 2|V| + Σ_{V₀}(δ_C − τ − 3).
// Throws StarGraph.
int rank_g(const SimplicialGraph& g, const StructureReport& sr);
std::optional<TreeBounds> tree_bounds(const SimplicialGraph& g, const StructureReport& sr);
// Throws StarGraph.
OuterSpaceDims outer_space_dims(const SimplicialGraph& g, const StructureReport& sr);

// Throws VerificationFailure when lower > min(upper) or better > HS.
BoundsReport vcd_bounds(const SimplicialGraph& g, const StructureReport& sr);

}  // namespace raag

#endif  // RAAG_BOUNDS_HPP_
