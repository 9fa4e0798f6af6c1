#include "raag/bounds.hpp"

#include <algorithm>

#include "raag/error.hpp"

namespace raag {

namespace {

int leaf_count(const StructureReport& sr) { return static_cast<int>(sr.leaf_vertices.size()); }

template <class F>
int sum_over(const VertexSet& s, F f) {
  int total = 0;
  for (Vertex v : s) total += f(v);
  return total;
}

void require_not_star(const StructureReport& sr) {
  if (sr.star) throw StarGraph();
}

void check(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure(what);
}

}  // namespace

int rank_k0(const SimplicialGraph&, const StructureReport& sr) {
  if (sr.star) return 0;
  return sum_over(sr.v0, [&](Vertex v) { return sr.counts[v].delta_c - sr.counts[v].leaves - 1; });
}

int rank_kp(const SimplicialGraph&, const StructureReport& sr) {
  if (sr.star) return leaf_count(sr);
  return sum_over(sr.v0, [&](Vertex v) { return sr.counts[v].delta_c - 1; });
}

int rank_g(const SimplicialGraph& g, const StructureReport& sr) {
  require_not_star(sr);
  const int n = static_cast<int>(g.vertex_count());
  const int n0 = static_cast<int>(sr.v0.size());
  int first = 2 * (n - n0) +
              sum_over(sr.v0, [&](Vertex v) { return sr.counts[v].delta_c - sr.counts[v].twigs - 1; });
  int second =
      2 * n + sum_over(sr.v0, [&](Vertex v) { return sr.counts[v].delta_c - sr.counts[v].twigs - 3; });
  check(first == second, "the two expressions for rank G disagree");
  check(first >= 0, "rank G is negative");
  return first;
}

std::optional<TreeBounds> tree_bounds(const SimplicialGraph& g, const StructureReport& sr) {
  if (sr.star || !is_tree(g)) return std::nullopt;
  const int e = static_cast<int>(g.edge_count());
  const int l = leaf_count(sr);
  int l0 = 0;
  for (Vertex v : sr.v0)
    if (sr.counts[v].delta0 == 1) ++l0;
  TreeBounds t;
  t.lower = e - 1 + 2 * l - l0;
  t.upper = e + l - 3 + sum_over(sr.w0, [&](Vertex v) { return sr.counts[v].delta - 1; });
  return t;
}

OuterSpaceDims outer_space_dims(const SimplicialGraph& g, const StructureReport& sr) {
  require_not_star(sr);
  OuterSpaceDims d;
  d.num_leaves = leaf_count(sr);
  for (Vertex v : sr.cyclic) {
    if (!sr.v0.contains(v)) continue;
    d.k += *sr.counts[v].delta0;
    d.dim_q += *sr.counts[v].delta0 - 1;
  }
  d.spine_dim_bound = sum_over(sr.v0, [&](Vertex v) { return 2 * sr.counts[v].delta - 3; });
  (void)g;
  return d;
}

BoundsReport vcd_bounds(const SimplicialGraph& g, const StructureReport& sr) {
  BoundsReport r;
  r.rank_k0 = rank_k0(g, sr);
  r.rank_kp = rank_kp(g, sr);
  if (sr.star) {
    const int l = leaf_count(sr);
    r.vcd_lower = l;
    r.vcd_upper_hs = l + (2 * l - 3);
    r.vcd_upper_better = r.vcd_upper_hs;
    r.applied_formulas = {
        "star: rank_K0 = 0",
        "star: rank_KP = |W|",
        "star: vcd_lower = rank L = |W|",
        "star: vcd_upper_HS = |W| + (2|W| - 3)",
        "star: vcd_upper_better = vcd_upper_HS",
    };
  } else {
    r.rank_g = rank_g(g, sr);
    r.vcd_lower = *r.rank_g;
    r.vcd_upper_hs = r.rank_kp + sum_over(sr.v0, [&](Vertex v) { return 2 * sr.counts[v].delta - 3; });
    r.vcd_upper_better =
        sum_over(sr.v0, [&](Vertex v) { return sr.counts[v].delta_c + sr.counts[v].delta - 3; }) +
        sum_over(sr.w0, [&](Vertex v) { return sr.counts[v].delta - 1; });
    r.outer_space_dims = outer_space_dims(g, sr);
    r.tree_bounds = tree_bounds(g, sr);
    for (Vertex v : sr.v0)
      if (sr.counts[v].delta_c - sr.counts[v].twigs - 1 < 0) r.negative_summands.insert(v);
    r.applied_formulas = {
        "rank_K0 = sum_V0 (delta_C - leaves - 1)",
        "rank_KP = sum_V0 (delta_C - 1)",
        "rank_G = 2|V - V0| + sum_V0 (delta_C - twigs - 1) = 2|V| + sum_V0 (delta_C - twigs - 3)",
        "vcd_lower = rank_G",
        "vcd_upper_HS = rank_KP + sum_V0 (2 delta - 3)",
        "vcd_upper_better = sum_V0 (delta_C + delta - 3) + sum_W0 (delta - 1)",
        "outer_space: k = sum_cyclic delta0, dim_Q = sum_cyclic (delta0 - 1), spine <= sum_V0 (2 delta - 3)",
    };
    if (r.tree_bounds) {
      r.applied_formulas.emplace_back("tree: e - 1 + 2 leaves - leaves(Gamma0) <= vcd <= e + leaves - 3 + sum_W0 (delta - 1)");
      check(r.tree_bounds->lower == r.vcd_lower, "tree lower bound differs from rank G");
      check(r.tree_bounds->upper == r.vcd_upper_better, "tree upper bound differs from the general bound");
    }
    check(r.rank_k0 + leaf_count(sr) == r.rank_kp, "rank_K0 + leaves != rank_KP");
  }
  check(r.vcd_upper_better <= r.vcd_upper_hs, "vcd_upper_better exceeds vcd_upper_HS");
  const int upper = std::min(r.vcd_upper_hs, r.vcd_upper_better);
  check(r.vcd_lower <= upper, "vcd lower bound exceeds the upper bound");
  if (r.vcd_lower == upper) r.vcd_exact = upper;
  return r;
}

}  // namespace raag
