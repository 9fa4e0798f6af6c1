#ifndef RAAG_STRUCTURE_HPP_
#define RAAG_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// Vertices with equal links form a class; classes are ordered by link
// inclusion.
struct VertexClasses {
  std::vector<VertexSet> classes;        // sorted by least member
  std::vector<std::size_t> class_of;     // vertex -> index into classes
  std::vector<std::vector<bool>> leq;    // leq[i][j]: link(class i) ⊆ link(class j)
  std::vector<std::size_t> maximal;      // indices of maximal classes, increasing

  [[nodiscard]] bool is_maximal(std::size_t c) const;
};

// A complete bipartite subgraph left ∗ right.
struct Join {
  VertexSet left;
  VertexSet right;

  [[nodiscard]] VertexSet vertices() const { return set_union(left, right); }
  friend bool operator==(const Join&, const Join&) = default;
};

enum class ComponentKind { leaf, twig, branch };

struct VertexCounts {
  int delta = 0;                // degree in the graph
  std::optional<int> delta0;    // degree inside Γ₀, only for V₀ vertices
  int delta_c = 0;              // components of Γ − {v}
  int leaves = 0;               // leaf components (leaves attached to v)
  int twigs = 0;
  int branches = 0;
};

struct StructureReport {
  bool star = false;
  VertexClasses classes;
  VertexSet v0;
  std::vector<VertexCounts> counts;   // indexed by vertex
  VertexSet cyclic;
  VertexSet separating;
  VertexSet leaf_vertices;
  VertexSet interior;
  VertexSet w0;

  // Edges of the subgraph induced on v0.
  [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> gamma0_edges(const SimplicialGraph& g) const;
};

// All operations below throw NotAdmissible for non-admissible graphs.

VertexClasses vertex_classes(const SimplicialGraph& g);

// V₀: least member of each maximal class, or just the centre of a star.
VertexSet gamma0(const SimplicialGraph& g);

// J_v = link(v) ∗ perp(link(v)); throws InvalidArgument for a leaf.
Join maximal_join(const SimplicialGraph& g, Vertex v);

// J_v ∩ J_w = perp(link w) ∗ perp(link v) for adjacent interior v, w.
Join edge_join(const SimplicialGraph& g, Vertex v, Vertex w);

bool is_cyclic(const SimplicialGraph& g, Vertex v);

// Tag for every component of Γ − {v}, in components_minus_vertex order.
std::vector<ComponentKind> classify_components(const SimplicialGraph& g, Vertex v);

VertexSet w0(const SimplicialGraph& g);

// True when v lies on an embedded 4-cycle.
bool on_square(const SimplicialGraph& g, Vertex v);

// Populates every field and checks the structural invariants, throwing
// VerificationFailure if one fails.
StructureReport structure_report(const SimplicialGraph& g);

}  // namespace raag

#endif  // RAAG_STRUCTURE_HPP_
