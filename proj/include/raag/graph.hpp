#ifndef RAAG_GRAPH_HPP_
#define RAAG_GRAPH_HPP_

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

// Index of a vertex in its graph. Indices follow the lexicographic order of
// vertex names, so comparing indices compares names.
using Vertex = std::size_t;

// Sorted set of vertex indices. Iteration order is the vertex order.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> init);
  explicit VertexSet(std::vector<Vertex> items);

  void insert(Vertex v);
  void erase(Vertex v);
  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] bool is_subset_of(const VertexSet& other) const;
  [[nodiscard]] bool intersects(const VertexSet& other) const;

  [[nodiscard]] std::size_t size() const { return items_.size(); }
  [[nodiscard]] bool empty() const { return items_.empty(); }
  [[nodiscard]] Vertex front() const { return items_.front(); }
  [[nodiscard]] const std::vector<Vertex>& items() const { return items_; }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.items_ <=> b.items_;
  }

 private:
  std::vector<Vertex> items_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

// A finite simplicial graph with named vertices: no loops, no multi-edges.
// Immutable after construction.
class SimplicialGraph {
 public:
  // Vertex names are sorted lexicographically to fix the vertex order.
  // Duplicate edges collapse; a loop or an edge naming an undeclared vertex
  // throws InvalidGraph.
  SimplicialGraph(std::vector<std::string> names,
                  const std::vector<std::pair<std::string, std::string>>& edges);

  [[nodiscard]] std::size_t vertex_count() const { return names_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
  [[nodiscard]] const std::string& name(Vertex v) const { return names_.at(v); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] std::optional<Vertex> find(std::string_view name) const;
  // Throws UnknownVertex.
  [[nodiscard]] Vertex vertex(std::string_view name) const;
  [[nodiscard]] VertexSet vertices() const;

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    return adjacency_[u * names_.size() + v] != 0;
  }
  [[nodiscard]] const VertexSet& neighbors(Vertex v) const { return neighbors_.at(v); }
  [[nodiscard]] std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }
  [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;

  [[nodiscard]] std::string format(const VertexSet& s) const;

  friend bool operator==(const SimplicialGraph& a, const SimplicialGraph& b) {
    return a.names_ == b.names_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<char> adjacency_;
  std::vector<VertexSet> neighbors_;
  std::size_t edge_count_ = 0;
};

using GraphPtr = std::shared_ptr<const SimplicialGraph>;

struct ValidationReport {
  bool connected = false;
  bool triangle_free = false;
  std::size_t edge_count = 0;
  bool is_star = false;
  std::optional<Vertex> star_center;
  bool admissible = false;
};

// Never throws.
ValidationReport validate(const SimplicialGraph& g);

// Throws NotAdmissible unless validate(g).admissible.
void require_admissible(const SimplicialGraph& g);

// Open link: the neighbours of v.
VertexSet link(const SimplicialGraph& g, Vertex v);
// Closed star: link plus v.
VertexSet star(const SimplicialGraph& g, Vertex v);
// Intersection of the closed stars of theta's vertices. Throws on empty theta.
VertexSet perp(const SimplicialGraph& g, const VertexSet& theta);

// Connected components of the subgraph induced on `within`, each sorted,
// listed by least member.
std::vector<VertexSet> induced_components(const SimplicialGraph& g, const VertexSet& within);
std::vector<VertexSet> components_minus_vertex(const SimplicialGraph& g, Vertex v);
std::vector<VertexSet> components_minus_star(const SimplicialGraph& g, Vertex v);

// Breadth-first distances from v; unreachable vertices get nullopt.
std::vector<std::optional<std::size_t>> distances_from(const SimplicialGraph& g, Vertex v);
// Throws InvalidArgument when u and v are in different components.
std::size_t graph_distance(const SimplicialGraph& g, Vertex u, Vertex v);

bool is_tree(const SimplicialGraph& g);

}  // namespace raag

#endif  // RAAG_GRAPH_HPP_
