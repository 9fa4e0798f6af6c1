#include "raag/graph.hpp"

#include <algorithm>
#include <iterator>
#include <queue>

#include "raag/error.hpp"

namespace raag {

VertexSet::VertexSet(std::initializer_list<Vertex> init) : VertexSet(std::vector<Vertex>(init)) {}

VertexSet::VertexSet(std::vector<Vertex> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it == items_.end() || *it != v) items_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it != items_.end() && *it == v) items_.erase(it);
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

SimplicialGraph::SimplicialGraph(std::vector<std::string> names,
                                 const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end())
    throw InvalidGraph("duplicate vertex name");
  for (const auto& n : names_)
    if (n.empty()) throw InvalidGraph("empty vertex name");

  const std::size_t n = names_.size();
  adjacency_.assign(n * n, 0);
  neighbors_.resize(n);
  for (const auto& [a, b] : edges) {
    auto u = find(a);
    auto v = find(b);
    if (!u || !v) throw InvalidGraph("edge " + a + " " + b + " names an undeclared vertex");
    if (*u == *v) throw InvalidGraph("loop at vertex '" + a + "'");
    if (adjacency_[*u * n + *v]) continue;
    adjacency_[*u * n + *v] = adjacency_[*v * n + *u] = 1;
    neighbors_[*u].insert(*v);
    neighbors_[*v].insert(*u);
    ++edge_count_;
  }
}

std::optional<Vertex> SimplicialGraph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

Vertex SimplicialGraph::vertex(std::string_view name) const {
  auto v = find(name);
  if (!v) throw UnknownVertex(std::string(name));
  return *v;
}

VertexSet SimplicialGraph::vertices() const {
  std::vector<Vertex> all(names_.size());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return VertexSet(std::move(all));
}

std::vector<std::pair<Vertex, Vertex>> SimplicialGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < names_.size(); ++u)
    for (Vertex v : neighbors_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string SimplicialGraph::format(const VertexSet& s) const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ", ";
    out += names_.at(v);
    first = false;
  }
  return out + "}";
}

namespace {

void check_vertex(const SimplicialGraph& g, Vertex v) {
  if (v >= g.vertex_count()) throw UnknownVertex("#" + std::to_string(v));
}

}  // namespace

ValidationReport validate(const SimplicialGraph& g) {
  ValidationReport r;
  const std::size_t n = g.vertex_count();
  r.edge_count = g.edge_count();
  r.connected = n > 0 && induced_components(g, g.vertices()).size() == 1;

  r.triangle_free = true;
  for (auto [u, v] : g.edges()) {
    if (g.neighbors(u).intersects(g.neighbors(v))) {
      r.triangle_free = false;
      break;
    }
  }

  // A star needs an interior centre, so at least three vertices.
  if (n >= 3) {
    for (Vertex c = 0; c < n && !r.is_star; ++c) {
      if (g.degree(c) != n - 1) continue;
      bool others_are_leaves = true;
      for (Vertex u = 0; u < n; ++u)
        if (u != c && g.degree(u) != 1) others_are_leaves = false;
      if (others_are_leaves) {
        r.is_star = true;
        r.star_center = c;
      }
    }
  }
  r.admissible = r.connected && r.triangle_free && r.edge_count >= 2;
  return r;
}

void require_admissible(const SimplicialGraph& g) {
  auto r = validate(g);
  if (r.admissible) return;
  std::string why;
  if (!r.connected) why = "graph is disconnected";
  else if (!r.triangle_free) why = "graph contains a triangle";
  else why = "graph has fewer than two edges";
  throw NotAdmissible(why);
}

VertexSet link(const SimplicialGraph& g, Vertex v) {
  check_vertex(g, v);
  return g.neighbors(v);
}

VertexSet star(const SimplicialGraph& g, Vertex v) {
  VertexSet s = link(g, v);
  s.insert(v);
  return s;
}

VertexSet perp(const SimplicialGraph& g, const VertexSet& theta) {
  if (theta.empty()) throw InvalidArgument("perp of an empty vertex set");
  VertexSet out = star(g, theta.front());
  for (Vertex v : theta) out = set_intersection(out, star(g, v));
  return out;
}

std::vector<VertexSet> induced_components(const SimplicialGraph& g, const VertexSet& within) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexSet> out;
  for (Vertex root : within) {
    if (seen[root]) continue;
    std::vector<Vertex> members;
    std::queue<Vertex> queue;
    queue.push(root);
    seen[root] = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      members.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w] && within.contains(w)) {
          seen[w] = 1;
          queue.push(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  // Roots are visited in increasing order, so components already come
  // sorted by least member.
  return out;
}

std::vector<VertexSet> components_minus_vertex(const SimplicialGraph& g, Vertex v) {
  check_vertex(g, v);
  VertexSet rest = g.vertices();
  rest.erase(v);
  return induced_components(g, rest);
}

std::vector<VertexSet> components_minus_star(const SimplicialGraph& g, Vertex v) {
  return induced_components(g, set_difference(g.vertices(), star(g, v)));
}

std::vector<std::optional<std::size_t>> distances_from(const SimplicialGraph& g, Vertex v) {
  check_vertex(g, v);
  std::vector<std::optional<std::size_t>> dist(g.vertex_count());
  std::queue<Vertex> queue;
  dist[v] = 0;
  queue.push(v);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

std::size_t graph_distance(const SimplicialGraph& g, Vertex u, Vertex v) {
  check_vertex(g, v);
  auto d = distances_from(g, u)[v];
  if (!d) throw InvalidArgument("vertices lie in different components");
  return *d;
}

bool is_tree(const SimplicialGraph& g) {
  auto r = validate(g);
  return r.connected && g.edge_count() + 1 == g.vertex_count();
}

}  // namespace raag
