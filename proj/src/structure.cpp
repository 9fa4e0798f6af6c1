#include "raag/structure.hpp"

#include <algorithm>

#include "raag/error.hpp"

namespace raag {

bool VertexClasses::is_maximal(std::size_t c) const {
  return std::binary_search(maximal.begin(), maximal.end(), c);
}

std::vector<std::pair<Vertex, Vertex>> StructureReport::gamma0_edges(const SimplicialGraph& g) const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto [u, v] : g.edges())
    if (v0.contains(u) && v0.contains(v)) out.emplace_back(u, v);
  return out;
}

VertexClasses vertex_classes(const SimplicialGraph& g) {
  require_admissible(g);
  VertexClasses vc;
  const std::size_t n = g.vertex_count();
  vc.class_of.assign(n, n);
  for (Vertex v = 0; v < n; ++v) {
    if (vc.class_of[v] != n) continue;
    std::vector<Vertex> members;
    for (Vertex u = v; u < n; ++u) {
      if (g.neighbors(u) == g.neighbors(v)) {
        members.push_back(u);
        vc.class_of[u] = vc.classes.size();
      }
    }
    vc.classes.emplace_back(std::move(members));
  }
  const std::size_t k = vc.classes.size();
  vc.leq.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      vc.leq[i][j] = g.neighbors(vc.classes[i].front()).is_subset_of(g.neighbors(vc.classes[j].front()));
  for (std::size_t i = 0; i < k; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < k && !dominated; ++j)
      dominated = j != i && vc.leq[i][j];
    if (!dominated) vc.maximal.push_back(i);
  }
  return vc;
}

namespace {

VertexSet gamma0_from(const SimplicialGraph& g, const VertexClasses& vc) {
  auto report = validate(g);
  if (report.is_star) return VertexSet{*report.star_center};
  VertexSet v0;
  for (std::size_t c : vc.maximal) v0.insert(vc.classes[c].front());
  return v0;
}

void require_interior(const SimplicialGraph& g, Vertex v) {
  if (link(g, v).size() < 2)
    throw InvalidArgument("vertex '" + g.name(v) + "' is a leaf");
}

void check(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure("structure invariant violated: " + what);
}

}  // namespace

VertexSet gamma0(const SimplicialGraph& g) { return gamma0_from(g, vertex_classes(g)); }

Join maximal_join(const SimplicialGraph& g, Vertex v) {
  require_admissible(g);
  require_interior(g, v);
  VertexSet l = link(g, v);
  return Join{l, perp(g, l)};
}

Join edge_join(const SimplicialGraph& g, Vertex v, Vertex w) {
  require_admissible(g);
  require_interior(g, v);
  require_interior(g, w);
  if (!g.adjacent(v, w))
    throw InvalidArgument("'" + g.name(v) + "' and '" + g.name(w) + "' are not adjacent");
  VertexSet pv = perp(g, link(g, v));
  VertexSet pw = perp(g, link(g, w));
  if (!pv.is_subset_of(link(g, w)) || !pw.is_subset_of(link(g, v)))
    throw VerificationFailure("perp of a link escapes the neighbouring link");
  return Join{pw, pv};
}

bool is_cyclic(const SimplicialGraph& g, Vertex v) {
  require_admissible(g);
  require_interior(g, v);
  return perp(g, link(g, v)) == VertexSet{v};
}

std::vector<ComponentKind> classify_components(const SimplicialGraph& g, Vertex v) {
  require_admissible(g);
  auto dist = distances_from(g, v);
  std::vector<ComponentKind> out;
  for (const auto& comp : components_minus_vertex(g, v)) {
    if (comp.size() == 1) {
      out.push_back(ComponentKind::leaf);
      continue;
    }
    bool twig = std::all_of(comp.begin(), comp.end(), [&](Vertex u) { return *dist[u] <= 2; });
    // An edge whose ends both sit at distance 2 has interior points farther
    // than 2 from v.
    for (Vertex u : comp) {
      for (Vertex x : g.neighbors(u))
        if (comp.contains(x) && *dist[u] == 2 && *dist[x] == 2) twig = false;
    }
    out.push_back(twig ? ComponentKind::twig : ComponentKind::branch);
  }
  return out;
}

bool on_square(const SimplicialGraph& g, Vertex v) {
  // v–a–x–b–v with a ≠ b both neighbours of v and x ≠ v a common neighbour.
  const auto& nbrs = g.neighbors(v).items();
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      auto common = set_intersection(g.neighbors(nbrs[i]), g.neighbors(nbrs[j]));
      common.erase(v);
      if (!common.empty()) return true;
    }
  }
  return false;
}

VertexSet w0(const SimplicialGraph& g) { return structure_report(g).w0; }

StructureReport structure_report(const SimplicialGraph& g) {
  require_admissible(g);
  StructureReport r;
  const std::size_t n = g.vertex_count();
  r.star = validate(g).is_star;
  r.classes = vertex_classes(g);
  r.v0 = gamma0_from(g, r.classes);
  r.counts.resize(n);

  for (Vertex v = 0; v < n; ++v) {
    auto& c = r.counts[v];
    c.delta = static_cast<int>(g.degree(v));
    if (r.v0.contains(v)) c.delta0 = static_cast<int>(set_intersection(g.neighbors(v), r.v0).size());
    auto kinds = classify_components(g, v);
    c.delta_c = static_cast<int>(kinds.size());
    for (auto k : kinds) {
      if (k == ComponentKind::leaf) ++c.leaves;
      else if (k == ComponentKind::twig) ++c.twigs;
      else ++c.branches;
    }
    if (g.degree(v) == 1) r.leaf_vertices.insert(v);
    else r.interior.insert(v);
    if (c.delta_c >= 2) r.separating.insert(v);
  }
  for (Vertex v : r.interior)
    if (perp(g, link(g, v)) == VertexSet{v}) r.cyclic.insert(v);
  for (Vertex v : r.v0)
    if (r.counts[v].leaves > 0 || on_square(g, v)) r.w0.insert(v);

  // Partition and order.
  std::size_t covered = 0;
  for (const auto& cls : r.classes.classes) covered += cls.size();
  check(covered == n, "classes do not partition the vertices");
  for (std::size_t i = 0; i < r.classes.classes.size(); ++i)
    for (std::size_t j = 0; j < r.classes.classes.size(); ++j)
      if (i != j) check(!(r.classes.leq[i][j] && r.classes.leq[j][i]), "class order is not antisymmetric");

  // Γ₀ is connected, holds the cyclic vertices and no leaves.
  check(induced_components(g, r.v0).size() == 1, "Γ₀ is disconnected");
  check(r.cyclic.is_subset_of(r.v0), "a cyclic vertex is missing from V₀");
  check(!r.v0.intersects(r.leaf_vertices), "V₀ contains a leaf");

  if (!r.star) {
    for (Vertex u = 0; u < n; ++u) {
      int in_links = 0;
      int in_perps = 0;
      for (Vertex w : r.v0) {
        if (g.adjacent(u, w)) ++in_links;
        if (perp(g, link(g, w)).contains(u)) ++in_perps;
      }
      check(in_links >= 1, g.name(u) + " lies in no link of a V₀ vertex");
      check(in_perps <= 1, g.name(u) + " lies in two perps of V₀ links");
    }
  }

  for (Vertex v : r.interior)
    for (Vertex w : g.neighbors(v))
      if (r.interior.contains(w))
        check(perp(g, link(g, v)).is_subset_of(link(g, w)), "perp(link v) ⊄ link w on an edge");

  for (Vertex v = 0; v < n; ++v) {
    const auto& c = r.counts[v];
    check(c.delta_c == c.leaves + c.twigs + c.branches, "component tags do not add up");
  }
  return r;
}

}  // namespace raag
