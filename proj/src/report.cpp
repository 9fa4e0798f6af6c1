#include "raag/report.hpp"

#include <map>

#include "raag/automorphism.hpp"
#include "raag/error.hpp"

namespace raag {

namespace {

Json names(const SimplicialGraph& g, const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(g.name(v));
  return out;
}

Json edge_list(const SimplicialGraph& g, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back({g.name(u), g.name(v)});
  return out;
}

Json describe_all(const std::vector<Automorphism>& autos) {
  Json out = Json::array();
  for (const auto& a : autos) out.push_back(describe(a));
  return out;
}

const char* kind_label(ComponentKind k) {
  switch (k) {
    case ComponentKind::leaf:
      return "leaf";
    case ComponentKind::twig:
      return "twig";
    case ComponentKind::branch:
      return "branch";
  }
  return "";
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json graph_json(const SimplicialGraph& g) {
  return {{"vertices", g.names()}, {"edges", edge_list(g, g.edges())}};
}

Json validation_json(const ValidationReport& v, const SimplicialGraph& g) {
  return {
      {"connected", v.connected},
      {"triangle_free", v.triangle_free},
      {"edge_count", v.edge_count},
      {"vertex_count", g.vertex_count()},
      {"is_star", v.is_star},
      {"star_center", v.star_center ? Json(g.name(*v.star_center)) : Json(nullptr)},
      {"admissible", v.admissible},
  };
}

Json structure_json(const SimplicialGraph& g, const StructureReport& sr) {
  Json classes = Json::array();
  for (const auto& c : sr.classes.classes) classes.push_back(names(g, c));
  Json order = Json::array();
  const auto& cl = sr.classes;
  for (std::size_t i = 0; i < cl.classes.size(); ++i)
    for (std::size_t j = 0; j < cl.classes.size(); ++j)
      if (i != j && cl.leq[i][j]) order.push_back({g.name(cl.classes[i].front()), g.name(cl.classes[j].front())});

  Json vertices = Json::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& c = sr.counts[v];
    Json kinds = Json::array();
    for (auto k : classify_components(g, v)) kinds.push_back(kind_label(k));
    vertices[g.name(v)] = {
        {"delta", c.delta},       {"delta0", optional_json(c.delta0)}, {"delta_C", c.delta_c},
        {"leaves", c.leaves},     {"twigs", c.twigs},                  {"branches", c.branches},
        {"components", kinds},
    };
  }

  Json joins = Json::object();
  for (Vertex v : sr.interior) {
    Join j = maximal_join(g, v);
    joins[g.name(v)] = {{"link", names(g, j.left)}, {"perp", names(g, j.right)}};
  }

  return {
      {"star", sr.star},
      {"classes", classes},
      {"class_order", order},
      {"V0", names(g, sr.v0)},
      {"gamma0_edges", edge_list(g, sr.gamma0_edges(g))},
      {"cyclic", names(g, sr.cyclic)},
      {"separating", names(g, sr.separating)},
      {"leaves", names(g, sr.leaf_vertices)},
      {"interior", names(g, sr.interior)},
      {"W0", names(g, sr.w0)},
      {"maximal_joins", joins},
      {"vertices", vertices},
  };
}

Json bounds_json(const SimplicialGraph& g, const BoundsReport& b) {
  Json dims = nullptr;
  if (b.outer_space_dims) {
    const auto& d = *b.outer_space_dims;
    dims = {{"num_leaves", d.num_leaves}, {"k", d.k}, {"dim_Q", d.dim_q}, {"spine_dim_bound", d.spine_dim_bound}};
  }
  Json tree = nullptr;
  if (b.tree_bounds) tree = {{"lower", b.tree_bounds->lower}, {"upper", b.tree_bounds->upper}};
  return {
      {"rank_K0", b.rank_k0},
      {"rank_KP", b.rank_kp},
      {"rank_G", optional_json(b.rank_g)},
      {"vcd_lower", b.vcd_lower},
      {"vcd_upper_HS", b.vcd_upper_hs},
      {"vcd_upper_better", b.vcd_upper_better},
      {"vcd_exact", optional_json(b.vcd_exact)},
      {"outer_space_dims", dims},
      {"tree_bounds", tree},
      {"applied_formulas", b.applied_formulas},
      {"negative_summands", names(g, b.negative_summands)},
  };
}

Json checks_json(const std::vector<CheckResult>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back({{"name", c.name},
                   {"status", c.pass ? "pass" : "fail"},
                   {c.pass ? "witness" : "counterexample", c.detail}});
  }
  return out;
}

Json generators_json(const GraphPtr& g, const AnalyzeOptions& options) {
  auto gens = enumerate_generators(g);
  std::map<std::string, int> counts;
  for (const auto& a : gens) ++counts[kind_name(a)];
  Json out = {
      {"counts", counts},
      {"laurence", describe_all(gens)},
      {"k0", describe_all(k0_generators(g))},
  };
  if (validate(*g).is_star) {
    out["abelian"] = nullptr;
  } else {
    auto ag = abelian_subgroup_generators(g);
    out["abelian"] = {{"A", describe_all(ag.a)},
                      {"L", describe_all(ag.l)},
                      {"C", describe_all(ag.c)},
                      {"base", g->name(ag.base)}};
  }
  if (options.skip_symmetries) {
    out["symmetries"] = {{"skipped", "--skip-symmetries"}};
  } else {
    try {
      auto s = symmetry_counts(*g, options.max_sym_vertices);
      out["symmetries"] = {{"sym", s.sym}, {"sym0", s.sym0}, {"q", s.q}};
    } catch (const SizeLimitExceeded& e) {
      out["symmetries"] = {{"skipped", e.what()}};
    }
  }
  return out;
}

Json analyze_report(const ParsedGraph& parsed, const AnalyzeOptions& options,
                    const std::vector<CheckResult>& verifications) {
  const auto& g = *parsed.graph;
  auto v = validate(g);
  Json out = {
      {"graph", graph_json(g)},
      {"validation", validation_json(v, g)},
      {"structure", nullptr},
      {"generators", nullptr},
      {"bounds", nullptr},
      {"verifications", checks_json(verifications)},
      {"warnings", parsed.warnings},
  };
  if (!v.admissible) return out;
  auto sr = structure_report(g);
  out["structure"] = structure_json(g, sr);
  out["generators"] = generators_json(parsed.graph, options);
  out["bounds"] = bounds_json(g, vcd_bounds(g, sr));
  return out;
}

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace raag
