#include <doctest.h>

#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/graph_io.hpp"
#include "support.hpp"

using namespace raag;
using raag::testing::graph;

namespace {

VertexSet vs(const SimplicialGraph& g, std::initializer_list<const char*> names) {
  VertexSet out;
  for (const char* n : names) out.insert(g.vertex(n));
  return out;
}

}  // namespace

TEST_CASE("vertex sets stay sorted and deduplicated") {
  VertexSet s{3, 1, 3, 2};
  CHECK(s.items() == std::vector<Vertex>{1, 2, 3});
  s.insert(0);
  s.erase(2);
  CHECK(s.items() == std::vector<Vertex>{0, 1, 3});
  CHECK(VertexSet{1, 3}.is_subset_of(s));
  CHECK_FALSE(VertexSet{2}.is_subset_of(s));
  CHECK(set_union(VertexSet{1}, VertexSet{4}) == VertexSet{1, 4});
  CHECK(set_intersection(VertexSet{1, 2}, VertexSet{2, 3}) == VertexSet{2});
  CHECK(set_difference(VertexSet{1, 2}, VertexSet{2, 3}) == VertexSet{1});
  CHECK(s.intersects(VertexSet{3, 9}));
  CHECK_FALSE(s.intersects(VertexSet{}));
}

TEST_CASE("graph construction") {
  auto g = graph("b a\nc b\n");
  CHECK(g->names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(g->edge_count() == 2);
  CHECK(g->adjacent(g->vertex("a"), g->vertex("b")));
  CHECK(g->adjacent(g->vertex("b"), g->vertex("a")));
  CHECK_FALSE(g->adjacent(g->vertex("a"), g->vertex("c")));
  CHECK_THROWS_AS(g->vertex("z"), UnknownVertex);
  CHECK_FALSE(g->find("z").has_value());

  CHECK_THROWS_AS(SimplicialGraph({"a", "a"}, {}), InvalidGraph);
  CHECK_THROWS_AS(SimplicialGraph({"a", "b"}, {{"a", "a"}}), InvalidGraph);
  CHECK_THROWS_AS(SimplicialGraph({"a"}, {{"a", "b"}}), InvalidGraph);
  SimplicialGraph dup({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("validate") {
  auto p = validate(*testing::path3());
  CHECK(p.connected);
  CHECK(p.triangle_free);
  CHECK(p.edge_count == 2);
  CHECK(p.is_star);
  CHECK(*p.star_center == 1);
  CHECK(p.admissible);

  auto t = validate(*graph("a b\nb c\nc a\n"));
  CHECK_FALSE(t.triangle_free);
  CHECK_FALSE(t.admissible);

  auto sq = validate(*testing::square());
  CHECK(sq.admissible);
  CHECK_FALSE(sq.is_star);

  auto single_edge = validate(*graph("a b\n"));
  CHECK(single_edge.connected);
  CHECK_FALSE(single_edge.admissible);

  auto disconnected = validate(*graph("a b\nb c\nd\n"));
  CHECK_FALSE(disconnected.connected);
  CHECK_FALSE(disconnected.admissible);

  CHECK_THROWS_AS(require_admissible(*graph("a b\n")), NotAdmissible);
}

TEST_CASE("links, stars and perps") {
  auto sq = testing::square();
  auto& g = *sq;
  Vertex a = g.vertex("a");
  CHECK(link(g, a) == vs(g, {"b", "d"}));
  CHECK(star(g, a) == vs(g, {"a", "b", "d"}));
  CHECK(perp(g, VertexSet{a}) == star(g, a));
  CHECK(perp(g, vs(g, {"b", "d"})) == vs(g, {"a", "c"}));
  CHECK_THROWS_AS(perp(g, VertexSet{}), InvalidArgument);
  CHECK_THROWS_AS(link(g, 17), UnknownVertex);

  auto pent = testing::pentagon();
  CHECK(star(*pent, pent->vertex("a")) == vs(*pent, {"a", "b", "e"}));
  CHECK(perp(*pent, vs(*pent, {"a", "b"})) == vs(*pent, {"a", "b"}));

  auto p = testing::path3();
  CHECK(link(*p, p->vertex("b")) == vs(*p, {"a", "c"}));
  CHECK(star(*p, p->vertex("a")) == vs(*p, {"a", "b"}));

  auto t = make_family("nmtree:2,3");
  CHECK(link(*t, t->vertex("v")) == vs(*t, {"v1", "v2", "w"}));
}

TEST_CASE("components") {
  auto t = make_family("nmtree:2,3");
  auto comps = components_minus_vertex(*t, t->vertex("v"));
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == vs(*t, {"v1"}));
  CHECK(comps[1] == vs(*t, {"v2"}));
  CHECK(comps[2] == vs(*t, {"w", "w1", "w2", "w3"}));

  auto sq = testing::square();
  CHECK(components_minus_vertex(*sq, 0).size() == 1);
  auto sq_star = components_minus_star(*sq, sq->vertex("a"));
  REQUIRE(sq_star.size() == 1);
  CHECK(sq_star[0] == vs(*sq, {"c"}));

  auto sp = testing::spider();
  auto sp_vertex = components_minus_vertex(*sp, sp->vertex("v"));
  REQUIRE(sp_vertex.size() == 2);
  CHECK(sp_vertex[0] == vs(*sp, {"a", "b"}));
  CHECK(sp_vertex[1] == vs(*sp, {"c", "d"}));
  auto sp_star = components_minus_star(*sp, sp->vertex("v"));
  REQUIRE(sp_star.size() == 2);
  CHECK(sp_star[0] == vs(*sp, {"b"}));
  CHECK(sp_star[1] == vs(*sp, {"d"}));

  auto p = testing::path3();
  CHECK(components_minus_star(*p, p->vertex("b")).empty());
}

TEST_CASE("distances") {
  auto pent = testing::pentagon();
  CHECK(graph_distance(*pent, pent->vertex("a"), pent->vertex("c")) == 2);
  CHECK(graph_distance(*pent, pent->vertex("a"), pent->vertex("a")) == 0);
  auto t = make_family("nmtree:2,3");
  CHECK(graph_distance(*t, t->vertex("v1"), t->vertex("w3")) == 3);
  CHECK_THROWS_AS(graph_distance(*graph("a b\nc d\n"), 0, 2), InvalidArgument);
  CHECK(is_tree(*t));
  CHECK_FALSE(is_tree(*pent));
}

TEST_CASE("text and JSON graph formats") {
  auto parsed = parse_graph_text("# comment\na b  # trailing\n\nb c\na b\nd e\ne f\nlonely\n");
  CHECK(parsed.graph->vertex_count() == 7);
  CHECK(parsed.graph->edge_count() == 4);
  REQUIRE(parsed.warnings.size() == 1);
  CHECK(parsed.warnings[0] == "duplicate edge a b ignored");
  CHECK_THROWS_AS(parse_graph_text("a b c\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("a a\n"), ParseError);

  auto j = parse_graph(R"({"vertices": ["a", "b", "c", "z"], "edges": [["a", "b"], ["b", "c"]]})");
  CHECK(j.graph->vertex_count() == 4);
  CHECK(j.graph->edge_count() == 2);
  CHECK(parse_graph_json(R"({"edges": [["a", "b"]]})").graph->vertex_count() == 2);
  CHECK_THROWS_AS(parse_graph_json("{"), ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"edges": [["a"]]})"), ParseError);
  CHECK_THROWS_AS(parse_graph_json("[1]"), ParseError);
  CHECK_THROWS_AS(load_graph("/nonexistent/graph.txt"), std::filesystem::filesystem_error);
}

TEST_CASE("families") {
  CHECK(make_family("path:4")->edge_count() == 3);
  CHECK(make_family("cycle:5")->edge_count() == 5);
  CHECK(make_family("cycle:12")->name(0) == "c01");
  auto t = make_family("nmtree:2,3");
  CHECK(t->vertex_count() == 7);
  CHECK(t->edge_count() == 6);
  CHECK(make_family("spider:3")->vertex_count() == 7);
  CHECK(make_family("spider:12")->vertex_count() == 25);
  CHECK(make_family("join:3,4")->edge_count() == 12);
  auto z = make_family("overlap:2,3");
  CHECK(z->vertex_count() == 8);
  CHECK(z->edge_count() == 9);
  CHECK_THROWS_AS(make_family("cube:3"), ParseError);
  CHECK_THROWS_AS(make_family("path"), ParseError);
  CHECK_THROWS_AS(make_family("nmtree:2"), ParseError);
  CHECK_THROWS_AS(make_family("cycle:2"), ParseError);
  CHECK_THROWS_AS(make_family("join:a,b"), ParseError);
}

TEST_CASE("graph properties on random admissible graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto gp = testing::random_connected_triangle_free(rng, 3 + trial % 9);
    const auto& g = *gp;
    std::size_t degrees = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      degrees += g.degree(v);
      CHECK_FALSE(link(g, v).contains(v));
      CHECK(star(g, v) == set_union(link(g, v), VertexSet{v}));

      auto minus_vertex = components_minus_vertex(g, v);
      std::size_t non_singleton = 0;
      for (const auto& c : minus_vertex) non_singleton += c.size() > 1;
      CHECK(components_minus_star(g, v).size() >= non_singleton);
      CHECK(minus_vertex.size() <= g.degree(v));
    }
    CHECK(degrees == 2 * g.edge_count());

    // Monotonicity and the triangle-free containment on small subsets.
    std::uniform_int_distribution<Vertex> pick(0, g.vertex_count() - 1);
    for (int k = 0; k < 20; ++k) {
      VertexSet small{pick(rng)};
      VertexSet big = small;
      big.insert(pick(rng));
      big.insert(pick(rng));
      CHECK(perp(g, big).is_subset_of(perp(g, small)));
    }
    for (auto [u, v] : g.edges()) {
      VertexSet theta{u, v};
      CHECK(perp(g, theta).is_subset_of(theta));
      for (Vertex x = 0; x < g.vertex_count(); ++x) {
        VertexSet wider = theta;
        wider.insert(x);
        CHECK(perp(g, wider).is_subset_of(wider));
        wider.insert(pick(rng));
        CHECK(perp(g, wider).is_subset_of(wider));
      }
    }
  }
}

TEST_CASE("small graph census") {
  auto all = testing::all_connected_triangle_free(5);
  CHECK(all.size() == 12);
}
