#ifndef RAAG_TESTS_SUPPORT_HPP_
#define RAAG_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/graph_io.hpp"

namespace raag::testing {

// Edge list text, e.g. "a b\nb c".
inline GraphPtr graph(const std::string& text) { return parse_graph_text(text).graph; }

inline GraphPtr square() { return graph("a b\nb c\nc d\nd a\n"); }
inline GraphPtr pentagon() { return graph("a b\nb c\nc d\nd e\ne a\n"); }
inline GraphPtr path3() { return graph("a b\nb c\n"); }
// Centre v with legs v-a-b and v-c-d.
inline GraphPtr spider() { return make_family("spider:2"); }

inline std::string vertex_name(std::size_t i) {
  std::string s = std::to_string(i);
  return "x" + std::string(s.size() < 2 ? 2 - s.size() : 0, '0') + s;
}

inline GraphPtr from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(vertex_name(i));
  std::vector<std::pair<std::string, std::string>> named;
  for (auto [u, v] : edges) named.emplace_back(names[u], names[v]);
  return std::make_shared<const SimplicialGraph>(names, named);
}

// Random spanning tree plus extra edges that close no triangle.
inline GraphPtr random_connected_triangle_free(std::mt19937_64& rng, std::size_t n, double extra = 0.3) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto add = [&](std::size_t u, std::size_t v) {
    adj[u][v] = adj[v][u] = 1;
    edges.emplace_back(u, v);
  };
  for (std::size_t i = 1; i < n; ++i) add(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i);
  std::bernoulli_distribution coin(extra);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (adj[u][v] || !coin(rng)) continue;
      bool triangle = false;
      for (std::size_t w = 0; w < n && !triangle; ++w) triangle = adj[u][w] && adj[v][w];
      if (!triangle) add(u, v);
    }
  }
  return from_edges(n, edges);
}

inline GraphPtr random_tree(std::mt19937_64& rng, std::size_t n) { return random_connected_triangle_free(rng, n, 0.0); }

// Every connected triangle-free graph on 1..max_n vertices, one per
// isomorphism class.
inline std::vector<GraphPtr> all_connected_triangle_free(std::size_t max_n) {
  std::vector<GraphPtr> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::set<std::vector<char>> seen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (mask >> k & 1) edges.push_back(slots[k]);
      auto g = from_edges(n, edges);
      auto v = validate(*g);
      if (!v.connected || !v.triangle_free) continue;
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::vector<char> best;
      do {
        std::vector<char> code;
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t w = 0; w < n; ++w) code.push_back(g->adjacent(perm[u], perm[w]) ? 1 : 0);
        if (best.empty() || code < best) best = code;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (seen.insert(best).second) out.push_back(g);
    }
  }
  return out;
}

}  // namespace raag::testing

#endif  // RAAG_TESTS_SUPPORT_HPP_
