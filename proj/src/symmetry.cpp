#include <algorithm>
#include <deque>
#include <set>

#include "raag/automorphism.hpp"
#include "raag/error.hpp"

namespace raag {

namespace {

void check_size(const SimplicialGraph& g, std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw SizeLimitExceeded("symmetry enumeration is limited to " + std::to_string(max_vertices) +
                            " vertices (graph has " + std::to_string(g.vertex_count()) + ")");
}

// Backtracking over images in vertex order. With `classes` set, members of a
// class must keep their relative order, which picks one symmetry per coset
// of the class-preserving subgroup.
class Search {
 public:
  Search(const SimplicialGraph& g, const VertexClasses* classes) : g_(g), classes_(classes) {
    const std::size_t n = g.vertex_count();
    perm_.assign(n, 0);
    used_.assign(n, 0);
    // Sorted neighbour degrees make a cheap invariant for pruning.
    profile_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex u : g.neighbors(v)) profile_[v].push_back(g.degree(u));
      std::sort(profile_[v].begin(), profile_[v].end());
    }
  }

  std::vector<Permutation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(Vertex x) {
    const std::size_t n = g_.vertex_count();
    if (x == n) {
      found_.push_back(perm_);
      return;
    }
    for (Vertex y = 0; y < n; ++y) {
      if (used_[y] || profile_[x] != profile_[y] || !consistent(x, y)) continue;
      perm_[x] = y;
      used_[y] = 1;
      extend(x + 1);
      used_[y] = 0;
    }
  }

  bool consistent(Vertex x, Vertex y) const {
    for (Vertex u = 0; u < x; ++u) {
      if (g_.adjacent(u, x) != g_.adjacent(perm_[u], y)) return false;
      if (classes_ && classes_->class_of[u] == classes_->class_of[x] && perm_[u] > y) return false;
    }
    return true;
  }

  const SimplicialGraph& g_;
  const VertexClasses* classes_;
  std::vector<std::vector<std::size_t>> profile_;
  Permutation perm_;
  std::vector<char> used_;
  std::vector<Permutation> found_;
};

std::uint64_t factorial(std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace

std::vector<Permutation> graph_symmetries(const SimplicialGraph& g, std::size_t max_vertices) {
  require_admissible(g);
  check_size(g, max_vertices);
  return Search(g, nullptr).run();
}

std::vector<Permutation> quotient_representatives(const SimplicialGraph& g, std::size_t max_vertices) {
  require_admissible(g);
  check_size(g, max_vertices);
  auto classes = vertex_classes(g);
  return Search(g, &classes).run();
}

bool sym0_member(const SimplicialGraph& g, const Permutation& perm) {
  auto classes = vertex_classes(g);
  if (perm.size() != g.vertex_count()) throw InvalidArgument("permutation has the wrong size");
  for (Vertex v = 0; v < perm.size(); ++v)
    if (classes.class_of[v] != classes.class_of.at(perm[v])) return false;
  return true;
}

SymmetryCounts symmetry_counts(const SimplicialGraph& g, std::size_t max_vertices) {
  SymmetryCounts out;
  out.q = quotient_representatives(g, max_vertices).size();
  out.sym0 = 1;
  for (const auto& c : vertex_classes(g).classes) out.sym0 *= factorial(c.size());
  out.sym = out.q * out.sym0;
  return out;
}

std::uint64_t q_order(const SimplicialGraph& g, std::size_t max_vertices) {
  return quotient_representatives(g, max_vertices).size();
}

std::optional<Vertex> sym0_obstruction(const SimplicialGraph& g, const Permutation& perm) {
  auto image = [&](const VertexSet& s) {
    VertexSet out;
    for (Vertex v : s) out.insert(perm.at(v));
    return out;
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 2) continue;
    Join j = maximal_join(g, v);
    if (image(j.vertices()) != j.vertices() || image(j.right) != j.right) return v;
  }
  return std::nullopt;
}

std::optional<std::vector<Automorphism>> realize_transposition(const GraphPtr& g, Vertex u, Vertex w,
                                                               std::size_t max_length) {
  if (u == w || link(*g, u) != link(*g, w))
    throw InvalidArgument(g->name(u) + " and " + g->name(w) + " are not equivalent vertices");

  // Moves: inversions of u, w and the four one-letter transvections between
  // them with either sign (the negative ones conjugated by an inversion).
  std::vector<std::vector<Automorphism>> moves;
  moves.push_back({inversion(g, u)});
  moves.push_back({inversion(g, w)});
  for (auto [x, y] : {std::pair{u, w}, std::pair{w, u}}) {
    moves.push_back({right_transvection(g, x, y)});
    moves.push_back({left_transvection(g, x, y)});
    moves.push_back({inversion(g, y), right_transvection(g, x, y), inversion(g, y)});
    moves.push_back({inversion(g, y), left_transvection(g, x, y), inversion(g, y)});
  }
  std::vector<Automorphism> move_maps;
  for (const auto& m : moves) {
    Automorphism acc = m.front();
    for (std::size_t i = 1; i < m.size(); ++i) acc = compose(acc, m[i]);
    move_maps.push_back(acc);
  }

  using State = std::pair<std::vector<Letter>, std::vector<Letter>>;
  struct Node {
    Automorphism map;
    std::vector<std::size_t> path;
  };
  std::vector<Vertex> swap(g->vertex_count());
  for (Vertex v = 0; v < swap.size(); ++v) swap[v] = v;
  std::swap(swap[u], swap[w]);
  const Automorphism target = symmetry(g, swap);

  std::set<State> seen;
  std::deque<Node> queue;
  Automorphism start = identity(g);
  seen.insert({start.image(u).letters(), start.image(w).letters()});
  queue.push_back({start, {}});
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (equal_in_aut(node.map, target)) {
      std::vector<Automorphism> out;
      for (std::size_t k : node.path) out.insert(out.end(), moves[k].begin(), moves[k].end());
      return out;
    }
    if (node.path.size() >= max_length) continue;
    for (std::size_t k = 0; k < move_maps.size(); ++k) {
      // Precomposing acts as a Nielsen move on the pair of images.
      Automorphism next = compose(node.map, move_maps[k]);
      State key{next.image(u).letters(), next.image(w).letters()};
      if (!seen.insert(key).second) continue;
      auto path = node.path;
      path.push_back(k);
      queue.push_back({std::move(next), std::move(path)});
    }
  }
  return std::nullopt;
}

}  // namespace raag
