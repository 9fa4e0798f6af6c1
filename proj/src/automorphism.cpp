#include "raag/automorphism.hpp"

#include <algorithm>
#include <sstream>

#include "raag/error.hpp"

namespace raag {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Word gen(const GraphPtr& g, Vertex v, int sign = 1) { return Word::generator(g, v, sign); }

std::vector<Word> identity_images(const GraphPtr& g) {
  std::vector<Word> out;
  out.reserve(g->vertex_count());
  for (Vertex v = 0; v < g->vertex_count(); ++v) out.push_back(gen(g, v));
  return out;
}

void check_vertex(const GraphPtr& g, Vertex v) {
  if (v >= g->vertex_count()) throw UnknownVertex("#" + std::to_string(v));
}

bool is_union_of(const VertexSet& s, const std::vector<VertexSet>& components) {
  std::size_t covered = 0;
  for (const auto& c : components) {
    if (c.is_subset_of(s)) covered += c.size();
    else if (c.intersects(s)) return false;
  }
  return covered == s.size();
}

std::vector<Automorphism> factors_of(const Automorphism& phi) {
  if (const auto* c = std::get_if<kinds::Composite>(&phi.kind())) return c->factors;
  return {phi};
}

}  // namespace

Automorphism::Automorphism(GraphPtr graph, std::vector<Word> images, AutomorphismKind kind)
    : graph_(std::move(graph)), kind_(std::move(kind)) {
  if (images.size() != graph_->vertex_count())
    throw InvalidArgument("automorphism needs one image per generator");
  images_.reserve(images.size());
  for (auto& w : images) {
    if (w.graph() != graph_) throw MismatchedGraphs();
    images_.push_back(normal_form(w));
  }
  for (auto [u, v] : graph_->edges()) {
    if (!equal(images_[u] * images_[v], images_[v] * images_[u]))
      throw VerificationFailure("images of adjacent generators " + graph_->name(u) + ", " +
                                graph_->name(v) + " do not commute");
  }
}

Automorphism identity(const GraphPtr& g) {
  return Automorphism(g, identity_images(g), kinds::Composite{});
}

Automorphism inversion(const GraphPtr& g, Vertex v) {
  check_vertex(g, v);
  auto images = identity_images(g);
  images[v] = gen(g, v, -1);
  return Automorphism(g, std::move(images), kinds::Inversion{v});
}

namespace {

Automorphism conjugate_component(const GraphPtr& g, Vertex v, const VertexSet& component,
                                 ComponentScope scope) {
  auto images = identity_images(g);
  for (Vertex x : component) images[x] = gen(g, v) * images[x] * gen(g, v, -1);
  return Automorphism(g, std::move(images), kinds::PartialConjugation{v, component, scope});
}

}  // namespace

Automorphism partial_conjugation(const GraphPtr& g, Vertex v, const VertexSet& component) {
  check_vertex(g, v);
  if (component.empty() || !is_union_of(component, components_minus_star(*g, v)))
    throw InvalidArgument("not a union of components of Γ − st(" + g->name(v) + ")");
  return conjugate_component(g, v, component, ComponentScope::star_complement);
}

Automorphism component_conjugation(const GraphPtr& g, Vertex v, const VertexSet& component) {
  check_vertex(g, v);
  if (component.empty() || !is_union_of(component, components_minus_vertex(*g, v)))
    throw InvalidArgument("not a union of components of Γ − {" + g->name(v) + "}");
  return conjugate_component(g, v, component, ComponentScope::vertex_complement);
}

namespace {

Automorphism transvection(const GraphPtr& g, Vertex w, Vertex v, TransvectionSide side) {
  check_vertex(g, w);
  check_vertex(g, v);
  if (w == v) throw InvalidArgument("transvection needs two distinct vertices");
  if (!link(*g, w).is_subset_of(star(*g, v)))
    throw InvalidArgument("no transvection " + g->name(w) + " <- " + g->name(v) +
                          ": link(" + g->name(w) + ") is not inside star(" + g->name(v) + ")");
  auto type = g->adjacent(v, w) ? TransvectionType::two : TransvectionType::one;
  if (type == TransvectionType::two && g->degree(w) != 1 && validate(*g).triangle_free)
    throw VerificationFailure("adjacent transvection onto a non-leaf in a triangle-free graph");
  auto images = identity_images(g);
  images[w] = side == TransvectionSide::right ? gen(g, w) * gen(g, v) : gen(g, v) * gen(g, w);
  return Automorphism(g, std::move(images), kinds::Transvection{w, v, side, type});
}

}  // namespace

Automorphism right_transvection(const GraphPtr& g, Vertex w, Vertex v) {
  return transvection(g, w, v, TransvectionSide::right);
}

Automorphism left_transvection(const GraphPtr& g, Vertex w, Vertex v) {
  return transvection(g, w, v, TransvectionSide::left);
}

Automorphism inner(const GraphPtr& g, const Word& by) {
  if (by.graph() != g) throw MismatchedGraphs();
  Word h = normal_form(by);
  auto images = identity_images(g);
  for (auto& x : images) x = h * x * h.inverse();
  return Automorphism(g, std::move(images), kinds::Inner{h.letters()});
}

Automorphism symmetry(const GraphPtr& g, std::vector<Vertex> permutation) {
  const std::size_t n = g->vertex_count();
  if (permutation.size() != n) throw InvalidArgument("permutation has the wrong size");
  std::vector<char> hit(n, 0);
  for (Vertex v : permutation) {
    if (v >= n || hit[v]) throw InvalidArgument("not a permutation");
    hit[v] = 1;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (g->adjacent(u, v) != g->adjacent(permutation[u], permutation[v]))
        throw InvalidArgument("permutation does not preserve adjacency");
  std::vector<Word> images;
  for (Vertex v = 0; v < n; ++v) images.push_back(gen(g, permutation[v]));
  return Automorphism(g, std::move(images), kinds::Symmetry{std::move(permutation)});
}

Word apply(const Automorphism& phi, const Word& w) {
  if (w.graph() != phi.graph()) require_same_graph(w, phi.image(0));
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    const auto& img = phi.image(l.generator).letters();
    if (l.sign > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(it->inverse());
    }
  }
  return normal_form(Word(phi.graph(), std::move(out)));
}

Automorphism compose(const Automorphism& phi, const Automorphism& psi) {
  if (phi.graph() != psi.graph()) throw MismatchedGraphs();
  std::vector<Word> images;
  images.reserve(psi.images().size());
  for (const auto& w : psi.images()) images.push_back(apply(phi, w));
  auto factors = factors_of(phi);
  auto rest = factors_of(psi);
  factors.insert(factors.end(), rest.begin(), rest.end());
  return Automorphism(phi.graph(), std::move(images), kinds::Composite{std::move(factors)});
}

bool equal_in_aut(const Automorphism& phi, const Automorphism& psi) {
  if (phi.graph() != psi.graph()) throw MismatchedGraphs();
  // Images are stored in normal form.
  for (Vertex v = 0; v < phi.graph()->vertex_count(); ++v)
    if (phi.image(v).letters() != psi.image(v).letters()) return false;
  return true;
}

bool is_conjugation_by(const Automorphism& phi, const Word& g) {
  if (g.graph() != phi.graph()) throw MismatchedGraphs();
  for (Vertex v = 0; v < phi.graph()->vertex_count(); ++v)
    if (phi.image(v).letters() != conjugate(g, gen(phi.graph(), v)).letters()) return false;
  return true;
}

std::string describe(const Automorphism& phi) {
  const auto& g = *phi.graph();
  auto names = [&](const VertexSet& s) {
    std::string out;
    for (Vertex v : s) out += (out.empty() ? "" : " ") + g.name(v);
    return out;
  };
  return std::visit(
      overloaded{
          [&](const kinds::Inversion& k) { return "inv(" + g.name(k.v) + ")"; },
          [&](const kinds::PartialConjugation& k) {
            return "pc(" + g.name(k.by) + "; " + names(k.component) + ")";
          },
          [&](const kinds::Transvection& k) {
            const auto& w = g.name(k.target);
            const auto& v = g.name(k.by);
            return "tv(" + w + "<-" + (k.side == TransvectionSide::right ? w + "*" + v : v + "*" + w) + ")";
          },
          [&](const kinds::Symmetry& k) {
            std::string out;
            for (Vertex v = 0; v < k.permutation.size(); ++v)
              if (k.permutation[v] != v)
                out += (out.empty() ? "" : " ") + g.name(v) + "->" + g.name(k.permutation[v]);
            return "sym(" + out + ")";
          },
          [&](const kinds::Inner& k) { return "inner(" + to_string(Word(phi.graph(), k.by)) + ")"; },
          [&](const kinds::Composite& k) {
            if (k.factors.empty()) return std::string("id");
            std::string out;
            for (auto it = k.factors.rbegin(); it != k.factors.rend(); ++it)
              out += (out.empty() ? "" : "; ") + describe(*it);
            return out;
          },
      },
      phi.kind());
}

std::string kind_name(const Automorphism& phi) {
  return std::visit(overloaded{
                        [](const kinds::Inversion&) { return std::string("inversion"); },
                        [](const kinds::PartialConjugation& k) {
                          return std::string(k.scope == ComponentScope::star_complement
                                                 ? "partial_conjugation"
                                                 : "component_conjugation");
                        },
                        [](const kinds::Transvection& k) {
                          std::string side = k.side == TransvectionSide::right ? "right" : "left";
                          return "transvection_" + std::string(k.type == TransvectionType::one ? "I" : "II") +
                                 "_" + side;
                        },
                        [](const kinds::Symmetry&) { return std::string("symmetry"); },
                        [](const kinds::Inner&) { return std::string("inner"); },
                        [](const kinds::Composite&) { return std::string("composite"); },
                    },
                    phi.kind());
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == ';' && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
    if (depth < 0) throw ParseError("unbalanced parentheses in automorphism");
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in automorphism");
  out.push_back(trim(text.substr(start)));
  return out;
}

Vertex vertex_token(const GraphPtr& g, const std::string& token) {
  auto v = g->find(trim(token));
  if (!v) throw ParseError("unknown vertex '" + trim(token) + "' in automorphism");
  return *v;
}

Automorphism parse_factor(const GraphPtr& g, const std::string& text) {
  if (text == "id") return identity(g);
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw ParseError("cannot parse automorphism factor '" + text + "'");
  std::string head = trim(text.substr(0, open));
  std::string body = text.substr(open + 1, text.size() - open - 2);
  try {
    if (head == "inv") return inversion(g, vertex_token(g, body));
    if (head == "inner") return inner(g, parse_word(g, body));
    if (head == "pc") {
      auto semi = body.find(';');
      if (semi == std::string::npos) throw ParseError("pc needs `pc(v; u1 u2 ...)`");
      Vertex v = vertex_token(g, body.substr(0, semi));
      std::istringstream in(body.substr(semi + 1));
      VertexSet comp;
      for (std::string t; in >> t;) comp.insert(vertex_token(g, t));
      if (!comp.intersects(star(*g, v))) return partial_conjugation(g, v, comp);
      return component_conjugation(g, v, comp);
    }
    if (head == "tv") {
      auto arrow = body.find("<-");
      if (arrow == std::string::npos) throw ParseError("tv needs `tv(w<-w*v)` or `tv(w<-v*w)`");
      Vertex w = vertex_token(g, body.substr(0, arrow));
      std::string rhs = body.substr(arrow + 2);
      auto star_pos = rhs.find('*');
      if (star_pos == std::string::npos) throw ParseError("tv needs `w*v` or `v*w`");
      Vertex a = vertex_token(g, rhs.substr(0, star_pos));
      Vertex b = vertex_token(g, rhs.substr(star_pos + 1));
      if (a == w) return right_transvection(g, w, b);
      if (b == w) return left_transvection(g, w, a);
      throw ParseError("transvection right-hand side must contain " + g->name(w));
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown automorphism kind '" + head + "'");
}

}  // namespace

Automorphism parse_automorphism(const GraphPtr& g, std::string_view text) {
  auto pieces = split_top_level(text);
  std::optional<Automorphism> result;
  for (const auto& piece : pieces) {
    if (piece.empty()) throw ParseError("empty automorphism factor");
    auto f = parse_factor(g, piece);
    result = result ? compose(f, *result) : f;
  }
  return *result;
}

std::vector<Automorphism> enumerate_generators(const GraphPtr& g) {
  require_admissible(*g);
  const std::size_t n = g->vertex_count();
  std::vector<Automorphism> out;
  for (Vertex v = 0; v < n; ++v) out.push_back(inversion(g, v));
  for (Vertex v = 0; v < n; ++v) {
    auto comps = components_minus_star(*g, v);
    if (comps.size() < 2) continue;
    for (const auto& c : comps) out.push_back(partial_conjugation(g, v, c));
  }
  for (Vertex w = 0; w < n; ++w)
    for (Vertex v = 0; v < n; ++v)
      if (v != w && link(*g, w).is_subset_of(star(*g, v))) out.push_back(right_transvection(g, w, v));
  return out;
}

std::vector<Automorphism> component_conjugations(const GraphPtr& g, Vertex v) {
  std::vector<Automorphism> out;
  for (const auto& c : components_minus_vertex(*g, v)) out.push_back(component_conjugation(g, v, c));
  return out;
}

std::vector<Automorphism> k0_generators(const GraphPtr& g) {
  require_admissible(*g);
  if (validate(*g).is_star) return {};
  std::vector<Automorphism> out;
  for (Vertex v = 0; v < g->vertex_count(); ++v) {
    std::vector<VertexSet> non_leaf;
    for (auto& c : components_minus_vertex(*g, v))
      if (c.size() > 1) non_leaf.push_back(std::move(c));
    // With a single non-leaf component the conjugation is inner.
    if (non_leaf.size() < 2) continue;
    for (const auto& c : non_leaf) out.push_back(component_conjugation(g, v, c));
  }
  return out;
}

AbelianGenerators abelian_subgroup_generators(const GraphPtr& g) {
  require_admissible(*g);
  if (validate(*g).is_star) throw StarGraph();
  auto sr = structure_report(*g);
  AbelianGenerators out;
  out.base = sr.v0.front();

  for (Vertex x = 0; x < g->vertex_count(); ++x) {
    if (sr.v0.contains(x)) continue;
    std::optional<Vertex> target;
    for (Vertex w : sr.v0) {
      if (g->neighbors(x).is_subset_of(g->neighbors(w))) {
        target = w;
        break;
      }
    }
    if (!target) throw VerificationFailure(g->name(x) + " is below no V₀ class");
    out.a.push_back(left_transvection(g, x, *target));
    out.a.push_back(right_transvection(g, x, *target));
  }

  for (Vertex x : sr.leaf_vertices) out.l.push_back(right_transvection(g, x, g->neighbors(x).front()));

  for (Vertex v : sr.v0) {
    for (const auto& c : components_minus_vertex(*g, v)) {
      if (c.size() > 1 && !c.contains(out.base)) out.c.push_back(component_conjugation(g, v, c));
    }
  }
  return out;
}

namespace {

std::optional<RestrictionResult> evaluate_witness(const Automorphism& phi, const Join& j, const Word& w,
                                                  std::size_t* total_length) {
  VertexSet inside = j.vertices();
  RestrictionResult r{j, normal_form(w), {}};
  Word w_inv = r.witness.inverse();
  std::size_t total = 0;
  for (Vertex x : inside) {
    Word img = conjugate(w_inv, phi.image(x));
    if (!in_special_subgroup(img, inside)) return std::nullopt;
    total += img.size();
    r.restricted_images.emplace(x, std::move(img));
  }
  if (total_length) *total_length = total;
  return r;
}

std::vector<Word> witness_candidates(const Automorphism& phi) {
  const auto& g = phi.graph();
  Word empty(g);
  return std::visit(overloaded{
                        [&](const kinds::PartialConjugation& k) {
                          return std::vector<Word>{empty, gen(g, k.by)};
                        },
                        [&](const kinds::Inner& k) { return std::vector<Word>{Word(g, k.by)}; },
                        [&](const auto&) { return std::vector<Word>{empty}; },
                    },
                    phi.kind());
}

std::optional<Word> find_witness_word(const Automorphism& phi, const Join& j) {
  if (const auto* c = std::get_if<kinds::Composite>(&phi.kind())) {
    Word acc(phi.graph());
    // f0 ∘ … ∘ fk: fold from the innermost factor outwards.
    for (auto it = c->factors.rbegin(); it != c->factors.rend(); ++it) {
      auto w = find_witness_word(*it, j);
      if (!w) return std::nullopt;
      acc = normal_form(apply(*it, acc) * *w);
    }
    return acc;
  }
  std::optional<Word> best;
  std::size_t best_len = 0;
  for (const auto& cand : witness_candidates(phi)) {
    std::size_t len = 0;
    if (evaluate_witness(phi, j, cand, &len) && (!best || len < best_len)) {
      best = cand;
      best_len = len;
    }
  }
  return best;
}

}  // namespace

std::optional<RestrictionResult> find_join_witness(const Automorphism& phi, const Join& j) {
  auto w = find_witness_word(phi, j);
  if (!w) return std::nullopt;
  return evaluate_witness(phi, j, *w, nullptr);
}

RestrictionResult verify_preserves_join(const Automorphism& phi, const Join& j) {
  auto r = find_join_witness(phi, j);
  if (!r) {
    const auto& g = *phi.graph();
    throw VerificationFailure(describe(phi) + " does not carry the join " + g.format(j.left) + " * " +
                              g.format(j.right) + " to a conjugate of itself");
  }
  return *r;
}

std::map<Vertex, Word> project(const Automorphism& phi, Vertex v) {
  const auto& g = phi.graph();
  Join j = maximal_join(*g, v);
  auto r = verify_preserves_join(phi, j);
  std::map<Vertex, Word> out;
  for (Vertex x : j.left) {
    std::vector<Letter> kept;
    for (const auto& l : r.restricted_images.at(x).letters())
      if (!j.right.contains(l.generator)) kept.push_back(l);
    out.emplace(x, normal_form(Word(g, std::move(kept))));
  }
  return out;
}

std::optional<Word> projection_conjugator(const std::map<Vertex, Word>& projection,
                                          const std::vector<Word>& candidates) {
  for (const auto& c : candidates) {
    bool ok = true;
    for (const auto& [x, img] : projection) {
      if (img.letters() != conjugate(c, gen(img.graph(), x)).letters()) {
        ok = false;
        break;
      }
    }
    if (ok) return normal_form(c);
  }
  return std::nullopt;
}

}  // namespace raag
