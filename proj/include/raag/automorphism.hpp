#ifndef RAAG_AUTOMORPHISM_HPP_
#define RAAG_AUTOMORPHISM_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "raag/graph.hpp"
#include "raag/structure.hpp"
#include "raag/word.hpp"

namespace raag {

class Automorphism;

// Which complement a partial conjugation's component was taken from.
enum class ComponentScope {
  star_complement,    // a union of components of Γ − st(v)
  vertex_complement,  // a union of components of Γ − {v}
};

enum class TransvectionSide { right, left };  // w ↦ w·v  or  w ↦ v·w
enum class TransvectionType { one, two };     // two: v and w adjacent (w is a leaf)

namespace kinds {

struct Inversion {
  Vertex v;
};

// Every generator of `component` is conjugated by `by`: x ↦ by·x·by⁻¹.
struct PartialConjugation {
  Vertex by;
  VertexSet component;
  ComponentScope scope;
};

struct Transvection {
  Vertex target;
  Vertex by;
  TransvectionSide side;
  TransvectionType type;
};

struct Symmetry {
  std::vector<Vertex> permutation;  // vertex -> image vertex
};

// x ↦ by·x·by⁻¹ for every generator.
struct Inner {
  std::vector<Letter> by;
};

// factors[0] ∘ factors[1] ∘ … ; the last factor acts first. Empty means
// the identity.
struct Composite {
  std::vector<Automorphism> factors;
};

}  // namespace kinds

using AutomorphismKind = std::variant<kinds::Inversion, kinds::PartialConjugation,
                                      kinds::Transvection, kinds::Symmetry, kinds::Inner,
                                      kinds::Composite>;

// An endomorphism of A_Γ given by generator images, certified at
// construction to respect every commutation relation. Images are kept in
// normal form.
class Automorphism {
 public:
  // Throws VerificationFailure if two adjacent generators have
  // non-commuting images.
  Automorphism(GraphPtr graph, std::vector<Word> images, AutomorphismKind kind);

  [[nodiscard]] const GraphPtr& graph() const { return graph_; }
  [[nodiscard]] const std::vector<Word>& images() const { return images_; }
  [[nodiscard]] const Word& image(Vertex v) const { return images_.at(v); }
  [[nodiscard]] const AutomorphismKind& kind() const { return kind_; }

 private:
  GraphPtr graph_;
  std::vector<Word> images_;
  AutomorphismKind kind_;
};

Automorphism identity(const GraphPtr& g);
Automorphism inversion(const GraphPtr& g, Vertex v);
// `component` must be a nonempty union of components of Γ − st(v).
Automorphism partial_conjugation(const GraphPtr& g, Vertex v, const VertexSet& component);
// `component` must be a nonempty union of components of Γ − {v}.
Automorphism component_conjugation(const GraphPtr& g, Vertex v, const VertexSet& component);
// w ↦ w·v (right) or w ↦ v·w (left); needs star(v) ⊇ link(w), v ≠ w.
Automorphism right_transvection(const GraphPtr& g, Vertex w, Vertex v);
Automorphism left_transvection(const GraphPtr& g, Vertex w, Vertex v);
Automorphism inner(const GraphPtr& g, const Word& by);
// Throws InvalidArgument unless `permutation` preserves adjacency.
Automorphism symmetry(const GraphPtr& g, std::vector<Vertex> permutation);

// Substitutes images letter by letter and normalises.
Word apply(const Automorphism& phi, const Word& w);
// phi ∘ psi: x ↦ phi(psi(x)).
Automorphism compose(const Automorphism& phi, const Automorphism& psi);
bool equal_in_aut(const Automorphism& phi, const Automorphism& psi);
bool is_conjugation_by(const Automorphism& phi, const Word& g);

// Short human-readable description, e.g. `tv(a<-a*b)`.
std::string describe(const Automorphism& phi);
std::string kind_name(const Automorphism& phi);

// `inv(v)`, `pc(v; u1 u2 …)`, `tv(w<-w*v)`, `tv(w<-v*w)`, `inner(word)`,
// `id`; factors joined by `;` act left to right (`A;B` applies A first).
Automorphism parse_automorphism(const GraphPtr& g, std::string_view text);

// Laurence generators other than symmetries and inner automorphisms:
// inversions, partial conjugations over Γ − st(v) when it has at least two
// components, and right transvections. Throws NotAdmissible.
std::vector<Automorphism> enumerate_generators(const GraphPtr& g);

// Conjugation by v of each component of Γ − {v}, leaf components included.
std::vector<Automorphism> component_conjugations(const GraphPtr& g, Vertex v);

// Spanning set of the kernel of the restriction map: for every vertex v
// with at least two non-leaf components in Γ − {v}, the conjugation of each
// of them by v. Empty for stars.
std::vector<Automorphism> k0_generators(const GraphPtr& g);

struct AbelianGenerators {
  std::vector<Automorphism> a;  // left and right transvections onto V₀
  std::vector<Automorphism> l;  // leaf transvections
  std::vector<Automorphism> c;  // component conjugations by V₀ vertices
  Vertex base = 0;              // C omits components containing this vertex
};

// Throws StarGraph for stars.
AbelianGenerators abelian_subgroup_generators(const GraphPtr& g);

struct RestrictionResult {
  Join join;
  Word witness;
  std::map<Vertex, Word> restricted_images;  // x ↦ witness⁻¹·phi(x)·witness
};

// Looks for g with g⁻¹·phi(A_J)·g ⊆ A_J, trying the candidates dictated by
// the generator kind and composing them across composite factors.
std::optional<RestrictionResult> find_join_witness(const Automorphism& phi, const Join& j);
// As above but throws VerificationFailure when no witness exists.
RestrictionResult verify_preserves_join(const Automorphism& phi, const Join& j);

// Induced map on F⟨link v⟩: restricted images with perp(link v) letters
// deleted. v must be interior.
std::map<Vertex, Word> project(const Automorphism& phi, Vertex v);

// A candidate c with projection(x) = c·x·c⁻¹ for every x in the link, if any.
std::optional<Word> projection_conjugator(const std::map<Vertex, Word>& projection,
                                          const std::vector<Word>& candidates);

// ---- graph symmetries ----

using Permutation = std::vector<Vertex>;

// Every adjacency-preserving permutation, in lexicographic order. Throws
// SizeLimitExceeded above max_vertices.
std::vector<Permutation> graph_symmetries(const SimplicialGraph& g, std::size_t max_vertices = 16);

// Symmetries that are order-preserving on every vertex class: one per coset
// of the class-preserving subgroup.
std::vector<Permutation> quotient_representatives(const SimplicialGraph& g,
                                                  std::size_t max_vertices = 16);

// True iff perm maps every vertex into its own class.
bool sym0_member(const SimplicialGraph& g, const Permutation& perm);

struct SymmetryCounts {
  std::uint64_t sym = 0;
  std::uint64_t sym0 = 0;
  std::uint64_t q = 0;
};

// |Sym⁰| is the product of factorials of class sizes; |Q| counts quotient
// representatives.
SymmetryCounts symmetry_counts(const SimplicialGraph& g, std::size_t max_vertices = 16);
std::uint64_t q_order(const SimplicialGraph& g, std::size_t max_vertices = 16);

// An interior vertex v whose J_v or perp(link v) the symmetry moves; exists
// exactly when the symmetry is not class-preserving.
std::optional<Vertex> sym0_obstruction(const SimplicialGraph& g, const Permutation& perm);

// Writes the transposition of equivalent vertices u, w as a product of
// inversions and transvections among u, w (breadth-first up to max_length
// moves). Returned factors compose left to right as in compose().
std::optional<std::vector<Automorphism>> realize_transposition(const GraphPtr& g, Vertex u, Vertex w,
                                                               std::size_t max_length = 8);

}  // namespace raag

#endif  // RAAG_AUTOMORPHISM_HPP_
