#ifndef RAAG_WORD_HPP_
#define RAAG_WORD_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// A generator or its inverse. Letters order by generator, then +1 before -1.
struct Letter {
  Vertex generator = 0;
  int sign = 1;

  [[nodiscard]] Letter inverse() const { return {generator, -sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.generator <=> b.generator; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

// An element of the right-angled Artin group over `graph`, stored as a
// sequence of letters. Words are plain values; nothing normalises them
// implicitly.
class Word {
 public:
  explicit Word(GraphPtr graph, std::vector<Letter> letters = {});

  static Word generator(GraphPtr graph, Vertex v, int sign = 1);

  [[nodiscard]] const GraphPtr& graph() const { return graph_; }
  [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }

  [[nodiscard]] Word inverse() const;

  // Concatenation without reduction. Throws MismatchedGraphs.
  friend Word operator*(const Word& a, const Word& b);

  // Letter-for-letter identity over the same graph object.
  friend bool operator==(const Word& a, const Word& b) {
    return a.graph_ == b.graph_ && a.letters_ == b.letters_;
  }

 private:
  GraphPtr graph_;
  std::vector<Letter> letters_;
};

struct ReductionStep {
  std::size_t left;    // positions in the word before the deletion
  std::size_t right;
  Letter letter;       // the left letter of the cancelled pair
};

// Deletes cancellable pairs x … x⁻¹ (every letter in between commutes with x)
// until none remain. The result is a geodesic for the same element. When
// `trace` is given each deletion is appended to it.
Word reduce(const Word& w, std::vector<ReductionStep>* trace = nullptr);

// reduce, then the lexicographically least reordering reachable by swapping
// adjacent commuting letters. Two words are equal in the group iff their
// normal forms are identical.
Word normal_form(const Word& w);

bool equal(const Word& a, const Word& b);

// normal_form(g · w · g⁻¹)
Word conjugate(const Word& g, const Word& w);

// Generators occurring in the normal form.
VertexSet support(const Word& w);

bool in_special_subgroup(const Word& w, const VertexSet& theta);

// True when g commutes with every generator in theta. Throws on empty theta.
bool centralizes(const Word& g, const VertexSet& theta);

// Space-separated letters, inverses written `v^-1`; the identity is "".
std::string to_string(const Word& w);

// Accepts `v`, `v^-1`, `v'` and `v^1` tokens. Throws ParseError.
Word parse_word(const GraphPtr& graph, std::string_view text);

void require_same_graph(const Word& a, const Word& b);

}  // namespace raag

#endif  // RAAG_WORD_HPP_
