#include <doctest.h>

#include "raag/error.hpp"
#include "raag/word.hpp"
#include "raag/word_oracle.hpp"
#include "support.hpp"

using namespace raag;

namespace {

std::string nf(const GraphPtr& g, const std::string& text) { return to_string(normal_form(parse_word(g, text))); }
std::string red(const GraphPtr& g, const std::string& text) { return to_string(reduce(parse_word(g, text))); }

Word random_word(std::mt19937_64& rng, const GraphPtr& g, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Vertex> gen(0, g->vertex_count() - 1);
  std::bernoulli_distribution sign;
  std::vector<Letter> out;
  for (std::size_t n = len(rng); n > 0; --n) out.push_back({gen(rng), sign(rng) ? 1 : -1});
  return Word(g, out);
}

}  // namespace

TEST_CASE("word literals") {
  auto sq = testing::square();
  Word w = parse_word(sq, "a b^-1 c' d^1");
  REQUIRE(w.size() == 4);
  CHECK(w.letters()[1] == Letter{1, -1});
  CHECK(w.letters()[2] == Letter{2, -1});
  CHECK(w.letters()[3] == Letter{3, 1});
  CHECK(to_string(w) == "a b^-1 c^-1 d");
  CHECK(parse_word(sq, "").empty());
  CHECK(parse_word(sq, "   ").empty());
  CHECK_THROWS_AS(parse_word(sq, "a z"), ParseError);
  CHECK_THROWS_AS(Word(sq, {Letter{9, 1}}), UnknownVertex);
  CHECK_THROWS_AS(Word(sq, {Letter{0, 2}}), InvalidArgument);
}

TEST_CASE("letter order puts positive before negative") {
  CHECK(Letter{0, 1} < Letter{0, -1});
  CHECK(Letter{0, -1} < Letter{1, 1});
}

TEST_CASE("reduce") {
  auto sq = testing::square();
  CHECK(red(sq, "a a^-1") == "");
  CHECK(red(sq, "a b a^-1") == "b");
  CHECK(red(sq, "a c a^-1") == "a c a^-1");
  CHECK(red(sq, "a b d a^-1 b^-1") == "b d b^-1");
  CHECK(red(sq, "a b c b^-1 a^-1") == "a c a^-1");
  std::vector<ReductionStep> steps;
  reduce(parse_word(sq, "a b a^-1"), &steps);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].left == 0);
  CHECK(steps[0].right == 2);
  CHECK(steps[0].letter == Letter{0, 1});
}

TEST_CASE("normal form") {
  auto p = testing::path3();
  CHECK(nf(p, "b a") == "a b");
  auto sq = testing::square();
  CHECK(nf(sq, "c a") == "c a");
  CHECK(nf(sq, "d b a") == "a d b");
  CHECK(nf(sq, "") == "");
}

TEST_CASE("equality, conjugation and support") {
  auto sq = testing::square();
  auto w = [&](const char* s) { return parse_word(sq, s); };
  CHECK(equal(w("a b"), w("b a")));
  CHECK_FALSE(equal(w("a c"), w("c a")));
  CHECK(equal(w("b d"), w("b d a a^-1")));

  auto sp = testing::spider();
  auto s = [&](const char* t) { return parse_word(sp, t); };
  CHECK(to_string(conjugate(s("v"), s("a"))) == "a");
  CHECK(to_string(conjugate(s("v"), s("b"))) == "v b v^-1");
  CHECK(to_string(conjugate(s(""), s("b a b^-1 b"))) == "a b");

  CHECK(support(w("a b a^-1")) == VertexSet{1});
  CHECK(support(w("a c a^-1")) == VertexSet{0, 2});
  CHECK(support(w("")).empty());
  CHECK(in_special_subgroup(w("a b a^-1"), VertexSet{1, 3}));
  CHECK_FALSE(in_special_subgroup(w("a c a^-1"), VertexSet{0}));
  CHECK(in_special_subgroup(w(""), VertexSet{}));

  CHECK(centralizes(w("a c"), VertexSet{1, 3}));
  CHECK_FALSE(centralizes(s("v"), VertexSet{sp->vertex("b")}));
  CHECK(centralizes(w(""), VertexSet{0, 1, 2}));
  CHECK_THROWS_AS(centralizes(w("a"), VertexSet{}), InvalidArgument);
}

TEST_CASE("words over different graphs do not mix") {
  auto a = testing::square();
  auto b = testing::pentagon();
  CHECK_THROWS_AS(parse_word(a, "a") * parse_word(b, "a"), MismatchedGraphs);
  auto a2 = testing::square();
  CHECK_NOTHROW(parse_word(a, "a") * parse_word(a2, "a"));
}

TEST_CASE("oracle") {
  auto sq = testing::square();
  auto w = [&](const char* s) { return parse_word(sq, s).letters(); };
  CHECK(oracle::equal(*sq, w("a b a^-1"), w("b")));
  CHECK_FALSE(oracle::equal(*sq, w("a c"), w("c a")));
  CHECK(oracle::geodesic_length(*sq, w("a c a^-1")) == 3);
  CHECK(oracle::rewrite_closure(*sq, w("a b")).size() == 2);
}

TEST_CASE("normal form properties against the oracle") {
  std::mt19937_64 rng(3);
  auto graphs = testing::all_connected_triangle_free(5);
  graphs.push_back(make_family("cycle:6"));
  graphs.push_back(make_family("spider:2"));
  for (const auto& g : graphs) {
    for (int k = 0; k < 80; ++k) {
      Word a = random_word(rng, g, 6);
      Word b = k % 2 ? random_word(rng, g, 6) : a * Word(g, {Letter{0, 1}, Letter{0, -1}});
      Word na = normal_form(a);
      CHECK(normal_form(na).letters() == na.letters());
      CHECK(na.size() <= a.size());
      CHECK(na.size() == oracle::geodesic_length(*g, a.letters()));
      CHECK(reduce(a).size() == na.size());
      CHECK(equal(a, b) == oracle::equal(*g, a.letters(), b.letters()));

      Word h = random_word(rng, g, 3);
      CHECK(equal(conjugate(h, conjugate(h.inverse(), a)), a));
      CHECK(equal(a * a.inverse(), Word(g)));
    }
  }
}

TEST_CASE("generators in perp(theta) centralize theta") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testing::random_connected_triangle_free(rng, 4 + trial % 7);
    std::uniform_int_distribution<Vertex> pick(0, g->vertex_count() - 1);
    for (int k = 0; k < 10; ++k) {
      VertexSet theta{pick(rng)};
      if (k % 2) theta.insert(pick(rng));
      for (Vertex x : perp(*g, theta)) CHECK(centralizes(Word::generator(g, x), theta));
    }
  }
}
