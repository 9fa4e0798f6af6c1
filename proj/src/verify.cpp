#include "raag/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "raag/error.hpp"
#include "raag/structure.hpp"
#include "raag/word_oracle.hpp"

namespace raag {

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::string bracket(const Word& w) { return "[" + to_string(w) + "]"; }

Vertex conjugating_vertex(const Automorphism& phi) {
  return std::get<kinds::PartialConjugation>(phi.kind()).by;
}

}  // namespace

std::vector<CheckResult> verify_kernel(const GraphPtr& g) {
  require_admissible(*g);
  std::vector<CheckResult> out;
  auto gens = k0_generators(g);
  auto sr = structure_report(*g);
  if (sr.star) {
    out.push_back({"kernel: no generators for a star", gens.empty(), std::to_string(gens.size()) + " generators"});
    return out;
  }

  for (const auto& phi : gens) {
    const Vertex by = conjugating_vertex(phi);
    const Word s = Word::generator(g, by);
    for (Vertex v : sr.v0) {
      const std::string where = describe(phi) + " at J_" + g->name(v);
      auto r = find_join_witness(phi, maximal_join(*g, v));
      bool power = r && std::all_of(r->witness.letters().begin(), r->witness.letters().end(),
                                    [&](const Letter& l) { return l.generator == by; });
      out.push_back({"kernel: restriction " + where, power,
                     r ? "witness " + bracket(r->witness) : "no witness found"});
      if (!r) continue;
      auto c = projection_conjugator(project(phi, v), {Word(g), s, s.inverse()});
      out.push_back({"kernel: projection " + where, c.has_value(),
                     c ? "inner by " + bracket(*c) : "projection is not inner by a power of " + g->name(by)});
    }
  }

  for (Vertex v = 0; v < g->vertex_count(); ++v) {
    auto parts = component_conjugations(g, v);
    Automorphism product = identity(g);
    for (const auto& p : parts) product = compose(product, p);
    bool ok = is_conjugation_by(product, Word::generator(g, v));
    out.push_back({"kernel: product of component conjugations by " + g->name(v), ok,
                   std::to_string(parts.size()) + (parts.size() == 1 ? " component, " : " components, ") +
                       (ok ? "equals conjugation by [" + g->name(v) + "]" : "differs from conjugation by [" + g->name(v) + "]")});
  }
  return out;
}

std::vector<CheckResult> verify_commute(const GraphPtr& g) {
  auto ag = abelian_subgroup_generators(g);
  std::vector<Automorphism> all;
  all.insert(all.end(), ag.a.begin(), ag.a.end());
  all.insert(all.end(), ag.l.begin(), ag.l.end());
  all.insert(all.end(), ag.c.begin(), ag.c.end());

  std::vector<CheckResult> failures;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      ++pairs;
      if (!equal_in_aut(compose(all[i], all[j]), compose(all[j], all[i])))
        failures.push_back({"commute: " + describe(all[i]) + " with " + describe(all[j]), false,
                            "compositions differ"});
    }
  }
  std::vector<CheckResult> out;
  out.push_back({"commute: A ∪ L ∪ C pairwise", failures.empty(),
                 "|A| = " + std::to_string(ag.a.size()) + ", |L| = " + std::to_string(ag.l.size()) +
                     ", |C| = " + std::to_string(ag.c.size()) + ", " + std::to_string(pairs) + " pairs, " +
                     std::to_string(failures.size()) + " failures"});
  out.insert(out.end(), failures.begin(), failures.end());
  return out;
}

std::vector<CheckResult> verify_joins(const GraphPtr& g, const std::vector<Automorphism>& autos) {
  auto gens = autos.empty() ? enumerate_generators(g) : autos;
  auto sr = structure_report(*g);
  std::vector<CheckResult> out;
  for (const auto& phi : gens) {
    for (Vertex v : sr.v0) {
      auto r = find_join_witness(phi, maximal_join(*g, v));
      out.push_back({"joins: " + describe(phi) + " at J_" + g->name(v), r.has_value(),
                     r ? "witness " + bracket(r->witness) : "no witness found"});
    }
  }
  return out;
}

std::vector<CheckResult> verify_symmetries(const GraphPtr& g, std::size_t max_vertices) {
  auto perms = graph_symmetries(*g, max_vertices);
  auto counts = symmetry_counts(*g, max_vertices);
  std::vector<CheckResult> out;

  std::size_t sym0 = 0;
  std::vector<std::string> mismatches;
  for (const auto& p : perms) {
    bool member = sym0_member(*g, p);
    if (member) ++sym0;
    if (member == sym0_obstruction(*g, p).has_value()) {
      std::string text;
      for (Vertex v = 0; v < p.size(); ++v) text += (text.empty() ? "" : " ") + g->name(v) + "->" + g->name(p[v]);
      mismatches.push_back(text);
    }
  }
  out.push_back({"symmetries: Sym0 membership matches class preservation", mismatches.empty(),
                 mismatches.empty() ? std::to_string(perms.size()) + " symmetries checked"
                                    : "mismatch at " + mismatches.front()});
  bool counts_ok = perms.size() == counts.sym && sym0 == counts.sym0;
  out.push_back({"symmetries: |Sym| = |Q| * |Sym0|", counts_ok,
                 "|Sym| = " + std::to_string(perms.size()) + ", |Sym0| = " + std::to_string(sym0) +
                     ", |Q| = " + std::to_string(counts.q)});

  for (const auto& cls : vertex_classes(*g).classes) {
    const auto& items = cls.items();
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      auto factors = realize_transposition(g, items[i], items[i + 1]);
      std::string detail = "not found";
      if (factors) {
        detail.clear();
        for (const auto& f : *factors) detail += (detail.empty() ? "" : "; ") + describe(f);
      }
      out.push_back({"symmetries: transposition " + g->name(items[i]) + " <-> " + g->name(items[i + 1]),
                     factors.has_value(), detail});
    }
  }
  return out;
}

namespace {

std::vector<Letter> random_letters(std::mt19937_64& rng, const std::vector<Vertex>& gens, std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::bernoulli_distribution sign;
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back({gens[pick(rng)], sign(rng) ? 1 : -1});
  return out;
}

}  // namespace

std::vector<CheckResult> verify_words(const GraphPtr& g, const WordSuiteOptions& options) {
  const auto& graph = *g;
  std::mt19937_64 rng(options.seed);
  std::vector<Vertex> all(graph.vertex_count());
  std::iota(all.begin(), all.end(), Vertex{0});

  std::size_t agreements = 0;
  std::size_t equal_pairs = 0;
  std::optional<std::string> word_failure;
  std::optional<std::string> geodesic_failure;
  for (std::size_t p = 0; p < options.pairs; ++p) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Vertex> gens(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(3, all.size())));

    std::vector<Letter> a;
    std::vector<Letter> b;
    if (p % 2 == 0 && options.max_len >= 2) {
      std::uniform_int_distribution<std::size_t> len(0, options.max_len - 2);
      a = random_letters(rng, gens, len(rng));
      b = a;
      for (std::size_t k = 0; k + 1 < b.size(); ++k) {
        if (b[k].generator != b[k + 1].generator && graph.adjacent(b[k].generator, b[k + 1].generator) &&
            std::bernoulli_distribution(0.5)(rng))
          std::swap(b[k], b[k + 1]);
      }
      auto x = random_letters(rng, gens, 1).front();
      std::uniform_int_distribution<std::size_t> at(0, b.size());
      auto pos = b.begin() + static_cast<std::ptrdiff_t>(at(rng));
      pos = b.insert(pos, x.inverse());
      b.insert(pos, x);
    } else {
      std::uniform_int_distribution<std::size_t> len(0, options.max_len);
      a = random_letters(rng, gens, len(rng));
      b = random_letters(rng, gens, len(rng));
    }

    Word wa(g, a);
    Word wb(g, b);
    bool engine = equal(wa, wb);
    bool oracle = oracle::equal(graph, a, b);
    if (oracle) ++equal_pairs;
    if (engine == oracle) ++agreements;
    else if (!word_failure)
      word_failure = "[" + to_string(wa) + "] vs [" + to_string(wb) + "]: engine says " +
                     (engine ? "equal" : "different") + ", oracle says " + (oracle ? "equal" : "different");

    for (const auto& w : {wa, wb}) {
      std::size_t geo = oracle::geodesic_length(graph, w.letters());
      if (reduce(w).size() != geo && !geodesic_failure)
        geodesic_failure = "[" + to_string(w) + "] reduces to length " + std::to_string(reduce(w).size()) +
                           ", geodesic length " + std::to_string(geo);
    }
  }

  std::vector<CheckResult> out;
  out.push_back({"words: normal form agrees with the rewrite oracle", !word_failure,
                 word_failure.value_or(std::to_string(agreements) + " pairs agree, " +
                                       std::to_string(equal_pairs) + " equal")});
  out.push_back({"words: reduce reaches geodesic length", !geodesic_failure,
                 geodesic_failure.value_or(std::to_string(2 * options.pairs) + " words checked")});
  return out;
}

std::vector<CheckResult> run_suite(const GraphPtr& g, std::string_view suite, const WordSuiteOptions& words,
                                   std::size_t max_sym_vertices) {
  if (suite == "kernel") return verify_kernel(g);
  if (suite == "commute") return verify_commute(g);
  if (suite == "joins") return verify_joins(g);
  if (suite == "symmetries") return verify_symmetries(g, max_sym_vertices);
  if (suite == "words") return verify_words(g, words);
  throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace raag
