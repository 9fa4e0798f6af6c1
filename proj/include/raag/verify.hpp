#ifndef RAAG_VERIFY_HPP_
#define RAAG_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "raag/automorphism.hpp"
#include "raag/graph.hpp"

namespace raag {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // witness on success, counterexample on failure
};

bool all_pass(const std::vector<CheckResult>& checks);

// K₀ generators preserve every J_v (v ∈ V₀) with a witness that is a power
// of the conjugating vertex and project to inner automorphisms; the product
// of all component conjugations by v is conjugation by v.
std::vector<CheckResult> verify_kernel(const GraphPtr& g);

// Every pair from A ∪ L ∪ C commutes in Aut.
std::vector<CheckResult> verify_commute(const GraphPtr& g);

// Each automorphism in `autos` (the Laurence generators when empty) carries
// every J_v, v ∈ V₀, to a conjugate of itself.
std::vector<CheckResult> verify_joins(const GraphPtr& g, const std::vector<Automorphism>& autos = {});

// Sym⁰ membership agrees with the join obstruction on every symmetry, the
// coset count matches, and each within-class transposition is a product of
// inversions and transvections.
std::vector<CheckResult> verify_symmetries(const GraphPtr& g, std::size_t max_vertices = 16);

struct WordSuiteOptions {
  std::size_t max_len = 6;
  std::uint64_t seed = 1;
  std::size_t pairs = 500;
};

// Random word pairs over at most three generators, about half of them equal
// by construction; normal_form equality and reduce lengths are compared with
// the rewrite-closure oracle.
std::vector<CheckResult> verify_words(const GraphPtr& g, const WordSuiteOptions& options = {});

// kernel | commute | joins | symmetries | words; throws InvalidArgument
// otherwise.
std::vector<CheckResult> run_suite(const GraphPtr& g, std::string_view suite,
                                   const WordSuiteOptions& words = {},
                                   std::size_t max_sym_vertices = 16);

}  // namespace raag

#endif  // RAAG_VERIFY_HPP_
