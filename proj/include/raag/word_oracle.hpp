#ifndef RAAG_WORD_ORACLE_HPP_
#define RAAG_WORD_ORACLE_HPP_

#include <cstddef>
#include <set>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag::oracle {

// Brute-force word problem, kept independent of normal_form: explores every
// word reachable by single-step rewrites (swap two adjacent commuting
// letters, delete an adjacent x x⁻¹ pair). Exponential; meant for short
// words only.
std::set<std::vector<Letter>> rewrite_closure(const SimplicialGraph& g, const std::vector<Letter>& w,
                                              std::size_t limit = 200000);

// Two words name the same element iff their closures share a word (both
// closures contain every geodesic representative of their element).
bool equal(const SimplicialGraph& g, const std::vector<Letter>& a, const std::vector<Letter>& b);

// Shortest length found in the closure.
std::size_t geodesic_length(const SimplicialGraph& g, const std::vector<Letter>& w);

}  // namespace raag::oracle

#endif  // RAAG_WORD_ORACLE_HPP_
