#include "raag/word_oracle.hpp"

#include <algorithm>
#include <deque>

#include "raag/error.hpp"

namespace raag::oracle {

std::set<std::vector<Letter>> rewrite_closure(const SimplicialGraph& g, const std::vector<Letter>& w,
                                              std::size_t limit) {
  std::set<std::vector<Letter>> seen{w};
  std::deque<std::vector<Letter>> queue{w};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const Letter a = cur[i];
      const Letter b = cur[i + 1];
      std::vector<Letter> next;
      if (a.generator == b.generator && a.sign == -b.sign) {
        next = cur;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i),
                   next.begin() + static_cast<std::ptrdiff_t>(i + 2));
      } else if (a.generator != b.generator && g.adjacent(a.generator, b.generator)) {
        next = cur;
        std::swap(next[i], next[i + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second) {
        if (seen.size() > limit) throw SizeLimitExceeded("rewrite closure too large");
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

bool equal(const SimplicialGraph& g, const std::vector<Letter>& a, const std::vector<Letter>& b) {
  auto ca = rewrite_closure(g, a);
  auto cb = rewrite_closure(g, b);
  const auto& small = ca.size() <= cb.size() ? ca : cb;
  const auto& large = ca.size() <= cb.size() ? cb : ca;
  return std::any_of(small.begin(), small.end(), [&](const auto& w) { return large.contains(w); });
}

std::size_t geodesic_length(const SimplicialGraph& g, const std::vector<Letter>& w) {
  std::size_t best = w.size();
  for (const auto& x : rewrite_closure(g, w)) best = std::min(best, x.size());
  return best;
}

}  // namespace raag::oracle
