#include "raag/word.hpp"

#include <sstream>

#include "raag/error.hpp"

namespace raag {

Word::Word(GraphPtr graph, std::vector<Letter> letters)
    : graph_(std::move(graph)), letters_(std::move(letters)) {
  if (!graph_) throw InvalidArgument("word without an ambient graph");
  for (const auto& l : letters_) {
    if (l.generator >= graph_->vertex_count())
      throw UnknownVertex("#" + std::to_string(l.generator));
    if (l.sign != 1 && l.sign != -1) throw InvalidArgument("letter sign must be +1 or -1");
  }
}

Word Word::generator(GraphPtr graph, Vertex v, int sign) {
  return Word(std::move(graph), {Letter{v, sign}});
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(graph_, std::move(out));
}

void require_same_graph(const Word& a, const Word& b) {
  if (a.graph() != b.graph() && !(*a.graph() == *b.graph())) throw MismatchedGraphs();
}

Word operator*(const Word& a, const Word& b) {
  require_same_graph(a, b);
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(a.graph_, std::move(out));
}

namespace {

// Distinct generators that span an edge. A generator is not treated as
// commuting with itself so scans stop at the nearest occurrence.
bool commute(const SimplicialGraph& g, const Letter& a, const Letter& b) {
  return a.generator != b.generator && g.adjacent(a.generator, b.generator);
}

}  // namespace

Word reduce(const Word& w, std::vector<ReductionStep>* trace) {
  const auto& g = *w.graph();
  // Appending a letter to a reduced word creates at most one cancellable
  // pair, and it involves the new letter; scanning back over letters that
  // commute with it finds the partner if there is one.
  std::vector<Letter> out;
  std::vector<std::size_t> origin;  // position of each kept letter in w
  const auto& in = w.letters();
  for (std::size_t pos = 0; pos < in.size(); ++pos) {
    const Letter x = in[pos];
    bool cancelled = false;
    for (std::size_t k = out.size(); k-- > 0;) {
      if (out[k].generator == x.generator) {
        if (out[k].sign == -x.sign) {
          if (trace) trace->push_back({origin[k], pos, out[k]});
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
          origin.erase(origin.begin() + static_cast<std::ptrdiff_t>(k));
          cancelled = true;
        }
        break;
      }
      if (!commute(g, out[k], x)) break;
    }
    if (!cancelled) {
      out.push_back(x);
      origin.push_back(pos);
    }
  }
  return Word(w.graph(), std::move(out));
}

Word normal_form(const Word& w) {
  const auto& g = *w.graph();
  std::vector<Letter> rest = reduce(w).letters();
  std::vector<Letter> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    // Least letter that commutes with everything in front of it.
    std::size_t best = 0;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      if (!(rest[i] < rest[best])) continue;
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j) movable = commute(g, rest[j], rest[i]);
      if (movable) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return Word(w.graph(), std::move(out));
}

bool equal(const Word& a, const Word& b) {
  require_same_graph(a, b);
  return normal_form(a).letters() == normal_form(b).letters();
}

Word conjugate(const Word& g, const Word& w) { return normal_form(g * w * g.inverse()); }

VertexSet support(const Word& w) {
  VertexSet out;
  Word r = reduce(w);
  for (const auto& l : r.letters()) out.insert(l.generator);
  return out;
}

bool in_special_subgroup(const Word& w, const VertexSet& theta) {
  return support(w).is_subset_of(theta);
}

bool centralizes(const Word& g, const VertexSet& theta) {
  if (theta.empty()) throw InvalidArgument("centralizes: empty vertex set");
  for (Vertex t : theta) {
    Word gen = Word::generator(g.graph(), t);
    if (!equal(conjugate(g, gen), gen)) return false;
  }
  return true;
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += w.graph()->name(l.generator);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

Word parse_word(const GraphPtr& graph, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  for (std::string token; in >> token;) {
    int sign = 1;
    std::string name = token;
    if (name.size() > 3 && name.ends_with("^-1")) {
      name.resize(name.size() - 3);
      sign = -1;
    } else if (name.size() > 2 && name.ends_with("^1")) {
      name.resize(name.size() - 2);
    } else if (name.size() > 1 && name.back() == '\'') {
      name.pop_back();
      sign = -1;
    }
    auto v = graph->find(name);
    if (!v) throw ParseError("unknown generator '" + name + "' in word");
    letters.push_back({*v, sign});
  }
  return Word(graph, std::move(letters));
}

}  // namespace raag
