#include <charconv>

#include "raag/error.hpp"
#include "raag/graph_io.hpp"

namespace raag {

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

std::vector<int> parse_args(std::string_view family, std::string_view args, std::size_t expected) {
  std::vector<int> out;
  while (!args.empty()) {
    auto comma = args.find(',');
    auto piece = args.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size())
      throw ParseError("bad argument '" + std::string(piece) + "' for family " + std::string(family));
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  if (out.size() != expected)
    throw ParseError("family " + std::string(family) + " takes " + std::to_string(expected) +
                     " argument(s)");
  return out;
}

// Zero-padded so that lexicographic order matches numeric order.
std::string label(const std::string& prefix, int i, int count) {
  std::string digits = std::to_string(i);
  std::string width = std::to_string(count);
  return prefix + std::string(width.size() - digits.size(), '0') + digits;
}

GraphPtr build(std::vector<std::string> names, const EdgeList& edges) {
  return std::make_shared<const SimplicialGraph>(std::move(names), edges);
}

}  // namespace

GraphPtr make_family(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("family spec must look like name:args");
  auto family = spec.substr(0, colon);
  auto rest = spec.substr(colon + 1);
  std::vector<std::string> names;
  EdgeList edges;

  if (family == "path" || family == "cycle") {
    int n = parse_args(family, rest, 1)[0];
    int minimum = family == "path" ? 1 : 3;
    if (n < minimum) throw ParseError(std::string(family) + " needs at least " + std::to_string(minimum) + " vertices");
    std::string prefix = family == "path" ? "p" : "c";
    for (int i = 1; i <= n; ++i) names.push_back(label(prefix, i, n));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(names[i], names[i + 1]);
    if (family == "cycle") edges.emplace_back(names[n - 1], names[0]);
  } else if (family == "nmtree") {
    auto a = parse_args(family, rest, 2);
    int n = a[0], m = a[1];
    if (n < 1 || m < 1) throw ParseError("nmtree needs n, m >= 1");
    names = {"v", "w"};
    edges.emplace_back("v", "w");
    for (int i = 1; i <= n; ++i) {
      names.push_back(label("v", i, n));
      edges.emplace_back("v", names.back());
    }
    for (int i = 1; i <= m; ++i) {
      names.push_back(label("w", i, m));
      edges.emplace_back("w", names.back());
    }
  } else if (family == "spider") {
    int k = parse_args(family, rest, 1)[0];
    if (k < 1) throw ParseError("spider needs k >= 1");
    names = {"v"};
    for (int i = 0; i < k; ++i) {
      std::string inner, outer;
      if (k <= 10) {
        inner = std::string(1, static_cast<char>('a' + 2 * i));
        outer = std::string(1, static_cast<char>('a' + 2 * i + 1));
      } else {
        inner = label("a", i + 1, k);
        outer = label("b", i + 1, k);
      }
      names.push_back(inner);
      names.push_back(outer);
      edges.emplace_back("v", inner);
      edges.emplace_back(inner, outer);
    }
  } else if (family == "join" || family == "overlap") {
    auto a = parse_args(family, rest, 2);
    int n = a[0], m = a[1];
    if (n < 1 || m < 1) throw ParseError(std::string(family) + " needs n, m >= 1");
    for (int i = 1; i <= n; ++i) names.push_back(label("u", i, n));
    for (int j = 1; j <= m; ++j) names.push_back(label("w", j, m));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) edges.emplace_back(names[i], names[n + j]);
    if (family == "overlap") {
      for (int j = 1; j <= m; ++j) {
        names.push_back(label("x", j, m));
        edges.emplace_back(label("w", j, m), names.back());
      }
    }
  } else {
    throw ParseError("unknown family '" + std::string(family) + "'");
  }
  return build(std::move(names), edges);
}

}  // namespace raag
