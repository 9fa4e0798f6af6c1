#include "raag/graph_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "raag/error.hpp"

namespace raag {

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

ParsedGraph assemble(std::vector<std::string> order, const EdgeList& edges) {
  ParsedGraph out;
  std::set<std::string> declared(order.begin(), order.end());
  std::set<std::pair<std::string, std::string>> seen;
  EdgeList unique;
  for (const auto& [a, b] : edges) {
    if (a == b) throw ParseError("loop at vertex '" + a + "'");
    for (const auto& name : {a, b})
      if (declared.insert(name).second) order.push_back(name);
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (!seen.insert(key).second) {
      out.warnings.push_back("duplicate edge " + key.first + " " + key.second + " ignored");
      continue;
    }
    unique.push_back(key);
  }
  std::vector<std::string> names(declared.begin(), declared.end());
  try {
    out.graph = std::make_shared<const SimplicialGraph>(std::move(names), unique);
  } catch (const InvalidGraph& e) {
    throw ParseError(e.what());
  }
  return out;
}

}  // namespace

ParsedGraph parse_graph_text(std::string_view text) {
  std::vector<std::string> vertices;
  EdgeList edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      vertices.push_back(tokens[0]);
    } else if (tokens.size() == 2) {
      edges.emplace_back(tokens[0], tokens[1]);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": expected `u v` or a single vertex");
    }
  }
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (auto& v : vertices)
    if (seen.insert(v).second) order.push_back(v);
  return assemble(std::move(order), edges);
}

ParsedGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph JSON must be an object");
  std::vector<std::string> order;
  EdgeList edges;
  try {
    if (doc.contains("vertices")) {
      std::set<std::string> seen;
      for (const auto& v : doc.at("vertices")) {
        auto name = v.get<std::string>();
        if (seen.insert(name).second) order.push_back(name);
      }
    }
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair of names");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
  return assemble(std::move(order), edges);
}

ParsedGraph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

ParsedGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::filesystem::filesystem_error("cannot open graph file", path,
                                            std::make_error_code(std::errc::no_such_file_or_directory));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace raag
