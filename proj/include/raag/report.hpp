#ifndef RAAG_REPORT_HPP_
#define RAAG_REPORT_HPP_

#include <json.hpp>
#include <string>
#include <vector>

#include "raag/bounds.hpp"
#include "raag/graph.hpp"
#include "raag/graph_io.hpp"
#include "raag/structure.hpp"
#include "raag/verify.hpp"

namespace raag {

using Json = nlohmann::json;

// {"vertices": [...], "edges": [[u, v], ...]}; parse_graph_json reads it back.
Json graph_json(const SimplicialGraph& g);
Json validation_json(const ValidationReport& v, const SimplicialGraph& g);
Json structure_json(const SimplicialGraph& g, const StructureReport& sr);
Json bounds_json(const SimplicialGraph& g, const BoundsReport& b);
Json checks_json(const std::vector<CheckResult>& checks);

struct AnalyzeOptions {
  bool skip_symmetries = false;
  std::size_t max_sym_vertices = 16;
};

// Laurence generators with counts by kind, the K₀ spanning set, the A/L/C
// lists and symmetry counts (or the reason they were skipped).
Json generators_json(const GraphPtr& g, const AnalyzeOptions& options);

// Full report with keys graph, validation, structure, generators, bounds,
// verifications and warnings. The analysis keys are null when the graph is
// not admissible.
Json analyze_report(const ParsedGraph& parsed, const AnalyzeOptions& options,
                    const std::vector<CheckResult>& verifications = {});

// Sorted keys, two-space indent, trailing newline.
std::string canonical(const Json& j);

}  // namespace raag

#endif  // RAAG_REPORT_HPP_
