#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "confviz/graph.hpp"
#include "confviz/incidence.hpp"
#include "confviz/layout.hpp"
#include "confviz/point_circle.hpp"
#include "confviz/spatial.hpp"

namespace confviz {

using nlohmann::json;

// Deterministic text form: object keys sorted, floats with 17 significant
// digits, scalar-only arrays on one line, trailing newline.
std::string dump_canonical(const json& j);

json to_json(const Graph& g);
json to_json(const IncidenceStructure& c);
json to_json(const Layout& l);
json to_json(const Tolerances& t);
json to_json(const ConfigFlags& f);
json to_json(const PointCircleConfig& pcc);
json to_json(const PolytopeSkeleton& p);
json to_json(const PointPlaneConfig& c);
json to_json(const SphericalCircleConfig& sc);

// All readers throw FormatError on malformed input.
Graph graph_from_json(const json& j);
IncidenceStructure incidence_from_json(const json& j);
Layout layout_from_json(const json& j);
Tolerances tolerances_from_json(const json& j);
ConfigFlags flags_from_json(const json& j);
PointCircleConfig pcc_from_json(const json& j);
PolytopeSkeleton polytope_from_json(const json& j);
PointPlaneConfig point_plane_from_json(const json& j);
SphericalCircleConfig spherical_from_json(const json& j);

struct PointLineInput {
    std::vector<Point2> points;
    std::vector<std::vector<int>> lines;
};

// {"points": [[x,y],...], "lines": [[i,j,...],...]}
PointLineInput point_line_from_json(const json& j);

enum class ArtifactKind { graph, incidence, layout, point_circle, polytope, point_plane, spherical, point_line, unknown };

ArtifactKind detect_kind(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace confviz
