#include "confviz/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "confviz/error.hpp"

namespace confviz {

namespace {

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        throw FormatError("cannot serialise non-finite number");
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s = buf;
    if (s.find_first_of(".e") == std::string::npos) {
        s += ".0";
    }
    return s;
}

bool is_scalar_array(const json& j) {
    for (const auto& e : j) {
        if (e.is_structured()) {
            return false;
        }
    }
    return true;
}

void write(const json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    const std::string close(static_cast<std::size_t>(indent), ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [k, v] : j.items()) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out += pad + json(k).dump() + ": ";
                write(v, out, indent + 2);
            }
            out += "\n" + close + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            if (is_scalar_array(j)) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i > 0) {
                        out += ", ";
                    }
                    write(j[i], out, indent);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i > 0) {
                    out += ",\n";
                }
                out += pad;
                write(j[i], out, indent + 2);
            }
            out += "\n" + close + "]";
            return;
        }
        case json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
    }
}

json point(Point2 p) { return json::array({p.x, p.y}); }
json point(Point3 p) { return json::array({p.x, p.y, p.z}); }

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const FormatError&) {
        throw;
    } catch (const Error& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    } catch (const json::exception& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

Point2 point2(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw FormatError("expected [x, y]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Point3 point3(const json& j) {
    if (!j.is_array() || j.size() != 3) {
        throw FormatError("expected [x, y, z]");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json pairs(const std::vector<std::pair<int, int>>& v) {
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    json out = json::array();
    for (auto [a, b] : sorted) {
        out.push_back(json::array({a, b}));
    }
    return out;
}

std::vector<std::pair<int, int>> pairs_from(const json& j) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) {
            throw FormatError("expected an index pair");
        }
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::sort(out.begin(), out.end());
    return out;
}

json plane_json(const Plane& p) { return {{"normal", point(p.normal)}, {"offset", p.offset}}; }
Plane plane_from(const json& j) { return {point3(j.at("normal")), j.at("offset").get<double>()}; }

}  // namespace

std::string dump_canonical(const json& j) {
    std::string out;
    write(j, out, 0);
    out += "\n";
    return out;
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back(json::array({u, v}));
    }
    json j = {{"order", g.order()}, {"edges", edges}};
    if (g.has_labels()) {
        j["labels"] = g.labels();
    }
    return j;
}

Graph graph_from_json(const json& j) {
    return guarded("graph", [&] {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw FormatError("edge must be [u, v]");
            }
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::vector<std::string> labels;
        if (j.contains("labels")) {
            labels = j.at("labels").get<std::vector<std::string>>();
        }
        return Graph(j.at("order").get<int>(), edges, std::move(labels));
    });
}

json to_json(const IncidenceStructure& c) {
    return {{"points", c.point_count()}, {"blocks", c.sorted_blocks()}, {"provenance", c.provenance()}};
}

IncidenceStructure incidence_from_json(const json& j) {
    return guarded("incidence structure", [&] {
        return IncidenceStructure(j.at("points").get<int>(), j.at("blocks").get<std::vector<Block>>(),
                                  j.value("provenance", std::string{}));
    });
}

json to_json(const Layout& l) {
    json pos = json::array();
    for (const auto& p : l.pos) {
        pos.push_back(point(p));
    }
    return {{"graph", to_json(l.graph)}, {"pos", pos}, {"meta", l.meta}};
}

Layout layout_from_json(const json& j) {
    return guarded("layout", [&] {
        Layout l;
        l.graph = graph_from_json(j.at("graph"));
        for (const auto& p : j.at("pos")) {
            l.pos.push_back(point2(p));
        }
        if (l.pos.size() != static_cast<std::size_t>(l.graph.order())) {
            throw FormatError("layout: position count differs from the vertex count");
        }
        l.meta = j.value("meta", json::object());
        return l;
    });
}

json to_json(const Tolerances& t) {
    return {{"incidence", t.incidence}, {"separation", t.separation}, {"cluster", t.cluster}, {"isometric", t.isometric}};
}

Tolerances tolerances_from_json(const json& j) {
    return guarded("tolerances", [&] {
        Tolerances t;
        t.incidence = j.value("incidence", t.incidence);
        t.separation = j.value("separation", t.separation);
        t.cluster = j.value("cluster", t.cluster);
        t.isometric = j.value("isometric", t.isometric);
        return t;
    });
}

json to_json(const ConfigFlags& f) {
    json j = json::object();
    auto put = [&](const char* key, const std::optional<bool>& v) {
        if (v) {
            j[key] = *v;
        }
    };
    put("proper", f.proper);
    put("lineal", f.lineal);
    put("isometric", f.isometric);
    put("determining", f.determining);
    put("perfect", f.perfect);
    return j;
}

ConfigFlags flags_from_json(const json& j) {
    return guarded("flags", [&] {
        ConfigFlags f;
        auto get = [&](const char* key, std::optional<bool>& v) {
            if (j.contains(key)) {
                v = j.at(key).get<bool>();
            }
        };
        get("proper", f.proper);
        get("lineal", f.lineal);
        get("isometric", f.isometric);
        get("determining", f.determining);
        get("perfect", f.perfect);
        return f;
    });
}

json to_json(const PointCircleConfig& pcc) {
    json points = json::array();
    for (const auto& p : pcc.points) {
        points.push_back(point(p));
    }
    json circles = json::array();
    for (const auto& c : pcc.circles) {
        circles.push_back({{"c", point(c.center)}, {"r", c.radius}});
    }
    json j = {{"points", points},
              {"circles", circles},
              {"incidence", pairs(pcc.incidence)},
              {"flags", to_json(pcc.flags)},
              {"tols", to_json(pcc.tols)}};
    if (pcc.degenerate) {
        j["degenerate"] = true;
    }
    return j;
}

PointCircleConfig pcc_from_json(const json& j) {
    return guarded("point-circle configuration", [&] {
        PointCircleConfig pcc;
        for (const auto& p : j.at("points")) {
            pcc.points.push_back(point2(p));
        }
        for (const auto& c : j.at("circles")) {
            pcc.circles.push_back({point2(c.at("c")), c.at("r").get<double>()});
        }
        pcc.incidence = pairs_from(j.at("incidence"));
        for (auto [p, c] : pcc.incidence) {
            if (p < 0 || c < 0 || p >= static_cast<int>(pcc.points.size()) ||
                c >= static_cast<int>(pcc.circles.size())) {
                throw FormatError("incidence index out of range");
            }
        }
        pcc.flags = flags_from_json(j.value("flags", json::object()));
        pcc.tols = tolerances_from_json(j.value("tols", json::object()));
        pcc.degenerate = j.value("degenerate", false);
        return pcc;
    });
}

json to_json(const PolytopeSkeleton& p) {
    json coords = json::array();
    for (const auto& c : p.coords) {
        coords.push_back(point(c));
    }
    return {{"name", p.name}, {"graph", to_json(p.graph)}, {"coords", coords}};
}

PolytopeSkeleton polytope_from_json(const json& j) {
    return guarded("polytope", [&] {
        PolytopeSkeleton p;
        p.name = j.at("name").get<std::string>();
        p.graph = graph_from_json(j.at("graph"));
        for (const auto& c : j.at("coords")) {
            p.coords.push_back(point3(c));
        }
        return p;
    });
}

json to_json(const PointPlaneConfig& c) {
    json points = json::array();
    for (const auto& p : c.points) {
        points.push_back(point(p));
    }
    json planes = json::array();
    for (const auto& p : c.planes) {
        planes.push_back(plane_json(p));
    }
    return {{"points", points}, {"planes", planes}, {"incidence", pairs(c.incidence)}, {"max_residual", c.max_residual}};
}

PointPlaneConfig point_plane_from_json(const json& j) {
    return guarded("point-plane configuration", [&] {
        PointPlaneConfig c;
        for (const auto& p : j.at("points")) {
            c.points.push_back(point3(p));
        }
        for (const auto& p : j.at("planes")) {
            c.planes.push_back(plane_from(p));
        }
        c.incidence = pairs_from(j.at("incidence"));
        c.max_residual = j.value("max_residual", 0.0);
        return c;
    });
}

json to_json(const SphericalCircleConfig& sc) {
    json points = json::array();
    for (const auto& p : sc.points) {
        points.push_back(point(p));
    }
    json circles = json::array();
    for (const auto& c : sc.circles) {
        circles.push_back({{"plane", plane_json(c.plane)}, {"c", point(c.center)}, {"r", c.radius}});
    }
    return {{"sphere", {{"c", point(sc.sphere_center)}, {"r", sc.sphere_radius}}},
            {"points", points},
            {"circles", circles},
            {"incidence", pairs(sc.incidence)}};
}

SphericalCircleConfig spherical_from_json(const json& j) {
    return guarded("spherical configuration", [&] {
        SphericalCircleConfig sc;
        sc.sphere_center = point3(j.at("sphere").at("c"));
        sc.sphere_radius = j.at("sphere").at("r").get<double>();
        for (const auto& p : j.at("points")) {
            sc.points.push_back(point3(p));
        }
        for (const auto& c : j.at("circles")) {
            sc.circles.push_back({plane_from(c.at("plane")), point3(c.at("c")), c.at("r").get<double>()});
        }
        sc.incidence = pairs_from(j.at("incidence"));
        return sc;
    });
}

PointLineInput point_line_from_json(const json& j) {
    return guarded("point-line input", [&] {
        PointLineInput in;
        for (const auto& p : j.at("points")) {
            in.points.push_back(point2(p));
        }
        in.lines = j.at("lines").get<std::vector<std::vector<int>>>();
        return in;
    });
}

ArtifactKind detect_kind(const json& j) {
    if (!j.is_object()) {
        return ArtifactKind::unknown;
    }
    if (j.contains("sphere")) {
        return ArtifactKind::spherical;
    }
    if (j.contains("coords")) {
        return ArtifactKind::polytope;
    }
    if (j.contains("planes")) {
        return ArtifactKind::point_plane;
    }
    if (j.contains("pos")) {
        return ArtifactKind::layout;
    }
    if (j.contains("circles")) {
        return ArtifactKind::point_circle;
    }
    if (j.contains("lines")) {
        return ArtifactKind::point_line;
    }
    if (j.contains("blocks")) {
        return ArtifactKind::incidence;
    }
    if (j.contains("order")) {
        return ArtifactKind::graph;
    }
    return ArtifactKind::unknown;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParameterError("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::exception& e) {
        throw FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParameterError("cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw Error("write to '" + path + "' failed");
    }
}

}  // namespace confviz
