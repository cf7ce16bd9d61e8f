#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "confviz/embedded_data.hpp"
#include "confviz/error.hpp"
#include "confviz/families.hpp"
#include "confviz/io.hpp"
#include "confviz/layout.hpp"
#include "confviz/point_circle.hpp"
#include "confviz/solver.hpp"
#include "confviz/svg.hpp"

using namespace confviz;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class T, class Read>
void expect_round_trip(const T& value, Read read) {
    const std::string text = dump_canonical(to_json(value));
    const T back = read(json::parse(text));
    EXPECT_EQ(back, value);
    EXPECT_EQ(dump_canonical(to_json(back)), text);
}

}  // namespace

TEST(Canonical, FloatsUseSeventeenDigits) {
    EXPECT_EQ(dump_canonical(json(0.1)), "0.10000000000000001\n");
    EXPECT_EQ(dump_canonical(json(2.0)), "2.0\n");
    EXPECT_EQ(dump_canonical(json::array({1, 2})), "[1, 2]\n");
    EXPECT_THROW(dump_canonical(json(std::nan(""))), FormatError);
}

TEST(Canonical, KeysSortedAndStable) {
    const json j = {{"b", 1}, {"a", {{"d", 0.5}, {"c", json::array({json::array({1, 2})})}}}};
    EXPECT_EQ(dump_canonical(j), "{\n  \"a\": {\n    \"c\": [\n      [1, 2]\n    ],\n    \"d\": 0.5\n  },\n  \"b\": 1\n}\n");
}

TEST(RoundTrip, Graphs) {
    for (const char* s : {"petersen", "desargues", "pappus", "gen_cuboctahedron:5", "cycle:4", "prism:6", "kneser:7:3"}) {
        expect_round_trip(build_family(FamilySpec::parse(s)), graph_from_json);
    }
    expect_round_trip(Graph(3), graph_from_json);
}

TEST(RoundTrip, IncidenceStructures) {
    expect_round_trip(v_construct(build_family({"petersen", {}})), incidence_from_json);
    for (const auto& c : decompose(v_construct(build_family({"hypercube", {4}})))) {
        expect_round_trip(c, incidence_from_json);
    }
    expect_round_trip(fano_plane(), incidence_from_json);
}

TEST(RoundTrip, LayoutsAndConfigurations) {
    const auto layouts = {layout_hypercube(4, Seed{9}), layout_gen_cuboctahedron(6, 2.0, 1.0), layout_polygon(7),
                          solve_unit_distance(build_family({"pappus", {}}), Seed{1}).layout};
    for (const auto& l : layouts) {
        expect_round_trip(l, layout_from_json);
    }
    auto pcc = check_flags(circles_from_layout(layout_hypercube(3, Seed{2})));
    expect_round_trip(pcc, pcc_from_json);
    pcc.degenerate = true;
    pcc.flags.perfect.reset();
    pcc.tols.cluster = 3e-5;
    expect_round_trip(pcc, pcc_from_json);
}

TEST(RoundTrip, SpatialArtifacts) {
    for (const auto& name : polytope_names()) {
        expect_round_trip(polytope_data(name), polytope_from_json);
    }
    const auto pp = point_plane_vconstruct(polytope_data("dodecahedron"));
    const auto pp_back = point_plane_from_json(json::parse(dump_canonical(to_json(pp))));
    EXPECT_EQ(dump_canonical(to_json(pp_back)), dump_canonical(to_json(pp)));
    const auto sc = sphere_circles(polytope_data("cube"));
    const auto sc_back = spherical_from_json(json::parse(dump_canonical(to_json(sc))));
    EXPECT_EQ(dump_canonical(to_json(sc_back)), dump_canonical(to_json(sc)));
}

TEST(Readers, RejectMalformedInput) {
    EXPECT_THROW(graph_from_json(json::parse(R"({"order": 3, "edges": [[0, 3]]})")), FormatError);
    EXPECT_THROW(graph_from_json(json::parse(R"({"edges": []})")), FormatError);
    EXPECT_THROW(graph_from_json(json::parse(R"({"order": 2, "edges": [[0]]})")), FormatError);
    EXPECT_THROW(incidence_from_json(json::parse(R"({"points": 2, "blocks": [[0, 5]]})")), FormatError);
    EXPECT_THROW(pcc_from_json(json::parse(R"({"points": [[0, 0]], "circles": [], "incidence": [[0, 0]]})")),
                 FormatError);
    EXPECT_THROW(layout_from_json(json::parse(R"({"graph": {"order": 2, "edges": []}, "pos": [[0, 0]]})")),
                 FormatError);
}

TEST(Readers, DetectKind) {
    EXPECT_EQ(detect_kind(to_json(Graph(2))), ArtifactKind::graph);
    EXPECT_EQ(detect_kind(to_json(fano_plane())), ArtifactKind::incidence);
    EXPECT_EQ(detect_kind(to_json(layout_polygon(4))), ArtifactKind::layout);
    EXPECT_EQ(detect_kind(to_json(realize_n3(fano_plane(), Seed{1}))), ArtifactKind::point_circle);
    EXPECT_EQ(detect_kind(to_json(polytope_data("cube"))), ArtifactKind::polytope);
    EXPECT_EQ(detect_kind(to_json(sphere_circles(polytope_data("cube")))), ArtifactKind::spherical);
    EXPECT_EQ(detect_kind(json::array()), ArtifactKind::unknown);
}

TEST(EmbeddedData, MatchesShippedFiles) {
    const std::string dir = CONFVIZ_DATA_DIR;
    EXPECT_EQ(embedded::pappus_json(), slurp(dir + "/pappus.json"));
    EXPECT_EQ(embedded::polytopes_json(), slurp(dir + "/polytopes.json"));
    EXPECT_EQ(json::parse(embedded::polytopes_json()).at("version"), 1);
}

TEST(Svg, ViewBoxAndStructure) {
    PointCircleConfig pcc;
    pcc.points = {{0, 0}, {2, 0}};
    pcc.circles = {{{1, 0}, 1.0}};
    pcc.incidence = {{0, 0}, {1, 0}};
    const auto svg = render_svg(pcc);
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
    EXPECT_NE(svg.find("xmlns=\"http://www.w3.org/2000/svg\""), std::string::npos);
    // Content spans x in [0,2] and y in [-1,1]; margin 5% of 2 = 0.1.
    EXPECT_NE(svg.find("viewBox=\"-0.100000 -1.100000 2.200000 2.200000\""), std::string::npos) << svg;
    const std::regex circle("<circle ");
    const auto count = std::distance(std::sregex_iterator(svg.begin(), svg.end(), circle), std::sregex_iterator());
    EXPECT_EQ(count, 3);
    EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");
    EXPECT_EQ(render_svg(pcc), svg);
}

TEST(Svg, LayoutWithLabels) {
    SvgOptions opts;
    opts.labels = true;
    const auto svg = render_svg(layout_gen_cuboctahedron(4, 2.0, 1.0), opts);
    EXPECT_NE(svg.find(">o0</text>"), std::string::npos);
    EXPECT_NE(svg.find("<line "), std::string::npos);
}
