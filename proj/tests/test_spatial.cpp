#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "confviz/error.hpp"
#include "confviz/families.hpp"
#include "confviz/incidence.hpp"
#include "confviz/isomorphism.hpp"
#include "confviz/spatial.hpp"
#include "oracles.hpp"

using namespace confviz;

TEST(Polytopes, CountsAndDegrees) {
    struct Want {
        const char* name;
        int v;
        std::size_t e;
        int deg;
    };
    for (const auto& w : {Want{"tetrahedron", 4, 6, 3}, Want{"cube", 8, 12, 3}, Want{"octahedron", 6, 12, 4},
                          Want{"dodecahedron", 20, 30, 3}, Want{"icosahedron", 12, 30, 5},
                          Want{"cuboctahedron", 12, 24, 4}}) {
        const auto p = polytope_data(w.name);
        EXPECT_EQ(p.graph.order(), w.v) << w.name;
        EXPECT_EQ(p.graph.size(), w.e) << w.name;
        EXPECT_EQ(structure_report(p.graph).regular_degree, w.deg) << w.name;
    }
    EXPECT_THROW(polytope_data("rhombicosidodecahedron"), ParameterError);
}

TEST(Polytopes, EqualEdgesFromCoordinates) {
    // Recompute edge lengths directly from the stored coordinates.
    for (const auto& name : polytope_names()) {
        const auto p = polytope_data(name);
        double lo = 1e9;
        double hi = 0.0;
        for (auto [u, v] : p.graph.edges()) {
            const double d = distance(p.coords[static_cast<std::size_t>(u)], p.coords[static_cast<std::size_t>(v)]);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        EXPECT_LT(hi - lo, 1e-9) << name;
    }
}

TEST(Polytopes, DodecahedronGraphMatchesFamily) {
    const auto p = polytope_data("dodecahedron");
    const auto g = build_family({"dodecahedron", {}});
    const auto m = isomorphic(p.graph, g);
    ASSERT_TRUE(m);
    EXPECT_TRUE(oracle::is_isomorphism(p.graph, g, m->image));
}

TEST(Polytopes, CuboctahedronIsCubeLineGraph) {
    const auto co = polytope_data("cuboctahedron").graph;
    const auto lc = line_graph(polytope_data("cube").graph);
    const auto m = isomorphic(co, lc);
    ASSERT_TRUE(m);
    EXPECT_TRUE(oracle::is_isomorphism(co, lc, m->image));
}

TEST(Polytopes, ValidationRejectsDistortedCoordinates) {
    auto p = polytope_data("cube");
    p.coords[0].x += 0.01;
    EXPECT_THROW(validate_polytope(p), ParameterError);
    auto q = polytope_data("cube");
    q.coords.pop_back();
    EXPECT_THROW(validate_polytope(q), ParameterError);
}

TEST(Coplanarity, Examples) {
    const std::vector<Point3> square{{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    const auto s = coplanarity(square);
    EXPECT_LT(s.max_residual, 1e-12);
    EXPECT_NEAR(std::abs(s.plane.normal.z), 1.0, 1e-12);

    // Tetrahedron: the best plane through the four vertices is a coordinate
    // plane at unit distance from every vertex.
    const std::vector<Point3> tet{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    const auto t = coplanarity(tet);
    EXPECT_GT(t.max_residual, 0.1);
    EXPECT_NEAR(t.max_residual, 1.0, 1e-9);

    const auto ico = polytope_data("icosahedron");
    std::vector<Point3> nb;
    for (int w : ico.graph.neighbors(0)) {
        nb.push_back(ico.coords[static_cast<std::size_t>(w)]);
    }
    ASSERT_EQ(nb.size(), 5u);
    EXPECT_LT(coplanarity(nb).max_residual, 1e-9);

    const std::vector<Point3> line{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}};
    EXPECT_THROW(coplanarity(line), DegeneracyError);
}

TEST(Admissibility, Examples) {
    const auto oct = admissible_polytope(polytope_data("octahedron"));
    EXPECT_TRUE(oct.all_coplanar);
    EXPECT_FALSE(oct.planes_distinct);
    EXPECT_FALSE(oct.admissible());
    EXPECT_TRUE(admissible_polytope(polytope_data("dodecahedron")).admissible());
    EXPECT_TRUE(admissible_polytope(polytope_data("cuboctahedron")).admissible());
}

TEST(PointPlane, Dodecahedron) {
    const auto c = point_plane_vconstruct(polytope_data("dodecahedron"));
    EXPECT_EQ(c.planes.size(), 20u);
    EXPECT_LT(c.max_residual, 1e-9);
    const auto s = incidence_structure(c);
    EXPECT_EQ(classify(s).type_string(), "(20_3)");
    EXPECT_EQ(s, v_construct(polytope_data("dodecahedron").graph));
}

TEST(PointPlane, CubeAndOctahedron) {
    const auto cube = polytope_data("cube");
    const auto c = point_plane_vconstruct(cube);
    EXPECT_EQ(classify(incidence_structure(c)).type_string(), "(8_3)");
    // Each plane cuts off one corner: it holds exactly the three neighbours.
    for (std::size_t i = 0; i < c.planes.size(); ++i) {
        int on = 0;
        for (const auto& p : cube.coords) {
            on += std::abs(dot(c.planes[i].normal, p) - c.planes[i].offset) < 1e-9;
        }
        EXPECT_EQ(on, 3);
    }
    EXPECT_THROW(point_plane_vconstruct(polytope_data("octahedron")), AdmissibilityError);
}

TEST(SphereCircles, Examples) {
    const auto cube = sphere_circles(polytope_data("cube"));
    EXPECT_EQ(cube.circles.size(), 8u);
    EXPECT_NEAR(cube.sphere_radius, std::sqrt(3.0), 1e-12);
    for (const auto& c : cube.circles) {
        // Circle through three cube vertices on a corner plane: radius sqrt(8/3).
        EXPECT_NEAR(c.radius, std::sqrt(8.0 / 3.0), 1e-12);
    }
    EXPECT_EQ(sphere_circles(polytope_data("dodecahedron")).circles.size(), 20u);
    EXPECT_THROW(sphere_circles(polytope_data("octahedron")), AdmissibilityError);
}

TEST(Stereographic, EquatorToUnitCircle) {
    SphericalCircleConfig sc;
    sc.sphere_center = {0, 0, 0};
    sc.sphere_radius = 1.0;
    sc.circles.push_back({Plane{{0, 0, 1}, 0.0}, {0, 0, 0}, 1.0});
    const auto p = stereographic_project(sc, Point3{0, 0, 1});
    ASSERT_EQ(p.config.circles.size(), 1u);
    EXPECT_NEAR(p.config.circles[0].radius, 1.0, 1e-12);
    EXPECT_NEAR(p.config.circles[0].center.x, 0.0, 1e-12);
    EXPECT_NEAR(p.config.circles[0].center.y, 0.0, 1e-12);
}

TEST(Stereographic, ExplicitFormulaForPoints) {
    // Projection from the north pole of the unit sphere onto z = 0 sends
    // (x, y, z) to (x, y) / (1 - z).
    SphericalCircleConfig sc;
    sc.sphere_radius = 1.0;
    const double z = 0.3;
    const double r = std::sqrt(1 - z * z);
    sc.points = {{r, 0, z}, {0, r, z}, {-r, 0, z}};
    sc.circles.push_back({Plane{{0, 0, 1}, z}, {0, 0, z}, r});
    sc.incidence = {{0, 0}, {1, 0}, {2, 0}};
    const auto p = stereographic_project(sc, Point3{0, 0, 1});
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(p.config.points[i].x, sc.points[i].x / (1 - z), 1e-12);
        EXPECT_NEAR(p.config.points[i].y, sc.points[i].y / (1 - z), 1e-12);
    }
    EXPECT_NEAR(p.config.circles[0].radius, r / (1 - z), 1e-12);
}

TEST(Stereographic, CubeProjectsToTwoFourThree) {
    const auto sc = sphere_circles(polytope_data("cube"));
    const auto p = stereographic_project(sc, AutoPole{});
    EXPECT_LT(p.max_sample_residual, 1e-9);
    EXPECT_LT(p.config.max_incidence_residual(), 1e-9);
    const auto s = incidence_structure(p.config);
    EXPECT_EQ(classify(s).type_string(), "(8_3)");
    const auto parts = decompose(s);
    ASSERT_EQ(parts.size(), 2u);
    for (const auto& c : parts) {
        EXPECT_EQ(classify(c).type_string(), "(4_3)");
    }
}

TEST(Stereographic, PoleOnCircleRejected) {
    const auto sc = sphere_circles(polytope_data("cube"));
    // A cube vertex lies on the circles of its neighbours.
    EXPECT_THROW(stereographic_project(sc, sc.points[0]), PolePlacementError);
    const auto& c = sc.circles[0];
    // A non-vertex point of circle 0.
    Point3 a = cross(c.plane.normal, Point3{1, 0, 0});
    if (a.norm() < 0.1) {
        a = cross(c.plane.normal, Point3{0, 1, 0});
    }
    const Point3 on = c.center + (c.radius / a.norm()) * a;
    EXPECT_THROW(stereographic_project(sc, on), PolePlacementError);
    EXPECT_THROW(stereographic_project(sc, Point3{0, 0, 5}), PolePlacementError);
}

TEST(Stereographic, AutoPoleDeterministic) {
    const auto sc = sphere_circles(polytope_data("dodecahedron"));
    const auto a = stereographic_project(sc, AutoPole{Seed{4}});
    const auto b = stereographic_project(sc, AutoPole{Seed{4}});
    EXPECT_EQ(a.config, b.config);
    EXPECT_EQ(incidence_structure(a.config), v_construct(polytope_data("dodecahedron").graph));
}

TEST(PappusOracle, NineLines) {
    const auto o = pappus_oracle();
    EXPECT_EQ(o.points.size(), 9u);
    EXPECT_EQ(o.structure.block_count(), 9);
    EXPECT_EQ(classify(o.structure).type_string(), "(9_3)");
    // Shipped Pappus graph data is the Levi graph of this configuration.
    const auto shipped = build_family({"pappus", {}});
    EXPECT_EQ(shipped.edges(), oracle::levi_by_hand(o.structure).edges());
}
