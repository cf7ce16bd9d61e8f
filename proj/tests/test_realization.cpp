#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "confviz/error.hpp"
#include "confviz/families.hpp"
#include "confviz/geometry.hpp"
#include "confviz/incidence.hpp"
#include "confviz/isomorphism.hpp"
#include "confviz/layout.hpp"
#include "confviz/point_circle.hpp"
#include "confviz/solver.hpp"
#include "oracles.hpp"

using namespace confviz;

namespace {

constexpr double kPi = std::numbers::pi;

Graph fam(const std::string& s) { return build_family(FamilySpec::parse(s)); }

Layout segment() { return Layout{complete_graph(2), {{0.0, 0.0}, {1.0, 0.0}}, {}}; }

// Every pair of vertices: edges at distance 1, others apart.
void expect_unit_distance(const Layout& l, double tol) {
    const auto a = oracle::adjacency(l.graph);
    for (int u = 0; u < l.graph.order(); ++u) {
        for (int v = u + 1; v < l.graph.order(); ++v) {
            const double d = distance(l.pos[static_cast<std::size_t>(u)], l.pos[static_cast<std::size_t>(v)]);
            if (a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                EXPECT_NEAR(d, 1.0, tol);
            } else {
                EXPECT_GT(d, 1e-6);
            }
        }
    }
}

SolveResult solve_symmetric(const std::string& name, std::optional<std::size_t> pin = std::nullopt) {
    const auto g = fam(name);
    SolverOptions opts;
    opts.symmetry = orbits_of(*subset_shift_automorphism(g, 5));
    if (pin) {
        opts.symmetry->pinned_radius.assign(opts.symmetry->orbits.size(), std::nullopt);
        opts.symmetry->pinned_radius[*pin] = 1.0;
    }
    return solve_unit_distance(g, Seed{1}, opts);
}

}  // namespace

TEST(Circumcircle, Examples) {
    const auto c = circumcircle({0, 0}, {1, 0}, {0, 1});
    EXPECT_NEAR(c.center.x, 0.5, 1e-15);
    EXPECT_NEAR(c.center.y, 0.5, 1e-15);
    EXPECT_NEAR(c.radius, std::sqrt(2.0) / 2.0, 1e-15);
    const auto u = circumcircle({1, 0}, {-1, 0}, {0, 1});
    EXPECT_NEAR(u.center.x, 0.0, 1e-15);
    EXPECT_NEAR(u.center.y, 0.0, 1e-15);
    EXPECT_NEAR(u.radius, 1.0, 1e-15);
    EXPECT_THROW(circumcircle({0, 0}, {1, 0}, {2, 0}), DegeneracyError);
    EXPECT_THROW(circumcircle({0, 0}, {0, 0}, {2, 1}), DegeneracyError);
}

TEST(FitCircle, Examples) {
    const std::vector<Point2> quad{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const auto f = fit_circle(quad);
    EXPECT_NEAR(f.circle.radius, 1.0, 1e-12);
    EXPECT_LT(f.max_residual, 1e-12);

    const std::vector<Point2> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const auto s = fit_circle(square);
    EXPECT_NEAR(s.circle.radius, std::sqrt(2.0) / 2.0, 1e-12);
    EXPECT_LT(s.max_residual, 1e-12);

    // Geometric least squares optimum computed separately: centre
    // (0.52626, 0.52738), radius 0.72612, worst residual 0.018919.
    const std::vector<Point2> off{{0, 0}, {1, 0}, {0, 1}, {1, 1.1}};
    const auto o = fit_circle(off);
    EXPECT_GT(o.max_residual, 0.01);
    EXPECT_NEAR(o.max_residual, 0.018919, 1e-5);
    EXPECT_NEAR(o.circle.center.x, 0.52626, 1e-4);
    EXPECT_NEAR(o.circle.center.y, 0.52738, 1e-4);
    EXPECT_NEAR(o.circle.radius, 0.72612, 1e-4);

    const std::vector<Point2> line{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    EXPECT_THROW(fit_circle(line), DegeneracyError);
}

TEST(IntersectCircles, Counts) {
    EXPECT_EQ(intersect_circles({{0, 0}, 1}, {{1, 0}, 1}).size(), 2u);
    EXPECT_EQ(intersect_circles({{0, 0}, 1}, {{2, 0}, 1}).size(), 1u);
    EXPECT_EQ(intersect_circles({{0, 0}, 1}, {{3, 0}, 1}).size(), 0u);
    for (const auto& p : intersect_circles({{0, 0}, 1}, {{1, 0}, 1})) {
        EXPECT_NEAR(p.x, 0.5, 1e-15);
        EXPECT_NEAR(std::abs(p.y), std::sqrt(3.0) / 2.0, 1e-15);
    }
}

TEST(LayoutPolygon, Examples) {
    const auto p5 = layout_polygon(5);
    EXPECT_NEAR(p5.meta.at("circumradius").get<double>(), 0.850651, 1e-6);
    EXPECT_NEAR(layout_polygon(3).meta.at("circumradius").get<double>(), 1.0 / std::sqrt(3.0), 1e-15);
    for (int n = 3; n <= 12; ++n) {
        EXPECT_LT(max_edge_deviation(layout_polygon(n)), 1e-12);
    }
}

TEST(LayoutHypercube, Square) {
    const auto l = layout_hypercube(2, AngleList{0.0, kPi / 2.0});
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : l.pos) {
        pts.emplace_back(std::round(p.x * 1e12) / 1e12, std::round(p.y * 1e12) / 1e12);
    }
    std::sort(pts.begin(), pts.end());
    const std::vector<std::pair<double, double>> want{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    EXPECT_EQ(pts, want);
}

TEST(LayoutHypercube, SeededIsUnitDistance) {
    const auto l3 = layout_hypercube(3, Seed{7});
    EXPECT_EQ(l3.pos.size(), 8u);
    EXPECT_EQ(l3.graph.size(), 12u);
    expect_unit_distance(l3, 1e-12);
    const auto l5 = layout_hypercube(5, Seed{7});
    EXPECT_EQ(l5.pos.size(), 32u);
    EXPECT_EQ(l5.graph.size(), 80u);
    expect_unit_distance(l5, 1e-12);
    EXPECT_THROW(layout_hypercube(3, AngleList{0.0, kPi / 3.0, 2.0 * kPi / 3.0}), DegeneracyError);
    EXPECT_THROW(layout_hypercube(2, AngleList{0.0}), ParameterError);
}

TEST(LayoutProduct, C7TimesK2) {
    const auto l = layout_product(layout_polygon(7), segment(), 0.3);
    EXPECT_EQ(l.pos.size(), 14u);
    EXPECT_EQ(l.graph.size(), 21u);
    expect_unit_distance(l, 1e-12);
}

TEST(LayoutProduct, C5TimesSquare) {
    const auto l = layout_product(layout_polygon(5), layout_hypercube(2, AngleList{0.0, kPi / 2.0}), Seed{3});
    EXPECT_EQ(l.pos.size(), 20u);
    EXPECT_EQ(structure_report(l.graph).regular_degree, 4);
    expect_unit_distance(l, 1e-12);
}

TEST(LayoutProduct, CoincidenceHandling) {
    EXPECT_THROW(layout_product(segment(), segment(), 0.0), DegeneracyError);
    const auto l = layout_product(segment(), segment(), Seed{1});
    EXPECT_GT(min_separation(l.pos), 1e-6);
    expect_unit_distance(l, 1e-12);
}

TEST(LayoutGenCuboctahedron, NeighbourhoodsConcyclic) {
    const auto l = layout_gen_cuboctahedron(7, 2.0, 1.0);
    EXPECT_EQ(l.pos.size(), 21u);
    for (int v = 0; v < 21; ++v) {
        std::vector<Point2> nb;
        for (int w : l.graph.neighbors(v)) {
            nb.push_back(l.pos[static_cast<std::size_t>(w)]);
        }
        EXPECT_LT(fit_circle(nb).max_residual, 1e-9) << v;
    }
}

TEST(LayoutGenCuboctahedron, RotationSymmetry) {
    for (int n = 3; n <= 9; ++n) {
        const auto l = layout_gen_cuboctahedron(n, 2.0, 1.0);
        for (const auto& p : l.pos) {
            const Point2 q = rotate(p, 2.0 * kPi / n);
            double best = 1e9;
            for (const auto& r : l.pos) {
                best = std::min(best, distance(q, r));
            }
            EXPECT_LT(best, 1e-12);
        }
    }
}

TEST(LayoutGenCuboctahedron, SmallestCaseIsPrismLineGraph) {
    const auto l = layout_gen_cuboctahedron(3, 2.0, 1.0);
    const auto target = line_graph(prism_graph(3));
    const auto m = isomorphic(l.graph, target);
    ASSERT_TRUE(m);
    EXPECT_TRUE(oracle::is_isomorphism(l.graph, target, m->image));
    EXPECT_THROW(layout_gen_cuboctahedron(5, 1.0, 2.0), ParameterError);
}

TEST(Solver, PerturbedPentagon) {
    auto init = layout_polygon(5);
    const std::vector<Point2> kick{{0.05, -0.02}, {-0.03, 0.04}, {0.01, 0.06}, {-0.04, -0.05}, {0.02, 0.03}};
    for (std::size_t i = 0; i < 5; ++i) {
        init.pos[i] = init.pos[i] + kick[i];
    }
    ASSERT_GT(max_edge_deviation(init), 1e-3);
    const auto r = solve_unit_distance(init.graph, init);
    EXPECT_LT(r.residual, 1e-10);
    EXPECT_LT(max_edge_deviation(r.layout), 1e-10);
}

TEST(Solver, SymmetricPetersen) {
    const auto r = solve_symmetric("petersen");
    EXPECT_LT(r.residual, 1e-9);
    expect_unit_distance(r.layout, 1e-9);
}

TEST(Solver, DesarguesAndPappus) {
    const auto d = solve_unit_distance(fam("desargues"), Seed{1});
    EXPECT_LT(d.residual, 1e-9);
    expect_unit_distance(d.layout, 1e-9);
    const auto p = solve_unit_distance(fam("pappus"), Seed{1});
    EXPECT_LT(p.residual, 1e-9);
    expect_unit_distance(p.layout, 1e-9);
}

TEST(Solver, ReportsFailure) {
    // K4 has no unit-distance drawing in the plane.
    SolverOptions opts;
    opts.restarts = 4;
    try {
        solve_unit_distance(complete_graph(4), Seed{1}, opts);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& e) {
        EXPECT_GT(e.best_residual(), 1e-3);
    }
}

TEST(Solver, Deterministic) {
    const auto a = solve_unit_distance(fam("pappus"), Seed{5});
    const auto b = solve_unit_distance(fam("pappus"), Seed{5});
    EXPECT_EQ(a.layout.pos, b.layout.pos);
}

TEST(Circles, PetersenUnitCircles) {
    const auto pcc = circles_from_layout(solve_symmetric("petersen").layout);
    ASSERT_EQ(pcc.circles.size(), 10u);
    for (const auto& c : pcc.circles) {
        EXPECT_NEAR(c.radius, 1.0, 1e-9);
    }
    EXPECT_EQ(classify(incidence_structure(pcc)).type_string(), "(10_3)");
}

TEST(Circles, HypercubeFourSplits) {
    const auto pcc = circles_from_layout(layout_hypercube(4, Seed{2}));
    const auto c = incidence_structure(pcc);
    EXPECT_EQ(classify(c).type_string(), "(16_4)");
    const auto parts = decompose(c);
    ASSERT_EQ(parts.size(), 2u);
    for (const auto& p : parts) {
        EXPECT_EQ(classify(p).type_string(), "(8_4)");
    }
}

TEST(Circles, GenCuboctahedronSeven) {
    const auto pcc = circles_from_layout(layout_gen_cuboctahedron(7, 2.0, 1.0));
    EXPECT_EQ(classify(incidence_structure(pcc)).type_string(), "(21_4)");
}

TEST(Circles, AgreesWithVConstruction) {
    const std::vector<Layout> layouts{solve_symmetric("petersen").layout, layout_hypercube(3, Seed{4}),
                                      layout_gen_cuboctahedron(5, 2.0, 1.0),
                                      solve_unit_distance(fam("pappus"), Seed{1}).layout};
    for (const auto& l : layouts) {
        EXPECT_EQ(incidence_structure(circles_from_layout(l)), v_construct(l.graph));
    }
}

TEST(Circles, Errors) {
    // Degree-4 vertices in a scrambled drawing are not concyclic.
    auto l = layout_hypercube(4, Seed{1});
    l.pos[1] = l.pos[1] + Point2{0.013, -0.021};
    EXPECT_THROW(circles_from_layout(l), ConcyclicityError);

    EXPECT_THROW(circles_from_layout(layout_polygon(5)), ParameterError);
    CircleOptions opts;
    opts.allow_degree_two = true;
    const auto pent = layout_polygon(5);
    const auto pcc = circles_from_layout(pent, opts);
    for (std::size_t v = 0; v < 5; ++v) {
        EXPECT_EQ(pcc.circles[v].center, pent.pos[v]);
        EXPECT_NEAR(pcc.circles[v].radius, 1.0, 1e-12);
    }

    auto dup = layout_hypercube(3, Seed{1});
    dup.pos[7] = dup.pos[0];
    EXPECT_THROW(circles_from_layout(dup), DegeneracyError);
}

TEST(CheckFlags, PetersenIsPerfect) {
    const auto pcc = check_flags(circles_from_layout(solve_symmetric("petersen").layout));
    EXPECT_EQ(pcc.flags.proper, true);
    EXPECT_EQ(pcc.flags.isometric, true);
    EXPECT_EQ(pcc.flags.lineal, true);
    EXPECT_EQ(pcc.flags.determining, true);
    EXPECT_EQ(pcc.flags.perfect, true);
}

TEST(CheckFlags, DesarguesCopyThatIsNotDetermining) {
    // With one orbit on the unit circle around the origin, five circles of the
    // second copy meet at the origin, which is not a configuration point.
    const auto r = solve_symmetric("desargues", 1);
    const auto parts = split_components(circles_from_layout(r.layout));
    ASSERT_EQ(parts.size(), 2u);
    std::vector<bool> det;
    for (const auto& p : parts) {
        const auto c = check_flags(p);
        EXPECT_EQ(classify(incidence_structure(p)).type_string(), "(10_3)");
        det.push_back(*c.flags.determining);
        const bool through_origin = std::count_if(p.circles.begin(), p.circles.end(), [](const Circle& circ) {
                                        return circ.residual({0.0, 0.0}) < 1e-9;
                                    }) >= 3;
        EXPECT_EQ(through_origin, !*c.flags.determining);
    }
    EXPECT_NE(det[0], det[1]);
}

TEST(CheckFlags, SingleCircleIsImproper) {
    PointCircleConfig pcc;
    pcc.points = {{1, 0}, {0, 1}, {-1, 0}};
    pcc.circles = {{{0, 0}, 1.0}};
    pcc.incidence = {{0, 0}, {1, 0}, {2, 0}};
    EXPECT_EQ(check_flags(pcc).flags.proper, false);
}

TEST(CheckFlags, DegenerateNeverDetermining) {
    auto pcc = check_flags(circles_from_layout(solve_symmetric("petersen").layout));
    pcc.degenerate = true;
    EXPECT_EQ(check_flags(pcc).flags.determining, false);
}

TEST(RealizeN3, FanoAndPappus) {
    for (const auto& c : {fano_plane(), v_construct(fam("petersen"))}) {
        const auto pcc = realize_n3(c, Seed{1});
        EXPECT_LT(pcc.max_incidence_residual(), 1e-9);
        EXPECT_EQ(incidence_structure(pcc), c);
    }
    EXPECT_THROW(realize_n3(v_construct(fam("hypercube:4")), Seed{1}), ParameterError);
}

TEST(RealizeN3, GeneralPosition) {
    const auto pcc = realize_n3(fano_plane(), Seed{3});
    const auto& p = pcc.points;
    const auto n = p.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                const double area2 = std::abs((p[b].x - p[a].x) * (p[c].y - p[a].y) - (p[b].y - p[a].y) * (p[c].x - p[a].x));
                EXPECT_GT(area2, 1e-6);
                const auto circ = circumcircle(p[a], p[b], p[c]);
                for (std::size_t d = c + 1; d < n; ++d) {
                    EXPECT_GT(circ.residual(p[d]), 1e-6);
                }
            }
        }
    }
}

TEST(Invert, ConcurrentLines) {
    // Three lines through (1,1), two further points on each.
    const Point2 o{1.0, 1.0};
    std::vector<Point2> pts{o};
    std::vector<std::vector<int>> lines;
    for (double angle : {0.2, 1.3, 2.4}) {
        const Point2 dir{std::cos(angle), std::sin(angle)};
        pts.push_back(o + 0.7 * dir);
        pts.push_back(o + (-1.1) * dir);
        lines.push_back({0, static_cast<int>(pts.size()) - 2, static_cast<int>(pts.size()) - 1});
    }
    const auto pcc = invert_pointline(pts, lines, {0.0, 0.0}, 1.0);
    EXPECT_LT(pcc.max_incidence_residual(), 1e-9);
    const Point2 o_image{0.5, 0.5};
    for (const auto& c : pcc.circles) {
        EXPECT_LT(c.residual(o_image), 1e-12);
        EXPECT_LT(c.residual({0.0, 0.0}), 1e-12);
    }
    EXPECT_EQ(pcc.flags.proper, false);
    EXPECT_EQ(check_flags(pcc).flags.proper, false);

    // Scaling the radius changes sizes only.
    const auto big = check_flags(invert_pointline(pts, lines, {0.0, 0.0}, 3.0));
    const auto small = check_flags(pcc);
    EXPECT_EQ(big.flags, small.flags);
    EXPECT_NEAR(big.circles[0].radius, 9.0 * pcc.circles[0].radius, 1e-12);

    EXPECT_THROW(invert_pointline(pts, lines, o, 1.0), ParameterError);
}

TEST(Movability, DifferentSeedsGiveNonCongruentCircleSystems) {
    auto centre_distances = [](std::uint64_t seed) {
        const auto pcc = circles_from_layout(layout_hypercube(3, Seed{seed}));
        std::vector<double> d;
        for (std::size_t i = 0; i < pcc.circles.size(); ++i) {
            for (std::size_t j = i + 1; j < pcc.circles.size(); ++j) {
                d.push_back(distance(pcc.circles[i].center, pcc.circles[j].center));
            }
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    const auto a = centre_distances(1);
    const auto b = centre_distances(2);
    double gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        gap = std::max(gap, std::abs(a[i] - b[i]));
    }
    EXPECT_GT(gap, 1e-6);
}
