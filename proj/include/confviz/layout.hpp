#pragma once

#include <json.hpp>
#include <variant>
#include <vector>

#include "confviz/geometry.hpp"
#include "confviz/graph.hpp"
#include "confviz/rng.hpp"

namespace confviz {

// A graph drawn in the plane. `meta` records how the positions were made
// (construction name, angles, seed, radii) so a run can be reproduced.
struct Layout {
    Graph graph;
    std::vector<Point2> pos;
    nlohmann::json meta = nlohmann::json::object();

    friend bool operator==(const Layout&, const Layout&) = default;
};

// Largest | |p_u - p_v| - 1 | over all edges.
double max_edge_deviation(const Layout& l);

// Smallest distance between two distinct vertices (infinity for < 2 vertices).
double min_separation(const std::vector<Point2>& pos);

// Regular n-gon with unit sides on cycle(n).
Layout layout_polygon(int n);

using AngleList = std::vector<double>;

// Vertex S (a subset of {0..d-1}) sits at sum_{i in S} (cos t_i, sin t_i).
// Explicit angles that make two vertices coincide throw DegeneracyError; a
// seed resamples up to kMaxResamples times before throwing SamplingError.
Layout layout_hypercube(int d, const std::variant<AngleList, Seed>& angles, const Tolerances& tol = {});

// pos(a, x) = pos_a(a) + Rot(angle) pos_b(x) on cartesian_product(la.graph, lb.graph).
Layout layout_product(const Layout& la, const Layout& lb, const std::variant<double, Seed>& angle,
                      const Tolerances& tol = {});

// D_n-symmetric drawing of gen_cuboctahedron(n) from a prism whose outer and
// inner n-gons have circumradii r_outer > r_inner > 0.
Layout layout_gen_cuboctahedron(int n, double r_outer, double r_inner, const Tolerances& tol = {});

}  // namespace confviz
