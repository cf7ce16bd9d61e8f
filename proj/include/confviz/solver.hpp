#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "confviz/layout.hpp"

namespace confviz {

// Cyclic symmetry imposed on a solve. orbits[i][j] is the image of
// orbits[i][0] under the j-th power of the rotation by 2*pi/order; every orbit
// has `order` vertices, or a single vertex fixed at the origin.
struct OrbitSymmetry {
    int order = 1;
    std::vector<std::vector<Vertex>> orbits;
    // Optional fixed radius per orbit (same length as orbits when present).
    std::vector<std::optional<double>> pinned_radius;
};

struct SolverOptions {
    double tol = 1e-9;
    int max_iter = 500;
    double initial_damping = 1e-3;
    std::optional<OrbitSymmetry> symmetry;
    // Solutions whose closest vertex pair is nearer than this are rejected
    // and the solve restarts from the next seeded start.
    double min_separation = 1e-3;
    int restarts = 32;
};

struct SolveResult {
    Layout layout;
    double residual = 0.0;  // max | |p_u - p_v| - 1 |
    int iterations = 0;
};

// Levenberg-Marquardt on sum_e (|p_u - p_v| - 1)^2. Throws ConvergenceError
// (carrying the best residual) when no start reaches opts.tol.
SolveResult solve_unit_distance(const Graph& g, const std::variant<Layout, Seed>& init, const SolverOptions& opts = {});

// Orbits of the cyclic group generated by `rotation`, each listed as
// v, rotation(v), rotation^2(v), ... starting from its smallest vertex.
OrbitSymmetry orbits_of(const VertexMap& rotation);

}  // namespace confviz
