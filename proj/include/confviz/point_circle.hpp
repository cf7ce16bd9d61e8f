#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "confviz/geometry.hpp"
#include "confviz/incidence.hpp"
#include "confviz/layout.hpp"
#include "confviz/rng.hpp"

namespace confviz {

struct ConfigFlags {
    std::optional<bool> proper;
    std::optional<bool> lineal;
    std::optional<bool> isometric;
    std::optional<bool> determining;
    std::optional<bool> perfect;

    friend bool operator==(const ConfigFlags&, const ConfigFlags&) = default;
};

// Planar points and circles with a recorded incidence list of
// (point index, circle index) pairs. `degenerate` marks configurations whose
// points are allowed to (nearly) coincide; such configurations are never
// reported as determining.
struct PointCircleConfig {
    std::vector<Point2> points;
    std::vector<Circle> circles;
    std::vector<std::pair<int, int>> incidence;
    ConfigFlags flags;
    Tolerances tols;
    bool degenerate = false;

    friend bool operator==(const PointCircleConfig&, const PointCircleConfig&) = default;

    // Largest incidence residual over the recorded pairs.
    double max_incidence_residual() const;
};

// Combinatorial structure read off the incidence list: circle c becomes
// block c.
IncidenceStructure incidence_structure(const PointCircleConfig& pcc);

struct CircleOptions {
    Tolerances tols;
    // Accept degree-2 vertices; their circle is centred at the vertex through
    // both (equidistant) neighbours.
    bool allow_degree_two = false;
    // Accept coincident points, marking the result degenerate.
    bool allow_degenerate = false;
};

// Geometric V-construction: one circle per vertex through its neighbours.
// Throws ConcyclicityError naming the first vertex whose neighbourhood is not
// concyclic within tols.incidence, DistinctnessError if two circles coincide.
PointCircleConfig circles_from_layout(const Layout& l, const CircleOptions& opts = {});

// Point-circle realisation of a configuration with blocks of size 3: points
// drawn in general position (no 3 collinear, no 4 concyclic), one
// circumcircle per block. Throws SamplingError when the retry budget is
// exhausted.
PointCircleConfig realize_n3(const IncidenceStructure& c, Seed seed, const Tolerances& tols = {});

// Genericity thresholds used by realize_n3 (normalised determinants).
inline constexpr double kGeneralPositionCollinear = 1e-4;
inline constexpr double kGeneralPositionConcyclic = 1e-4;

// Fills every flag; report-only, never throws on geometric grounds.
PointCircleConfig check_flags(PointCircleConfig pcc);

// One sub-configuration per connected component of the incidence structure,
// ordered by smallest point index; points and circles keep their relative
// order.
std::vector<PointCircleConfig> split_components(const PointCircleConfig& pcc);

// Points where more than two circles meet, clustered within tols.cluster,
// together with the circle count at each.
std::vector<std::pair<Point2, int>> multiple_points(const PointCircleConfig& pcc);

// Inversion in the circle (center, radius). `lines` lists point indices on
// each line (at least two per line). Throws ParameterError if the centre lies
// on a line or coincides with a point, or a line's points are not collinear.
PointCircleConfig invert_pointline(const std::vector<Point2>& points, const std::vector<std::vector<int>>& lines,
                                   Point2 center, double radius, const Tolerances& tols = {});

}  // namespace confviz
