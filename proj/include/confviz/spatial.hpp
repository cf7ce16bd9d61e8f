#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "confviz/graph.hpp"
#include "confviz/incidence.hpp"
#include "confviz/point_circle.hpp"
#include "confviz/rng.hpp"

namespace confviz {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Point3 operator*(double s, Point3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend bool operator==(const Point3&, const Point3&) = default;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross(Point3 a, Point3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
inline double distance(Point3 a, Point3 b) { return (a - b).norm(); }

// Points p with normal . p = offset; |normal| = 1.
struct Plane {
    Point3 normal{0.0, 0.0, 1.0};
    double offset = 0.0;

    double signed_distance(Point3 p) const { return dot(normal, p) - offset; }
    // Orientation fixed by making the first non-zero normal component positive.
    Plane canonical() const;
};

struct PolytopeSkeleton {
    std::string name;
    Graph graph;
    std::vector<Point3> coords;

    friend bool operator==(const PolytopeSkeleton&, const PolytopeSkeleton&) = default;
};

std::vector<std::string> polytope_names();

// Loads the shipped coordinates and validates vertex/edge counts, equal edge
// lengths, edges = closest pairs, and a common circumsphere.
PolytopeSkeleton polytope_data(const std::string& name);

// Throws ParameterError describing the first violated check.
void validate_polytope(const PolytopeSkeleton& p, double tol = 1e-9);

struct PlaneFit {
    Plane plane;
    double max_residual = 0.0;
};

// Best-fit plane through >= 3 points (smallest singular direction of the
// centred cloud). Throws DegeneracyError for collinear input.
PlaneFit coplanarity(std::span<const Point3> pts);

inline constexpr double kPlaneDistinctTol = 1e-7;

struct PolytopeAdmissibility {
    bool all_coplanar = true;
    bool planes_distinct = true;
    std::vector<PlaneFit> planes;  // one per vertex (empty fit when degenerate)
    std::optional<int> non_coplanar_vertex;
    std::optional<std::pair<int, int>> coincident_planes;
    bool admissible() const { return all_coplanar && planes_distinct; }
    std::string diagnosis() const;
};

PolytopeAdmissibility admissible_polytope(const PolytopeSkeleton& p, double tol = 1e-9);

struct PointPlaneConfig {
    std::vector<Point3> points;
    std::vector<Plane> planes;
    std::vector<std::pair<int, int>> incidence;  // (point, plane)
    double max_residual = 0.0;
};

// Plane i passes through the neighbours of vertex i. Incidences are read off
// geometrically (every point within tol of the plane). Throws
// AdmissibilityError when admissible_polytope fails.
PointPlaneConfig point_plane_vconstruct(const PolytopeSkeleton& p, double tol = 1e-9);

IncidenceStructure incidence_structure(const PointPlaneConfig& c);

struct SphereCircle {
    Plane plane;
    Point3 center;
    double radius = 0.0;
};

struct SphericalCircleConfig {
    Point3 sphere_center;
    double sphere_radius = 1.0;
    std::vector<Point3> points;
    std::vector<SphereCircle> circles;
    std::vector<std::pair<int, int>> incidence;  // (point, circle)
};

// Circle of vertex v = (plane through N(v)) ∩ circumsphere. Throws
// ParameterError for a skeleton that is not inscribed in a sphere,
// AdmissibilityError when the polytope is not admissible.
SphericalCircleConfig sphere_circles(const PolytopeSkeleton& p, double tol = 1e-9);

struct AutoPole {
    Seed seed{1};
    // Minimum distance from the pole to every circle plane and configuration
    // point, relative to the sphere radius.
    double clearance = 1e-2;
    int attempts = 256;
};

struct Projection {
    PointCircleConfig config;
    Point3 pole;
    double max_sample_residual = 0.0;  // over all verification samples
};

inline constexpr int kProjectionSamples = 16;

// Stereographic projection from `pole` onto the plane through the sphere
// centre orthogonal to the pole direction. Each image circle is the
// circumcircle of three projected samples, verified on kProjectionSamples
// more. Throws PolePlacementError when the pole lies on a circle or point
// (or no admissible pole is found in auto mode).
Projection stereographic_project(const SphericalCircleConfig& sc, const std::variant<Point3, AutoPole>& pole,
                                 const Tolerances& tols = {});

// The Pappus configuration read off numerically: three points on each of two
// lines, the three cross-joins, and every collinear triple among the nine
// points.
struct PappusOracle {
    std::vector<Point2> points;
    IncidenceStructure structure;
};

PappusOracle pappus_oracle();

}  // namespace confviz
