#include "confviz/spatial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numbers>

#include "confviz/embedded_data.hpp"
#include "confviz/error.hpp"
#include "confviz/io.hpp"

namespace confviz {

namespace {

constexpr double kPi = std::numbers::pi;

Point3 normalized(Point3 p) { return (1.0 / p.norm()) * p; }

struct ExpectedCounts {
    int vertices;
    int edges;
};

const std::map<std::string, ExpectedCounts>& expected_counts() {
    static const std::map<std::string, ExpectedCounts> table = {
        {"tetrahedron", {4, 6}},   {"cube", {8, 12}},         {"octahedron", {6, 12}},
        {"dodecahedron", {20, 30}}, {"icosahedron", {12, 30}}, {"cuboctahedron", {12, 24}},
    };
    return table;
}

Point3 centroid(std::span<const Point3> pts) {
    Point3 c;
    for (const auto& p : pts) {
        c = c + p;
    }
    return (1.0 / static_cast<double>(pts.size())) * c;
}

}  // namespace

Plane Plane::canonical() const {
    for (double c : {normal.x, normal.y, normal.z}) {
        if (std::abs(c) > 1e-12) {
            return c > 0.0 ? *this : Plane{-1.0 * normal, -offset};
        }
    }
    return *this;
}

std::vector<std::string> polytope_names() {
    std::vector<std::string> out;
    for (const auto& [name, counts] : expected_counts()) {
        out.push_back(name);
    }
    return out;
}

void validate_polytope(const PolytopeSkeleton& p, double tol) {
    const auto fail = [&](const std::string& what) { throw ParameterError("polytope '" + p.name + "': " + what); };
    if (p.graph.order() == 0 || p.coords.size() != static_cast<std::size_t>(p.graph.order())) {
        fail("coordinate count does not match the vertex count");
    }
    for (const auto& c : p.coords) {
        if (!std::isfinite(c.x) || !std::isfinite(c.y) || !std::isfinite(c.z)) {
            fail("non-finite coordinate");
        }
    }
    if (auto it = expected_counts().find(p.name); it != expected_counts().end()) {
        if (p.graph.order() != it->second.vertices || static_cast<int>(p.graph.size()) != it->second.edges) {
            fail("expected " + std::to_string(it->second.vertices) + " vertices and " +
                 std::to_string(it->second.edges) + " edges");
        }
    }
    if (p.graph.size() == 0) {
        fail("no edges");
    }
    const auto& es = p.graph.edges();
    const double len = distance(p.coords[static_cast<std::size_t>(es[0].first)],
                                p.coords[static_cast<std::size_t>(es[0].second)]);
    if (len <= tol) {
        fail("edge endpoints coincide");
    }
    for (auto [u, v] : es) {
        if (std::abs(distance(p.coords[static_cast<std::size_t>(u)], p.coords[static_cast<std::size_t>(v)]) - len) >
            tol) {
            fail("edge lengths differ");
        }
    }
    for (int u = 0; u < p.graph.order(); ++u) {
        for (int v = u + 1; v < p.graph.order(); ++v) {
            const double d = distance(p.coords[static_cast<std::size_t>(u)], p.coords[static_cast<std::size_t>(v)]);
            if (d < len - tol) {
                fail("vertices closer than the edge length");
            }
            if (std::abs(d - len) <= tol && !p.graph.adjacent(u, v)) {
                fail("vertex pair at edge length is not an edge");
            }
        }
    }
    const Point3 c = centroid(p.coords);
    const double r = distance(p.coords[0], c);
    for (const auto& q : p.coords) {
        if (std::abs(distance(q, c) - r) > tol * (1.0 + r)) {
            fail("vertices are not on a common circumsphere");
        }
    }
}

PolytopeSkeleton polytope_data(const std::string& name) {
    const auto doc = nlohmann::json::parse(embedded::polytopes_json());
    for (const auto& entry : doc.at("polytopes")) {
        if (entry.at("name").get<std::string>() == name) {
            auto p = polytope_from_json(entry);
            validate_polytope(p);
            return p;
        }
    }
    throw ParameterError("unknown polytope '" + name + "'");
}

PlaneFit coplanarity(std::span<const Point3> pts) {
    if (pts.size() < 3) {
        throw ParameterError("coplanarity needs at least 3 points, got " + std::to_string(pts.size()));
    }
    const Point3 c = centroid(pts);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(pts.size()), 3);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point3 d = pts[i] - c;
        m.row(static_cast<Eigen::Index>(i)) << d.x, d.y, d.z;
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
    const auto sv = svd.singularValues();
    if (sv(0) == 0.0 || sv(1) <= 1e-10 * sv(0)) {
        throw DegeneracyError("coplanarity: points are collinear");
    }
    const Eigen::Vector3d n = svd.matrixV().col(2).normalized();
    PlaneFit fit;
    fit.plane.normal = {n.x(), n.y(), n.z()};
    fit.plane.offset = dot(fit.plane.normal, c);
    fit.plane = fit.plane.canonical();
    for (const auto& p : pts) {
        fit.max_residual = std::max(fit.max_residual, std::abs(fit.plane.signed_distance(p)));
    }
    return fit;
}

std::string PolytopeAdmissibility::diagnosis() const {
    if (admissible()) {
        return "admissible";
    }
    if (non_coplanar_vertex) {
        return "neighbours of vertex " + std::to_string(*non_coplanar_vertex) + " are not coplanar";
    }
    return "neighbour planes of vertices " + std::to_string(coincident_planes->first) + " and " +
           std::to_string(coincident_planes->second) + " coincide";
}

PolytopeAdmissibility admissible_polytope(const PolytopeSkeleton& p, double tol) {
    PolytopeAdmissibility r;
    for (int v = 0; v < p.graph.order(); ++v) {
        std::vector<Point3> nb;
        for (Vertex w : p.graph.neighbors(v)) {
            nb.push_back(p.coords[static_cast<std::size_t>(w)]);
        }
        PlaneFit fit;
        bool ok = true;
        try {
            fit = coplanarity(nb);
            ok = fit.max_residual <= tol;
        } catch (const Error&) {
            ok = false;
        }
        if (!ok && r.all_coplanar) {
            r.all_coplanar = false;
            r.non_coplanar_vertex = v;
        }
        r.planes.push_back(fit);
    }
    for (std::size_t i = 0; i < r.planes.size() && r.planes_distinct; ++i) {
        for (std::size_t j = i + 1; j < r.planes.size(); ++j) {
            const Plane a = r.planes[i].plane;
            const Plane b = r.planes[j].plane;
            const Point3 dn = a.normal - b.normal;
            const double gap =
                std::max({std::abs(dn.x), std::abs(dn.y), std::abs(dn.z), std::abs(a.offset - b.offset)});
            if (gap <= kPlaneDistinctTol) {
                r.planes_distinct = false;
                r.coincident_planes = std::make_pair(static_cast<int>(i), static_cast<int>(j));
                break;
            }
        }
    }
    return r;
}

PointPlaneConfig point_plane_vconstruct(const PolytopeSkeleton& p, double tol) {
    const auto adm = admissible_polytope(p, tol);
    if (!adm.admissible()) {
        throw AdmissibilityError("polytope '" + p.name + "' is not admissible: " + adm.diagnosis());
    }
    PointPlaneConfig c;
    c.points = p.coords;
    for (std::size_t i = 0; i < adm.planes.size(); ++i) {
        c.planes.push_back(adm.planes[i].plane);
        for (std::size_t q = 0; q < c.points.size(); ++q) {
            const double d = std::abs(adm.planes[i].plane.signed_distance(c.points[q]));
            if (d <= tol) {
                c.incidence.emplace_back(static_cast<int>(q), static_cast<int>(i));
                c.max_residual = std::max(c.max_residual, d);
            }
        }
    }
    std::sort(c.incidence.begin(), c.incidence.end());
    return c;
}

IncidenceStructure incidence_structure(const PointPlaneConfig& c) {
    std::vector<Block> blocks(c.planes.size());
    for (auto [p, b] : c.incidence) {
        blocks.at(static_cast<std::size_t>(b)).push_back(p);
    }
    return IncidenceStructure(static_cast<int>(c.points.size()), std::move(blocks), "point-plane incidence");
}

SphericalCircleConfig sphere_circles(const PolytopeSkeleton& p, double tol) {
    SphericalCircleConfig sc;
    sc.sphere_center = centroid(p.coords);
    double sum = 0.0;
    for (const auto& q : p.coords) {
        sum += distance(q, sc.sphere_center);
    }
    sc.sphere_radius = sum / static_cast<double>(p.coords.size());
    for (const auto& q : p.coords) {
        if (std::abs(distance(q, sc.sphere_center) - sc.sphere_radius) > tol * (1.0 + sc.sphere_radius)) {
            throw ParameterError("sphere_circles: polytope '" + p.name + "' is not inscribed in a sphere");
        }
    }
    const auto pp = point_plane_vconstruct(p, tol);
    sc.points = pp.points;
    sc.incidence = pp.incidence;
    for (const auto& plane : pp.planes) {
        const double h = plane.signed_distance(sc.sphere_center);
        if (std::abs(h) >= sc.sphere_radius) {
            throw ParameterError("sphere_circles: a neighbour plane misses the circumsphere");
        }
        SphereCircle circle;
        circle.plane = plane;
        circle.center = sc.sphere_center - h * plane.normal;
        circle.radius = std::sqrt(sc.sphere_radius * sc.sphere_radius - h * h);
        sc.circles.push_back(circle);
    }
    return sc;
}

namespace {

struct Basis {
    Point3 e1;
    Point3 e2;
};

// Orthonormal pair spanning the plane orthogonal to u, built from the
// coordinate axis least aligned with u (x first on ties).
Basis orthogonal_basis(Point3 u) {
    const std::array<Point3, 3> axes{Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}};
    const std::array<double, 3> align{std::abs(u.x), std::abs(u.y), std::abs(u.z)};
    const auto pick = static_cast<std::size_t>(std::min_element(align.begin(), align.end()) - align.begin());
    const Point3 a = axes[pick];
    const Point3 e1 = normalized(a - dot(a, u) * u);
    return {e1, cross(u, e1)};
}

double clearance(const SphericalCircleConfig& sc, Point3 pole) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : sc.circles) {
        best = std::min(best, std::abs(c.plane.signed_distance(pole)));
    }
    for (const auto& p : sc.points) {
        best = std::min(best, distance(p, pole));
    }
    return best;
}

Point3 choose_pole(const SphericalCircleConfig& sc, const AutoPole& opts) {
    const double need = opts.clearance * sc.sphere_radius;
    // Circle poles: the cap tips on the far side of each plane from the centre.
    Point3 sum;
    for (const auto& c : sc.circles) {
        const double h = c.plane.signed_distance(sc.sphere_center);
        const Point3 out = h <= 0.0 ? c.plane.normal : -1.0 * c.plane.normal;
        sum = sum + (sc.sphere_center + sc.sphere_radius * out);
    }
    if (!sc.circles.empty()) {
        const Point3 m = (1.0 / static_cast<double>(sc.circles.size())) * sum - sc.sphere_center;
        if (m.norm() > 1e-9 * (1.0 + sc.sphere_radius)) {
            const Point3 candidate = sc.sphere_center - sc.sphere_radius * normalized(m);
            if (clearance(sc, candidate) >= need) {
                return candidate;
            }
        }
    }
    SeededRng rng(opts.seed);
    for (int i = 0; i < opts.attempts; ++i) {
        const double z = rng.uniform(-1.0, 1.0);
        const double phi = rng.uniform(0.0, 2.0 * kPi);
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        const Point3 candidate = sc.sphere_center + sc.sphere_radius * Point3{s * std::cos(phi), s * std::sin(phi), z};
        if (clearance(sc, candidate) >= need) {
            return candidate;
        }
    }
    throw PolePlacementError("stereographic_project: no pole with clearance " + std::to_string(opts.clearance) +
                             " found in " + std::to_string(opts.attempts) + " attempts");
}

}  // namespace

Projection stereographic_project(const SphericalCircleConfig& sc, const std::variant<Point3, AutoPole>& pole_choice,
                                 const Tolerances& tols) {
    const double radius = sc.sphere_radius;
    Point3 pole;
    if (const auto* fixed = std::get_if<Point3>(&pole_choice)) {
        pole = *fixed;
        if (std::abs(distance(pole, sc.sphere_center) - radius) > 1e-9 * (1.0 + radius)) {
            throw PolePlacementError("stereographic_project: pole is not on the sphere");
        }
        const double slack = tols.separation * std::max(1.0, radius);
        for (std::size_t i = 0; i < sc.circles.size(); ++i) {
            if (std::abs(sc.circles[i].plane.signed_distance(pole)) <= slack) {
                throw PolePlacementError("stereographic_project: pole lies on circle " + std::to_string(i) +
                                         "; its image would be a line");
            }
        }
        for (std::size_t i = 0; i < sc.points.size(); ++i) {
            if (distance(sc.points[i], pole) <= slack) {
                throw PolePlacementError("stereographic_project: pole coincides with point " + std::to_string(i));
            }
        }
    } else {
        pole = choose_pole(sc, std::get<AutoPole>(pole_choice));
    }
    const Point3 u = normalized(pole - sc.sphere_center);
    const Basis basis = orthogonal_basis(u);
    auto project = [&](Point3 x) {
        const double t = radius / (radius - dot(u, x - sc.sphere_center));
        const Point3 y = pole + t * (x - pole) - sc.sphere_center;
        return Point2{dot(basis.e1, y), dot(basis.e2, y)};
    };

    Projection out;
    out.pole = pole;
    out.config.tols = tols;
    for (const auto& p : sc.points) {
        out.config.points.push_back(project(p));
    }
    for (std::size_t i = 0; i < sc.circles.size(); ++i) {
        const auto& c = sc.circles[i];
        const Basis in_plane = orthogonal_basis(c.plane.normal);
        auto sample = [&](double theta) {
            return project(c.center + c.radius * std::cos(theta) * in_plane.e1 +
                           c.radius * std::sin(theta) * in_plane.e2);
        };
        const Circle image = circumcircle(sample(0.0), sample(2.0 * kPi / 3.0), sample(4.0 * kPi / 3.0));
        double worst = 0.0;
        for (int k = 0; k < kProjectionSamples; ++k) {
            worst = std::max(worst, image.residual(sample((k + 0.5) * 2.0 * kPi / kProjectionSamples)));
        }
        if (worst > tols.incidence * std::max(1.0, image.radius)) {
            throw PolePlacementError("stereographic_project: image of circle " + std::to_string(i) +
                                     " failed verification (residual " + std::to_string(worst) + ")");
        }
        out.max_sample_residual = std::max(out.max_sample_residual, worst);
        out.config.circles.push_back(image);
    }
    out.config.incidence = sc.incidence;
    return out;
}

PappusOracle pappus_oracle() {
    // Three points on each of two lines.
    const std::array<Point2, 3> a{Point2{0.0, 0.0}, Point2{2.0, 0.0}, Point2{5.0, 0.0}};
    const Point2 base{1.0, 3.0};
    const Point2 dir{1.0, 0.2};
    const std::array<Point2, 3> b{base, base + 1.5 * dir, base + 4.0 * dir};
    auto meet = [](Point2 p, Point2 q, Point2 r, Point2 s) {
        const Point2 d1 = q - p;
        const Point2 d2 = s - r;
        const double t = cross(r - p, d2) / cross(d1, d2);
        return p + t * d1;
    };
    PappusOracle out;
    out.points.assign(a.begin(), a.end());
    out.points.insert(out.points.end(), b.begin(), b.end());
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        const auto ui = static_cast<std::size_t>(i);
        const auto uj = static_cast<std::size_t>(j);
        out.points.push_back(meet(a[ui], b[uj], a[uj], b[ui]));
    }
    std::vector<Block> lines;
    const int n = static_cast<int>(out.points.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                const auto pi = out.points[static_cast<std::size_t>(i)];
                const auto pj = out.points[static_cast<std::size_t>(j)];
                const auto pk = out.points[static_cast<std::size_t>(k)];
                if (std::abs(collinearity(pi, pj, pk)) <= 1e-9) {
                    lines.push_back({i, j, k});
                }
            }
        }
    }
    out.structure = IncidenceStructure(n, std::move(lines), "pappus");
    return out;
}

}  // namespace confviz
