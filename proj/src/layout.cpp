#include "confviz/layout.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "confviz/error.hpp"
#include "confviz/families.hpp"

namespace confviz {

namespace {

constexpr double kPi = std::numbers::pi;

Point2 polar(double r, double angle) { return {r * std::cos(angle), r * std::sin(angle)}; }

void require_unit_distance(const Layout& l, const Tolerances& tol, const char* which) {
    const double dev = max_edge_deviation(l);
    if (dev > tol.incidence) {
        throw ParameterError(std::string("layout_product: ") + which + " layout is not unit-distance (deviation " +
                             std::to_string(dev) + ")");
    }
}

}  // namespace

double max_edge_deviation(const Layout& l) {
    double worst = 0.0;
    for (auto [u, v] : l.graph.edges()) {
        worst = std::max(worst, std::abs(distance(l.pos.at(static_cast<std::size_t>(u)),
                                                  l.pos.at(static_cast<std::size_t>(v))) - 1.0));
    }
    return worst;
}

double min_separation(const std::vector<Point2>& pos) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pos.size(); ++i) {
        for (std::size_t j = i + 1; j < pos.size(); ++j) {
            best = std::min(best, distance(pos[i], pos[j]));
        }
    }
    return best;
}

Layout layout_polygon(int n) {
    if (n < 3) {
        throw ParameterError("layout_polygon requires n >= 3, got " + std::to_string(n));
    }
    Layout l;
    l.graph = cycle_graph(n);
    const double radius = 1.0 / (2.0 * std::sin(kPi / n));
    for (int k = 0; k < n; ++k) {
        l.pos.push_back(polar(radius, 2.0 * kPi * k / n));
    }
    l.meta = {{"kind", "polygon"}, {"n", n}, {"circumradius", radius}};
    return l;
}

Layout layout_hypercube(int d, const std::variant<AngleList, Seed>& angles, const Tolerances& tol) {
    if (d < 1) {
        throw ParameterError("layout_hypercube requires d >= 1, got " + std::to_string(d));
    }
    Layout l;
    l.graph = hypercube_graph(d);
    auto place = [&](const AngleList& theta) {
        std::vector<Point2> pos;
        for (int v = 0; v < (1 << d); ++v) {
            Point2 p;
            for (int i = 0; i < d; ++i) {
                if (v & (1 << i)) {
                    p = p + polar(1.0, theta[static_cast<std::size_t>(i)]);
                }
            }
            pos.push_back(p);
        }
        return pos;
    };
    if (const auto* explicit_angles = std::get_if<AngleList>(&angles)) {
        if (explicit_angles->size() != static_cast<std::size_t>(d)) {
            throw ParameterError("layout_hypercube: expected " + std::to_string(d) + " angles, got " +
                                 std::to_string(explicit_angles->size()));
        }
        l.pos = place(*explicit_angles);
        if (min_separation(l.pos) <= tol.separation) {
            throw DegeneracyError("layout_hypercube: the given angles make two vertices coincide");
        }
        l.meta = {{"kind", "hypercube"}, {"d", d}, {"angles", *explicit_angles}};
        return l;
    }
    const Seed seed = std::get<Seed>(angles);
    SeededRng rng(seed);
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        AngleList theta;
        for (int i = 0; i < d; ++i) {
            theta.push_back(rng.uniform(0.0, 2.0 * kPi));
        }
        l.pos = place(theta);
        if (min_separation(l.pos) > tol.separation) {
            l.meta = {{"kind", "hypercube"}, {"d", d}, {"angles", theta}, {"seed", seed.value}, {"attempt", attempt}};
            return l;
        }
    }
    throw SamplingError("layout_hypercube: no generic angles found with seed " + std::to_string(seed.value));
}

Layout layout_product(const Layout& la, const Layout& lb, const std::variant<double, Seed>& angle,
                      const Tolerances& tol) {
    require_unit_distance(la, tol, "first");
    require_unit_distance(lb, tol, "second");
    Layout l;
    l.graph = cartesian_product(la.graph, lb.graph);
    auto place = [&](double phi) {
        std::vector<Point2> pos;
        for (const auto& a : la.pos) {
            for (const auto& x : lb.pos) {
                pos.push_back(a + rotate(x, phi));
            }
        }
        return pos;
    };
    if (const auto* fixed = std::get_if<double>(&angle)) {
        l.pos = place(*fixed);
        if (min_separation(l.pos) <= tol.separation) {
            throw DegeneracyError("layout_product: vertices coincide at angle " + std::to_string(*fixed));
        }
        l.meta = {{"kind", "product"}, {"angle", *fixed}, {"first", la.meta}, {"second", lb.meta}};
        return l;
    }
    const Seed seed = std::get<Seed>(angle);
    SeededRng rng(seed);
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        const double phi = rng.uniform(0.0, 2.0 * kPi);
        l.pos = place(phi);
        if (min_separation(l.pos) > tol.separation) {
            l.meta = {{"kind", "product"}, {"angle", phi},       {"seed", seed.value},
                      {"attempt", attempt}, {"first", la.meta}, {"second", lb.meta}};
            return l;
        }
    }
    throw SamplingError("layout_product: no generic angle found with seed " + std::to_string(seed.value));
}

Layout layout_gen_cuboctahedron(int n, double r_outer, double r_inner, const Tolerances& tol) {
    if (n < 3) {
        throw ParameterError("layout_gen_cuboctahedron requires n >= 3, got " + std::to_string(n));
    }
    if (!(r_outer > r_inner && r_inner > 0.0)) {
        throw ParameterError("layout_gen_cuboctahedron requires r_outer > r_inner > 0");
    }
    const double c = std::cos(kPi / n);
    const double rings[3] = {r_outer * c, (r_outer + r_inner) / 2.0, r_inner * c};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (std::abs(rings[i] - rings[j]) <= tol.separation) {
                throw ParameterError("layout_gen_cuboctahedron: ring radii " + std::to_string(rings[i]) + " and " +
                                     std::to_string(rings[j]) + " collide");
            }
        }
    }
    Layout l;
    l.graph = gen_cuboctahedron_graph(n);
    // Outer and inner edge midpoints sit on the odd multiples of pi/n, spoke
    // midpoints on the even ones.
    for (int k = 0; k < n; ++k) {
        l.pos.push_back(polar(rings[0], (2 * k + 1) * kPi / n));
    }
    for (int k = 0; k < n; ++k) {
        l.pos.push_back(polar(rings[1], 2 * k * kPi / n));
    }
    for (int k = 0; k < n; ++k) {
        l.pos.push_back(polar(rings[2], (2 * k + 1) * kPi / n));
    }
    l.meta = {{"kind", "gen_cuboctahedron"}, {"n", n}, {"r_outer", r_outer}, {"r_inner", r_inner}};
    return l;
}

}  // namespace confviz
