#include "confviz/point_circle.hpp"

#include <algorithm>
#include <string>

#include "confviz/error.hpp"

namespace confviz {

double PointCircleConfig::max_incidence_residual() const {
    double worst = 0.0;
    for (auto [p, c] : incidence) {
        worst = std::max(worst, circles.at(static_cast<std::size_t>(c)).residual(points.at(static_cast<std::size_t>(p))));
    }
    return worst;
}

IncidenceStructure incidence_structure(const PointCircleConfig& pcc) {
    std::vector<Block> blocks(pcc.circles.size());
    for (auto [p, c] : pcc.incidence) {
        blocks.at(static_cast<std::size_t>(c)).push_back(p);
    }
    return IncidenceStructure(static_cast<int>(pcc.points.size()), std::move(blocks), "point-circle incidence");
}

namespace {

void require_distinct_circles(const std::vector<Circle>& circles, double sep) {
    for (std::size_t i = 0; i < circles.size(); ++i) {
        for (std::size_t j = i + 1; j < circles.size(); ++j) {
            if (distance(circles[i].center, circles[j].center) <= sep &&
                std::abs(circles[i].radius - circles[j].radius) <= sep) {
                throw DistinctnessError("circles " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
            }
        }
    }
}

bool on_circle(const Circle& c, Point2 p, double tol) { return c.residual(p) <= tol; }

}  // namespace

PointCircleConfig circles_from_layout(const Layout& l, const CircleOptions& opts) {
    const auto& g = l.graph;
    if (l.pos.size() != static_cast<std::size_t>(g.order())) {
        throw ParameterError("circles_from_layout: layout has " + std::to_string(l.pos.size()) + " positions for " +
                             std::to_string(g.order()) + " vertices");
    }
    PointCircleConfig pcc;
    pcc.tols = opts.tols;
    pcc.points = l.pos;
    if (min_separation(l.pos) <= opts.tols.separation) {
        if (!opts.allow_degenerate) {
            throw DegeneracyError("circles_from_layout: two vertices coincide");
        }
        pcc.degenerate = true;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& nb = g.neighbors(v);
        std::vector<Point2> pts;
        for (Vertex w : nb) {
            pts.push_back(l.pos[static_cast<std::size_t>(w)]);
        }
        const std::string who = "vertex " + std::to_string(v);
        Circle circle;
        if (nb.size() < 2 || (nb.size() == 2 && !opts.allow_degree_two)) {
            throw ParameterError("circles_from_layout: " + who + " has degree " + std::to_string(nb.size()) +
                                 "; its neighbours do not determine a circle");
        }
        if (nb.size() == 2) {
            const Point2 c = l.pos[static_cast<std::size_t>(v)];
            const double d0 = distance(c, pts[0]);
            const double d1 = distance(c, pts[1]);
            if (std::abs(d0 - d1) > opts.tols.incidence) {
                throw ConcyclicityError("circles_from_layout: the two neighbours of " + who +
                                        " are not equidistant from it");
            }
            circle = {c, (d0 + d1) / 2.0};
        } else {
            CircleFit fit;
            try {
                fit = fit_circle(pts);
            } catch (const DegeneracyError&) {
                throw ConcyclicityError("circles_from_layout: neighbourhood of " + who + " is collinear");
            }
            if (fit.max_residual > opts.tols.incidence) {
                throw ConcyclicityError("circles_from_layout: neighbourhood of " + who +
                                        " is not concyclic (residual " + std::to_string(fit.max_residual) + ")");
            }
            circle = fit.circle;
        }
        pcc.circles.push_back(circle);
        for (Vertex w : nb) {
            pcc.incidence.emplace_back(w, v);
        }
    }
    require_distinct_circles(pcc.circles, opts.tols.separation);
    std::sort(pcc.incidence.begin(), pcc.incidence.end());
    return pcc;
}

PointCircleConfig realize_n3(const IncidenceStructure& c, Seed seed, const Tolerances& tols) {
    const auto cls = classify(c);
    if (cls.balanced_k != 3) {
        throw ParameterError("realize_n3 requires a balanced configuration with blocks of size 3, got " +
                             cls.type_string());
    }
    const auto n = static_cast<std::size_t>(c.point_count());
    SeededRng rng(seed);
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        std::vector<Point2> pts;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = rng.uniform(-1.0, 1.0);
            const double y = rng.uniform(-1.0, 1.0);
            pts.push_back({x, y});
        }
        bool generic = min_separation(pts) > tols.separation;
        for (std::size_t a = 0; generic && a < n; ++a) {
            for (std::size_t b = a + 1; generic && b < n; ++b) {
                for (std::size_t d = b + 1; generic && d < n; ++d) {
                    generic = std::abs(collinearity(pts[a], pts[b], pts[d])) > kGeneralPositionCollinear;
                    for (std::size_t e = d + 1; generic && e < n; ++e) {
                        generic = std::abs(concyclicity(pts[a], pts[b], pts[d], pts[e])) > kGeneralPositionConcyclic;
                    }
                }
            }
        }
        if (!generic) {
            continue;
        }
        PointCircleConfig pcc;
        pcc.tols = tols;
        pcc.points = pts;
        for (int b = 0; b < c.block_count(); ++b) {
            const auto& blk = c.block(b);
            pcc.circles.push_back(circumcircle(pts[static_cast<std::size_t>(blk[0])],
                                               pts[static_cast<std::size_t>(blk[1])],
                                               pts[static_cast<std::size_t>(blk[2])]));
            for (int p : blk) {
                pcc.incidence.emplace_back(p, b);
            }
        }
        std::sort(pcc.incidence.begin(), pcc.incidence.end());
        if (pcc.max_incidence_residual() <= tols.incidence) {
            return pcc;
        }
    }
    throw SamplingError("realize_n3: no point set in general position after " + std::to_string(kMaxResamples) +
                        " draws with seed " + std::to_string(seed.value));
}

std::vector<PointCircleConfig> split_components(const PointCircleConfig& pcc) {
    const int np = static_cast<int>(pcc.points.size());
    const auto levi = levi_graph(incidence_structure(pcc));
    std::vector<PointCircleConfig> out;
    for (const auto& comp : connected_components(levi.graph)) {
        PointCircleConfig sub;
        sub.tols = pcc.tols;
        sub.degenerate = pcc.degenerate;
        std::vector<int> point_index(pcc.points.size(), -1);
        std::vector<int> circle_index(pcc.circles.size(), -1);
        for (Vertex v : comp) {
            if (v < np) {
                point_index[static_cast<std::size_t>(v)] = static_cast<int>(sub.points.size());
                sub.points.push_back(pcc.points[static_cast<std::size_t>(v)]);
            } else {
                circle_index[static_cast<std::size_t>(v - np)] = static_cast<int>(sub.circles.size());
                sub.circles.push_back(pcc.circles[static_cast<std::size_t>(v - np)]);
            }
        }
        for (auto [p, c] : pcc.incidence) {
            if (point_index[static_cast<std::size_t>(p)] >= 0) {
                sub.incidence.emplace_back(point_index[static_cast<std::size_t>(p)],
                                           circle_index[static_cast<std::size_t>(c)]);
            }
        }
        std::sort(sub.incidence.begin(), sub.incidence.end());
        out.push_back(std::move(sub));
    }
    return out;
}

std::vector<std::pair<Point2, int>> multiple_points(const PointCircleConfig& pcc) {
    const auto& cs = pcc.circles;
    const double tol = pcc.tols.cluster;
    std::vector<Point2> reps;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            for (const Point2& p : intersect_circles(cs[i], cs[j])) {
                const bool known = std::any_of(reps.begin(), reps.end(),
                                               [&](const Point2& q) { return distance(p, q) <= tol; });
                if (!known) {
                    reps.push_back(p);
                }
            }
        }
    }
    std::vector<std::pair<Point2, int>> out;
    for (const Point2& p : reps) {
        const auto count = std::count_if(cs.begin(), cs.end(), [&](const Circle& c) { return on_circle(c, p, tol); });
        if (count > 2) {
            out.emplace_back(p, static_cast<int>(count));
        }
    }
    return out;
}

namespace {

bool has_common_point(const PointCircleConfig& pcc) {
    const auto& cs = pcc.circles;
    if (cs.size() < 2) {
        return true;
    }
    const double tol = pcc.tols.cluster;
    for (std::size_t j = 1; j < cs.size(); ++j) {
        if (distance(cs[0].center, cs[j].center) <= pcc.tols.separation &&
            std::abs(cs[0].radius - cs[j].radius) <= pcc.tols.separation) {
            continue;
        }
        for (const Point2& p : intersect_circles(cs[0], cs[j])) {
            if (std::all_of(cs.begin(), cs.end(), [&](const Circle& c) { return on_circle(c, p, tol); })) {
                return true;
            }
        }
        return false;
    }
    return true;
}

bool geometric_lineal(const PointCircleConfig& pcc) {
    const auto& cs = pcc.circles;
    const double tol = pcc.tols.incidence;
    std::vector<std::vector<char>> on(cs.size(), std::vector<char>(pcc.points.size(), 0));
    for (std::size_t c = 0; c < cs.size(); ++c) {
        for (std::size_t p = 0; p < pcc.points.size(); ++p) {
            on[c][p] = on_circle(cs[c], pcc.points[p], tol);
        }
    }
    for (std::size_t a = 0; a < cs.size(); ++a) {
        for (std::size_t b = a + 1; b < cs.size(); ++b) {
            int shared = 0;
            for (std::size_t p = 0; p < pcc.points.size(); ++p) {
                shared += on[a][p] && on[b][p];
            }
            if (shared > 1) {
                return false;
            }
        }
    }
    return true;
}

bool determining(const PointCircleConfig& pcc) {
    if (pcc.degenerate) {
        return false;
    }
    const double tol = pcc.tols.cluster;
    const auto multi = multiple_points(pcc);
    for (const auto& [q, count] : multi) {
        const bool is_config_point = std::any_of(pcc.points.begin(), pcc.points.end(),
                                                 [&](const Point2& p) { return distance(p, q) <= tol; });
        if (!is_config_point) {
            return false;
        }
    }
    for (const Point2& p : pcc.points) {
        const bool is_multiple = std::any_of(multi.begin(), multi.end(),
                                             [&](const auto& m) { return distance(p, m.first) <= tol; });
        if (!is_multiple) {
            return false;
        }
    }
    return true;
}

}  // namespace

PointCircleConfig check_flags(PointCircleConfig pcc) {
    auto& f = pcc.flags;
    f.proper = !has_common_point(pcc);
    if (pcc.circles.empty()) {
        f.isometric = true;
    } else {
        auto [lo, hi] = std::minmax_element(pcc.circles.begin(), pcc.circles.end(),
                                            [](const Circle& a, const Circle& b) { return a.radius < b.radius; });
        f.isometric = hi->radius - lo->radius <= pcc.tols.isometric;
    }
    f.lineal = geometric_lineal(pcc);
    f.determining = determining(pcc);
    f.perfect = *f.lineal && *f.isometric && *f.determining;
    return pcc;
}

PointCircleConfig invert_pointline(const std::vector<Point2>& points, const std::vector<std::vector<int>>& lines,
                                   Point2 center, double radius, const Tolerances& tols) {
    if (!(radius > 0.0)) {
        throw ParameterError("invert_pointline: inversion radius must be positive");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (distance(points[i], center) <= tols.separation) {
            throw ParameterError("invert_pointline: inversion centre coincides with point " + std::to_string(i));
        }
    }
    const double r2 = radius * radius;
    PointCircleConfig pcc;
    pcc.tols = tols;
    for (const Point2& p : points) {
        const Point2 d = p - center;
        pcc.points.push_back(center + (r2 / dot(d, d)) * d);
    }
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const auto& line = lines[li];
        if (line.size() < 2) {
            throw ParameterError("invert_pointline: line " + std::to_string(li) + " lists fewer than two points");
        }
        for (int p : line) {
            if (p < 0 || static_cast<std::size_t>(p) >= points.size()) {
                throw ParameterError("invert_pointline: line " + std::to_string(li) + " references a missing point");
            }
        }
        const Point2 a = points[static_cast<std::size_t>(line[0])];
        const Point2 b = points[static_cast<std::size_t>(line[1])];
        const double len = distance(a, b);
        if (len <= tols.separation) {
            throw ParameterError("invert_pointline: line " + std::to_string(li) + " is spanned by coincident points");
        }
        const Point2 dir = (1.0 / len) * (b - a);
        Point2 normal{-dir.y, dir.x};
        for (int p : line) {
            if (std::abs(dot(points[static_cast<std::size_t>(p)] - a, normal)) > tols.incidence * (1.0 + len)) {
                throw ParameterError("invert_pointline: points of line " + std::to_string(li) + " are not collinear");
            }
        }
        double offset = dot(a - center, normal);
        if (std::abs(offset) <= tols.separation) {
            throw ParameterError("invert_pointline: inversion centre lies on line " + std::to_string(li));
        }
        if (offset < 0.0) {
            normal = -1.0 * normal;
            offset = -offset;
        }
        const double image_radius = r2 / (2.0 * offset);
        pcc.circles.push_back({center + image_radius * normal, image_radius});
        for (int p : line) {
            pcc.incidence.emplace_back(p, static_cast<int>(li));
        }
    }
    std::sort(pcc.incidence.begin(), pcc.incidence.end());
    pcc.flags.proper = false;
    return pcc;
}

}  // namespace confviz
