#include "confviz/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <string>

#include "confviz/error.hpp"

namespace confviz {

Circle circumcircle(Point2 p, Point2 q, Point2 r) {
    const Point2 b = q - p;
    const Point2 c = r - p;
    const double bb = dot(b, b);
    const double cc = dot(c, c);
    const double scale = std::max({bb, cc, dot(r - q, r - q)});
    if (scale == 0.0 || std::min({bb, cc, dot(r - q, r - q)}) <= 1e-24 * scale) {
        throw DegeneracyError("circumcircle: coincident points");
    }
    const double d = 2.0 * cross(b, c);
    if (std::abs(d) <= 2e-12 * scale) {
        throw DegeneracyError("circumcircle: collinear points");
    }
    const Point2 u{(c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d};
    return {p + u, u.norm()};
}

double collinearity(Point2 a, Point2 b, Point2 c) {
    const double s = std::max({dot(b - a, b - a), dot(c - a, c - a), dot(c - b, c - b)});
    if (s == 0.0) {
        return 0.0;
    }
    return cross(b - a, c - a) / s;
}

double concyclicity(Point2 a, Point2 b, Point2 c, Point2 d) {
    const Point2 p = b - a;
    const Point2 q = c - a;
    const Point2 r = d - a;
    const double s = std::max({dot(p, p), dot(q, q), dot(r, r)});
    if (s == 0.0) {
        return 0.0;
    }
    Eigen::Matrix3d m;
    m << p.x, p.y, dot(p, p), q.x, q.y, dot(q, q), r.x, r.y, dot(r, r);
    return m.determinant() / (s * s);
}

CircleFit fit_circle(std::span<const Point2> pts) {
    if (pts.size() < 3) {
        throw ParameterError("fit_circle needs at least 3 points, got " + std::to_string(pts.size()));
    }
    const auto n = static_cast<Eigen::Index>(pts.size());
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    for (auto p : pts) {
        mean += Eigen::Vector2d(p.x, p.y);
    }
    mean /= static_cast<double>(n);
    Eigen::MatrixXd centered(n, 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& p = pts[static_cast<std::size_t>(i)];
        centered.row(i) << p.x - mean.x(), p.y - mean.y();
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> spread(centered);
    const auto sv = spread.singularValues();
    if (sv(0) == 0.0 || sv(1) <= 1e-10 * sv(0)) {
        throw DegeneracyError("fit_circle: points are collinear");
    }
    const double scale = sv(0) / std::sqrt(static_cast<double>(n));

    // x^2 + y^2 + D x + E y + F = 0 in centred, scaled coordinates.
    Eigen::MatrixXd a(n, 3);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = centered(i, 0) / scale;
        const double y = centered(i, 1) / scale;
        a.row(i) << x, y, 1.0;
        rhs(i) = -(x * x + y * y);
    }
    const Eigen::Vector3d def = a.colPivHouseholderQr().solve(rhs);
    double cx = -def(0) / 2.0;
    double cy = -def(1) / 2.0;
    double r = std::sqrt(std::max(0.0, cx * cx + cy * cy - def(2)));

    // Gauss-Newton on sum (|p - c| - r)^2.
    for (int iter = 0; iter < 100; ++iter) {
        Eigen::MatrixXd j(n, 3);
        Eigen::VectorXd res(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double dx = centered(i, 0) / scale - cx;
            const double dy = centered(i, 1) / scale - cy;
            const double d = std::hypot(dx, dy);
            if (d == 0.0) {
                throw DegeneracyError("fit_circle: a point coincides with the fitted centre");
            }
            res(i) = d - r;
            j.row(i) << -dx / d, -dy / d, -1.0;
        }
        const Eigen::Vector3d step = j.colPivHouseholderQr().solve(-res);
        cx += step(0);
        cy += step(1);
        r += step(2);
        if (step.norm() <= 1e-15 * (1.0 + r)) {
            break;
        }
    }
    CircleFit fit;
    fit.circle = {{mean.x() + scale * cx, mean.y() + scale * cy}, scale * std::abs(r)};
    for (auto p : pts) {
        fit.max_residual = std::max(fit.max_residual, fit.circle.residual(p));
    }
    return fit;
}

std::vector<Point2> intersect_circles(const Circle& a, const Circle& b, double tangency) {
    const Point2 delta = b.center - a.center;
    const double d = delta.norm();
    if (d == 0.0) {
        return {};
    }
    const double along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    const double h2 = a.radius * a.radius - along * along;
    const double tol = tangency * std::max(1.0, a.radius * a.radius);
    const Point2 u = (1.0 / d) * delta;
    const Point2 foot = a.center + along * u;
    if (h2 < -tol) {
        return {};
    }
    if (h2 <= tol) {
        return {foot};
    }
    const double h = std::sqrt(h2);
    const Point2 perp{-u.y, u.x};
    return {foot + h * perp, foot - h * perp};
}

}  // namespace confviz
