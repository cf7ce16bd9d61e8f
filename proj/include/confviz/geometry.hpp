#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace confviz {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Point2&, const Point2&) = default;

    double norm() const { return std::hypot(x, y); }
};

inline double distance(Point2 a, Point2 b) { return (a - b).norm(); }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

inline Point2 rotate(Point2 p, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

struct Circle {
    Point2 center;
    double radius = 1.0;

    // |dist(p, center) - radius|
    double residual(Point2 p) const { return std::abs(distance(p, center) - radius); }
    friend bool operator==(const Circle&, const Circle&) = default;
};

// Defaults sized for unit-scale data.
struct Tolerances {
    double incidence = 1e-9;
    double separation = 1e-6;
    double cluster = 1e-7;
    double isometric = 1e-9;

    friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

// Throws DegeneracyError for coincident or collinear input.
Circle circumcircle(Point2 p, Point2 q, Point2 r);

struct CircleFit {
    Circle circle;
    double max_residual = 0.0;
};

// Algebraic (Kasa) fit refined by geometric Gauss-Newton. Needs >= 3
// points, not all collinear.
CircleFit fit_circle(std::span<const Point2> pts);

// Intersection points of two circles: 0, 1 (tangency within `tangency`) or
// 2 points. Coincident circles yield an empty result.
std::vector<Point2> intersect_circles(const Circle& a, const Circle& b, double tangency = 1e-12);

// Collinearity measure of three points normalised by the squared longest
// side; 0 for collinear points.
double collinearity(Point2 a, Point2 b, Point2 c);

// Signed in-circle determinant normalised by the fourth power of the point
// spread; 0 for concyclic (or collinear) quadruples.
double concyclicity(Point2 a, Point2 b, Point2 c, Point2 d);

}  // namespace confviz
