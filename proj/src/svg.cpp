#include "confviz/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace confviz {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    return s == "-0.000000" ? "0.000000" : s;
}

struct Box {
    double x0 = std::numeric_limits<double>::infinity();
    double y0 = std::numeric_limits<double>::infinity();
    double x1 = -std::numeric_limits<double>::infinity();
    double y1 = -std::numeric_limits<double>::infinity();

    void add(Point2 p, double r = 0.0) {
        x0 = std::min(x0, p.x - r);
        x1 = std::max(x1, p.x + r);
        y0 = std::min(y0, -p.y - r);
        y1 = std::max(y1, -p.y + r);
    }
};

class Doc {
public:
    Doc(Box box, const SvgOptions& opts) {
        if (box.x0 > box.x1) {
            box = Box{-1.0, -1.0, 1.0, 1.0};
        }
        double w = box.x1 - box.x0;
        double h = box.y1 - box.y0;
        extent_ = std::max({w, h, 1e-9});
        const double margin = 0.05 * extent_;
        x0_ = box.x0 - margin;
        y0_ = box.y0 - margin;
        w += 2 * margin;
        h += 2 * margin;
        const double height_px = opts.width_px * h / w;
        out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
               "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
               num(opts.width_px) + "\" height=\"" + num(height_px) + "\" viewBox=\"" + num(x0_) + " " + num(y0_) +
               " " + num(w) + " " + num(h) + "\">\n";
        out_ += "<rect x=\"" + num(x0_) + "\" y=\"" + num(y0_) + "\" width=\"" + num(w) + "\" height=\"" + num(h) +
                "\" fill=\"white\"/>\n";
    }

    void line(Point2 a, Point2 b) {
        out_ += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(-a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(-b.y) +
                "\" stroke=\"#555555\" stroke-width=\"" + num(0.004 * extent_) + "\"/>\n";
    }

    void circle(const Circle& c) {
        out_ += "<circle cx=\"" + num(c.center.x) + "\" cy=\"" + num(-c.center.y) + "\" r=\"" + num(c.radius) +
                "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"" + num(0.003 * extent_) + "\"/>\n";
    }

    void dot(Point2 p) {
        out_ += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(-p.y) + "\" r=\"" + num(0.008 * extent_) +
                "\" fill=\"black\"/>\n";
    }

    void label(Point2 p, const std::string& text) {
        std::string esc;
        for (char ch : text) {
            switch (ch) {
                case '<': esc += "&lt;"; break;
                case '>': esc += "&gt;"; break;
                case '&': esc += "&amp;"; break;
                case '"': esc += "&quot;"; break;
                default: esc += ch;
            }
        }
        out_ += "<text x=\"" + num(p.x + 0.012 * extent_) + "\" y=\"" + num(-p.y - 0.012 * extent_) +
                "\" font-family=\"sans-serif\" font-size=\"" + num(0.025 * extent_) + "\">" + esc + "</text>\n";
    }

    std::string finish() { return out_ + "</svg>\n"; }

private:
    std::string out_;
    double extent_ = 1.0;
    double x0_ = 0.0;
    double y0_ = 0.0;
};

}  // namespace

std::string render_svg(const PointCircleConfig& pcc, const SvgOptions& opts) {
    Box box;
    for (const auto& p : pcc.points) {
        box.add(p);
    }
    for (const auto& c : pcc.circles) {
        box.add(c.center, c.radius);
    }
    Doc doc(box, opts);
    for (const auto& c : pcc.circles) {
        doc.circle(c);
    }
    for (const auto& p : pcc.points) {
        doc.dot(p);
    }
    if (opts.labels) {
        for (std::size_t i = 0; i < pcc.points.size(); ++i) {
            doc.label(pcc.points[i], std::to_string(i));
        }
    }
    return doc.finish();
}

std::string render_svg(const Layout& l, const SvgOptions& opts) {
    Box box;
    for (const auto& p : l.pos) {
        box.add(p);
    }
    Doc doc(box, opts);
    for (auto [u, v] : l.graph.edges()) {
        doc.line(l.pos[static_cast<std::size_t>(u)], l.pos[static_cast<std::size_t>(v)]);
    }
    for (const auto& p : l.pos) {
        doc.dot(p);
    }
    if (opts.labels) {
        for (std::size_t i = 0; i < l.pos.size(); ++i) {
            doc.label(l.pos[i], l.graph.has_labels() ? l.graph.labels()[i] : std::to_string(i));
        }
    }
    return doc.finish();
}

}  // namespace confviz
