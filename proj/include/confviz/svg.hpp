#pragma once

#include <string>

#include "confviz/layout.hpp"
#include "confviz/point_circle.hpp"

namespace confviz {

struct SvgOptions {
    bool labels = false;
    double width_px = 600.0;
};

// SVG 1.1 documents. The viewBox covers every point and circle plus a 5%
// margin; y grows upwards in the drawing. Output is a pure function of the
// input (fixed number formatting, input order).
std::string render_svg(const PointCircleConfig& pcc, const SvgOptions& opts = {});
std::string render_svg(const Layout& l, const SvgOptions& opts = {});

}  // namespace confviz
