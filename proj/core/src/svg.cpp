#include "flatpants/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace flatpants {

namespace {

const char* const kIdentColor[3] = {"#c0392b", "#1e8449", "#1f618d"};

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // flush -0
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// y flipped for screen coordinates
std::string xy(Vec2 p) { return fmt(p.x) + " " + fmt(-p.y); }

void line(std::string& out, Vec2 a, Vec2 b, const std::string& cls, const std::string& attrs) {
    out += "  <line class=\"" + cls + "\" x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(-a.y) +
           "\" x2=\"" + fmt(b.x) + "\" y2=\"" + fmt(-b.y) + "\" " + attrs + "/>\n";
}

}  // namespace

std::string emit_svg(const Development& d) {
    double xmin = d.s[0].x, xmax = d.s[0].x, ymin = d.s[0].y, ymax = d.s[0].y;
    auto grow = [&](Vec2 p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    };
    for (Vec2 p : d.s) grow(p);
    for (const Rectangle& r : d.rect)
        for (Vec2 p : r.corner) grow(p);

    const double dim = std::max(xmax - xmin, ymax - ymin);
    const double pad = 0.05 * dim;
    const double stroke = 0.008 * dim;
    const double font = 0.06 * dim;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(xmin - pad) + " " +
           fmt(-ymax - pad) + " " + fmt(xmax - xmin + 2 * pad) + " " +
           fmt(ymax - ymin + 2 * pad) + "\">\n";

    out += " <g fill=\"#f4efe6\" stroke=\"#6b6b6b\" stroke-width=\"" + fmt(stroke) +
           "\" stroke-linejoin=\"round\">\n";
    out += "  <path class=\"face face-T\" d=\"M " + xy(d.s[0]) + " L " + xy(d.s[1]) + " L " +
           xy(d.s[2]) + " Z\"/>\n";
    for (int i = 0; i < 3; ++i) {
        const Rectangle& r = d.rect[i];
        if (r.collapsed) continue;
        out += "  <path class=\"face face-R" + std::to_string(i + 1) + "\" d=\"M " +
               xy(r.corner[0]) + " L " + xy(r.corner[1]) + " L " + xy(r.corner[2]) + " L " +
               xy(r.corner[3]) + " Z\"/>\n";
    }
    out += " </g>\n";

    out += " <g stroke-width=\"" + fmt(2.0 * stroke) + "\" stroke-linecap=\"round\">\n";
    for (int i = 0; i < 3; ++i) {
        line(out, d.boundary[i][0], d.boundary[i][1], "boundary boundary-" + std::to_string(i + 1),
             "stroke=\"#221f1b\"");
    }
    for (int i = 0; i < 3; ++i) {
        const Identification& id = d.ident[i];
        if (id.length <= 0.0) continue;
        const std::string cls = "ident ident-" + std::to_string(i + 1);
        const std::string attrs = std::string("stroke=\"") + kIdentColor[i] + "\"";
        line(out, id.a, id.a + id.length * id.normal, cls, attrs);
        line(out, id.b, id.b + id.length * id.normal, cls, attrs);
    }
    out += " </g>\n";

    out += " <g fill=\"#221f1b\">\n";
    for (int i = 0; i < 3; ++i) {
        out += "  <circle class=\"cone\" cx=\"" + fmt(d.s[i].x) + "\" cy=\"" + fmt(-d.s[i].y) +
               "\" r=\"" + fmt(1.6 * stroke) + "\"/>\n";
    }
    out += " </g>\n";

    out += " <g font-family=\"sans-serif\" font-size=\"" + fmt(font) +
           "\" text-anchor=\"middle\" fill=\"#221f1b\">\n";
    for (int i = 0; i < 3; ++i) {
        const Vec2 mid = 0.5 * (d.boundary[i][0] + d.boundary[i][1]);
        const Vec2 pos = mid + (0.45 * font) * d.rect[i].normal;
        out += "  <text class=\"boundary-label\" x=\"" + fmt(pos.x) + "\" y=\"" +
               fmt(-pos.y + 0.35 * font) + "\">c" + std::to_string(i + 1) + "</text>\n";
    }
    out += " </g>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace flatpants
