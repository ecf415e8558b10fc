#include <hexakit/svg.hpp>

#include <hexakit/arc_profile.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hexakit {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

const char* color_of(int k) {
    switch (k) {
        case 2: return "#d08770";
        case 3: return "#ebcb8b";
        case 4: return "#a3be8c";
        case 5: return "#b48ead";
        case 6: return "#f6c85f";
        case 7: return "#88c0d0";
        case 8: return "#81a1c1";
        default: return "#c9d1d9";
    }
}

// Path data in mathematical coordinates; the emitting group carries
// scale(1,-1), under which positive bulge keeps sweep flag 1.
std::string path_of(const PolyChainCurve& c) {
    std::string d = "M " + num(c.points[0].x) + " " + num(c.points[0].y);
    std::size_t m = c.arc_count();
    for (std::size_t i = 0; i < m; ++i) {
        ArcSegment a = c.arc(i);
        if (a.bulge_area == 0.0) {
            d += " L " + num(a.end.x) + " " + num(a.end.y);
            continue;
        }
        double chord = dist(a.start, a.end);
        double theta = solve_theta(std::fabs(a.bulge_area) / (chord * chord));
        double radius = chord / (2.0 * std::sin(theta));
        int large = theta > M_PI / 2.0 ? 1 : 0;
        int sweep = a.bulge_area > 0.0 ? 1 : 0;
        d += " A " + num(radius) + " " + num(radius) + " 0 " +
             std::to_string(large) + " " + std::to_string(sweep) + " " +
             num(a.end.x) + " " + num(a.end.y);
    }
    d += " Z";
    return d;
}

} // namespace

std::string cluster_svg(const Cluster& c) {
    check_structure(c);
    int inf = c.infinite_cell_id();
    int ncells = static_cast<int>(c.cells.size());

    std::vector<PolyChainCurve> curves;
    curves.reserve(ncells);
    for (int i = 0; i < ncells; ++i) curves.push_back(cell_curve(c, i));

    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const PolyChainCurve& cv : curves)
        for (const Point& p : sample_polyline(cv, 1e-3)) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
    double span = std::max(x1 - x0, y1 - y0);
    if (span <= 0.0) span = 1.0;
    double pad = 0.05 * span;
    double stroke = span / 400.0;
    double fs = span / 30.0; // legend font size

    std::set<int> voids(c.chambers[0].cells.begin(), c.chambers[0].cells.end());
    voids.erase(inf);
    std::map<int, int> k_counts;
    for (std::size_t h = 1; h < c.chambers.size(); ++h)
        for (int cid : c.chambers[h].cells) ++k_counts[cell_k(c, cid)];

    // flipped frame: y -> -y
    double vx = x0 - pad;
    double vy = -(y1 + pad);
    double vw = (x1 - x0) + 2.0 * pad;
    double vh = (y1 - y0) + 2.0 * pad;
    double legend_w = fs * 9.0;

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(vx) +
         " " + num(vy) + " " + num(vw + legend_w) + " " + num(vh) + "\">\n";
    s += " <defs>\n"
         "  <pattern id=\"voidhatch\" patternUnits=\"userSpaceOnUse\" width=\"" +
         num(span / 60.0) + "\" height=\"" + num(span / 60.0) +
         "\" patternTransform=\"rotate(45)\">\n"
         "   <rect width=\"" + num(span / 60.0) + "\" height=\"" +
         num(span / 60.0) + "\" fill=\"#f4f4f4\"/>\n"
         "   <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"" + num(span / 60.0) +
         "\" stroke=\"#999999\" stroke-width=\"" + num(stroke) + "\"/>\n"
         "  </pattern>\n"
         " </defs>\n";
    s += " <g transform=\"scale(1 -1)\" stroke=\"#333333\" stroke-width=\"" +
         num(stroke) + "\" stroke-linejoin=\"round\">\n";

    for (std::size_t h = 1; h < c.chambers.size(); ++h)
        for (int cid : c.chambers[h].cells)
            s += "  <path d=\"" + path_of(curves[cid]) + "\" fill=\"" +
                 color_of(cell_k(c, cid)) + "\"/>\n";
    for (int cid : voids)
        s += "  <path d=\"" + path_of(curves[cid]) +
             "\" fill=\"url(#voidhatch)\"/>\n";
    s += "  <path d=\"" + path_of(curves[inf]) +
         "\" fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"" +
         num(2.0 * stroke) + "\"/>\n";
    s += " </g>\n";

    // legend sits right of the drawing, in unflipped coordinates
    double lx = vx + vw + fs * 0.5;
    double ly = vy + fs * 1.5;
    s += " <g font-family=\"monospace\" font-size=\"" + num(fs) + "\">\n";
    for (auto& [k, count] : k_counts) {
        s += "  <rect x=\"" + num(lx) + "\" y=\"" + num(ly - fs * 0.8) +
             "\" width=\"" + num(fs) + "\" height=\"" + num(fs) +
             "\" fill=\"" + color_of(k) + "\" stroke=\"#333333\" stroke-width=\"" +
             num(stroke) + "\"/>\n";
        s += "  <text x=\"" + num(lx + fs * 1.4) + "\" y=\"" + num(ly) +
             "\">k=" + std::to_string(k) + " (" + std::to_string(count) +
             ")</text>\n";
        ly += fs * 1.5;
    }
    if (!voids.empty()) {
        s += "  <rect x=\"" + num(lx) + "\" y=\"" + num(ly - fs * 0.8) +
             "\" width=\"" + num(fs) + "\" height=\"" + num(fs) +
             "\" fill=\"url(#voidhatch)\" stroke=\"#333333\" stroke-width=\"" +
             num(stroke) + "\"/>\n";
        s += "  <text x=\"" + num(lx + fs * 1.4) + "\" y=\"" + num(ly) +
             "\">void (" + std::to_string(voids.size()) + ")</text>\n";
    }
    s += " </g>\n</svg>\n";
    return s;
}

} // namespace hexakit
