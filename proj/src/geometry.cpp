#include <hexakit/geometry.hpp>

#include <hexakit/arc_profile.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hexakit {

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point p) { return std::hypot(p.x, p.y); }
double dist(Point a, Point b) { return norm(b - a); }

namespace {

constexpr double k_straight_eps = 1e-14; // |bulge|/chord^2 below this is a segment

struct ArcFrame {
  Point center;
  double radius;
  double angle0; // angle of start around center
  double sweep;  // signed, = sign(bulge) * 2 theta
};

// Center sits at mid - n * R cos(theta) with n the right-hand chord normal
// scaled by sign(bulge); cos(theta) < 0 automatically moves it across the
// chord for major arcs.
ArcFrame arc_frame(const ArcSegment& a, double chord, double q) {
  const double theta = solve_theta(q);
  const double r = chord / (2.0 * std::sin(theta));
  const Point d = a.end - a.start;
  const double s = a.bulge_area >= 0.0 ? 1.0 : -1.0;
  const Point n = (s / chord) * Point{d.y, -d.x};
  const Point mid = 0.5 * (a.start + a.end);
  const Point c = mid - (r * std::cos(theta)) * n;
  return {c, r, std::atan2(a.start.y - c.y, a.start.x - c.x), s * 2.0 * theta};
}

} // namespace

double arc_length(const ArcSegment& a) {
  const double chord = dist(a.start, a.end);
  if (chord == 0.0)
    throw std::invalid_argument("arc_length: coincident endpoints");
  return arc_len(chord, std::fabs(a.bulge_area));
}

ArcSegment reversed(const ArcSegment& a) {
  return {a.end, a.start, -a.bulge_area};
}

void sample_arc(const ArcSegment& a, double tol, std::vector<Point>& out) {
  if (!(tol > 0.0))
    throw std::invalid_argument("sample_arc: tol must be positive");
  const double chord = dist(a.start, a.end);
  if (chord == 0.0)
    throw std::invalid_argument("sample_arc: coincident endpoints");
  out.push_back(a.start);
  const double q = std::fabs(a.bulge_area) / (chord * chord);
  if (q < k_straight_eps)
    return;
  const ArcFrame f = arc_frame(a, chord, q);
  const double theta = 0.5 * std::fabs(f.sweep);
  // sagitta of each sub-arc: R (1 - cos(theta/n)) <= R theta^2 / (2 n^2)
  long n = std::lround(std::ceil(theta * std::sqrt(f.radius / (2.0 * tol))));
  n = std::clamp(n, 1L, 100000L);
  for (long k = 1; k < n; ++k) {
    const double ang = f.angle0 + f.sweep * static_cast<double>(k) / static_cast<double>(n);
    out.push_back(f.center + f.radius * Point{std::cos(ang), std::sin(ang)});
  }
}

double segment_integral(Point p, Point q) {
  return 0.5 * (p.x + q.x) * (q.y - p.y);
}

double shoelace(const std::vector<Point>& pts) {
  double acc = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    acc += cross(pts[i], pts[(i + 1) % n]);
  return 0.5 * acc;
}

MarkedCurve::MarkedCurve(std::vector<Point> nodes_, std::vector<double> bulges_)
    : nodes(std::move(nodes_)), bulges(std::move(bulges_)) {
  if (nodes.size() < 2)
    throw std::invalid_argument("MarkedCurve: need at least 2 nodes");
  if (nodes.size() != bulges.size())
    throw std::invalid_argument("MarkedCurve: nodes/bulges size mismatch");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double chord = dist(nodes[i], nodes[(i + 1) % nodes.size()]);
    if (chord == 0.0)
      throw std::invalid_argument("MarkedCurve: coincident consecutive nodes");
    if (std::fabs(bulges[i]) / (chord * chord) > p_max())
      throw std::domain_error("MarkedCurve: bulge beyond p_max");
  }
}

ArcSegment MarkedCurve::arc(std::size_t i) const {
  return {nodes[i], nodes[(i + 1) % nodes.size()], bulges[i]};
}

double curve_length(const MarkedCurve& c) {
  double acc = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i)
    acc += arc_length(c.arc(i));
  return acc;
}

double oriented_area(const MarkedCurve& c) {
  double acc = shoelace(c.nodes);
  for (double b : c.bulges)
    acc += b;
  return acc;
}

double secant_area(const MarkedCurve& c, std::size_t i, std::size_t j) {
  const std::size_t k = c.size();
  if (i >= k || j >= k || i == j)
    throw std::invalid_argument("secant_area: bad node indices");
  double acc = 0.0;
  for (std::size_t m = i; m != j; m = (m + 1) % k)
    acc += segment_integral(c.nodes[m], c.nodes[(m + 1) % k]) + c.bulges[m];
  acc += segment_integral(c.nodes[j], c.nodes[i]);
  return acc;
}

double clamp_bulge(double b) { return std::clamp(b, -0.5, 0.5); }

double sigma(const MarkedCurve& c) {
  double acc = 0.0;
  for (double b : c.bulges)
    acc += clamp_bulge(b);
  return acc;
}

std::vector<Point> sample_polyline(const MarkedCurve& c, double tol) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    sample_arc(c.arc(i), tol, out);
  return out;
}

namespace {

bool proper_cross(Point a, Point b, Point c, Point d) {
  const double d1 = cross(d - c, a - c);
  const double d2 = cross(d - c, b - c);
  const double d3 = cross(b - a, c - a);
  const double d4 = cross(b - a, d - a);
  return d1 * d2 < 0.0 && d3 * d4 < 0.0;
}

bool polyline_is_simple(const std::vector<Point>& p) {
  const std::size_t n = p.size();
  if (n < 3)
    return true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1)
        continue; // consecutive through the wrap
      if (proper_cross(p[i], p[(i + 1) % n], p[j], p[(j + 1) % n]))
        return false;
    }
  }
  return true;
}

} // namespace

bool curve_is_simple(const MarkedCurve& c, double tol) {
  return polyline_is_simple(sample_polyline(c, tol));
}

PolyChainCurve::PolyChainCurve(std::vector<Point> points_,
                               std::vector<double> bulges_,
                               std::vector<std::size_t> node_index_)
    : points(std::move(points_)), bulges(std::move(bulges_)),
      node_index(std::move(node_index_)) {
  if (node_index.size() < 2)
    throw std::invalid_argument("PolyChainCurve: need at least 2 corners");
  if (points.size() != bulges.size())
    throw std::invalid_argument("PolyChainCurve: points/bulges size mismatch");
  if (node_index.front() != 0)
    throw std::invalid_argument("PolyChainCurve: first corner must sit at 0");
  for (std::size_t i = 0; i + 1 < node_index.size(); ++i)
    if (node_index[i] >= node_index[i + 1])
      throw std::invalid_argument("PolyChainCurve: corners not increasing");
  if (node_index.back() >= points.size())
    throw std::invalid_argument("PolyChainCurve: corner index out of range");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double chord = dist(points[i], points[(i + 1) % points.size()]);
    if (chord == 0.0)
      throw std::invalid_argument("PolyChainCurve: coincident consecutive points");
    if (std::fabs(bulges[i]) / (chord * chord) > p_max())
      throw std::domain_error("PolyChainCurve: bulge beyond p_max");
  }
}

ArcSegment PolyChainCurve::arc(std::size_t i) const {
  return {points[i], points[(i + 1) % points.size()], bulges[i]};
}

double PolyChainCurve::gap_secant_area(std::size_t i) const {
  const std::size_t n = node_index.size();
  if (i >= n)
    throw std::invalid_argument("gap_secant_area: bad gap index");
  const std::size_t s = node_index[i];
  const std::size_t e = (i + 1 < n) ? node_index[i + 1] : points.size();
  double acc = 0.0;
  for (std::size_t p = s; p < e; ++p)
    acc += segment_integral(points[p], points[(p + 1) % points.size()]) + bulges[p];
  const Point tail = points[node_index[(i + 1) % n]];
  acc += segment_integral(tail, points[s]);
  return acc;
}

double curve_length(const PolyChainCurve& c) {
  double acc = 0.0;
  for (std::size_t i = 0; i < c.arc_count(); ++i)
    acc += arc_length(c.arc(i));
  return acc;
}

double oriented_area(const PolyChainCurve& c) {
  double acc = shoelace(c.points);
  for (double b : c.bulges)
    acc += b;
  return acc;
}

double sigma(const PolyChainCurve& c) {
  double acc = 0.0;
  for (std::size_t i = 0; i < c.corner_count(); ++i)
    acc += clamp_bulge(c.gap_secant_area(i));
  return acc;
}

std::vector<Point> sample_polyline(const PolyChainCurve& c, double tol) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < c.arc_count(); ++i)
    sample_arc(c.arc(i), tol, out);
  return out;
}

bool curve_is_simple(const PolyChainCurve& c, double tol) {
  return polyline_is_simple(sample_polyline(c, tol));
}

MarkedCurve as_marked(const PolyChainCurve& c) {
  return MarkedCurve(c.points, c.bulges);
}

} // namespace hexakit
