#pragma once

#include <cstddef>
#include <vector>

namespace hexakit {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

Point operator+(Point a, Point b);
Point operator-(Point a, Point b);
Point operator*(double s, Point p);
double dot(Point a, Point b);
double cross(Point a, Point b);
double norm(Point p);
double dist(Point a, Point b);

// Circular arc from start to end enclosing signed area bulge_area against its
// chord.  Sign convention: a counter-clockwise unit circle split at (+-1, 0)
// yields two arcs of bulge +pi/2 each, i.e. positive bulge means the loop
// "arc then chord back" is counter-clockwise (the arc lies right of the
// oriented chord).
struct ArcSegment {
  Point start;
  Point end;
  double bulge_area = 0.0;
};

double arc_length(const ArcSegment& a);

// Same endpoints, opposite traversal; encloses the same unsigned area on the
// mirrored side, so the bulge flips sign.
ArcSegment reversed(const ArcSegment& a);

// Appends a polyline approximating the arc with sagitta error <= tol,
// excluding the final endpoint so consecutive arcs chain without duplicates.
void sample_arc(const ArcSegment& a, double tol, std::vector<Point>& out);

// integral of x dy along the straight chord p -> q.
double segment_integral(Point p, Point q);

double shoelace(const std::vector<Point>& pts);

// Closed chain of >= 2 circular arcs: node i connects to node i+1 (mod k)
// with signed bulge_area bulges[i].
struct MarkedCurve {
  std::vector<Point> nodes;
  std::vector<double> bulges;

  MarkedCurve() = default;
  MarkedCurve(std::vector<Point> nodes_, std::vector<double> bulges_);

  std::size_t size() const { return nodes.size(); }
  ArcSegment arc(std::size_t i) const;
};

double curve_length(const MarkedCurve& c);
double oriented_area(const MarkedCurve& c);

// Area enclosed by the sub-arc from node i forward (cyclically) to node j,
// closed with the straight secant j -> i.
double secant_area(const MarkedCurve& c, std::size_t i, std::size_t j);

double clamp_bulge(double b); // clamp to [-1/2, 1/2]
double sigma(const MarkedCurve& c);

std::vector<Point> sample_polyline(const MarkedCurve& c, double tol);

// No proper self-crossing of the sampled polyline (tolerance = sampling tol).
bool curve_is_simple(const MarkedCurve& c, double tol);

// Closed arc chain with a distinguished subset of nodes ("corners"); the run
// of arcs between consecutive corners is a gap.  node_index holds the
// positions of the corners inside points, strictly increasing from 0.
struct PolyChainCurve {
  std::vector<Point> points;
  std::vector<double> bulges;
  std::vector<std::size_t> node_index;

  PolyChainCurve() = default;
  PolyChainCurve(std::vector<Point> points_, std::vector<double> bulges_,
                 std::vector<std::size_t> node_index_);

  std::size_t corner_count() const { return node_index.size(); }
  std::size_t arc_count() const { return points.size(); }
  ArcSegment arc(std::size_t i) const;

  // Signed area of gap i closed with the secant from corner i+1 back to
  // corner i.
  double gap_secant_area(std::size_t i) const;
};

double curve_length(const PolyChainCurve& c);
double oriented_area(const PolyChainCurve& c);
double sigma(const PolyChainCurve& c); // over gap secant areas
std::vector<Point> sample_polyline(const PolyChainCurve& c, double tol);
bool curve_is_simple(const PolyChainCurve& c, double tol);

MarkedCurve as_marked(const PolyChainCurve& c); // every point a corner

} // namespace hexakit
